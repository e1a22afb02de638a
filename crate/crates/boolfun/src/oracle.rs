//! Brute-force reference implementations.
//!
//! Every function here evaluates its quantity by definitional enumeration:
//! no butterfly, no autocorrelation, no closed forms. They exist to check
//! the fast paths and are deliberately unoptimized; size guards keep the
//! costs bounded. Guarded functions return `Error::SizeCap` above their cap.

use crate::bf::{dot, BooleanFunction};
use crate::error::{Error, Result};
use crate::vectorial::VectorialFunction;
use crate::walsh::WalshSpectrum;

/// Cap for the quadratic-cost spectrum enumeration.
pub const NAIVE_WALSH_MAX_N: u32 = 14;
/// Cap for the cubic-cost second-derivative total.
pub const NAIVE_S2_MAX_N: u32 = 10;
/// Cap for the difference-table enumeration.
pub const NAIVE_DDT_MAX_N: u32 = 12;
/// Cap for per-component scalar sweeps over all masks.
pub const NAIVE_VECTORIAL_MAX_N: u32 = 10;
/// Cap for per-component second-derivative sweeps.
pub const NAIVE_VECTORIAL_S2_MAX_N: u32 = 7;

fn guard(what: &'static str, n: u32, cap: u32) -> Result<()> {
    if n > cap {
        return Err(Error::SizeCap { what, n, cap });
    }
    Ok(())
}

/// Walsh spectrum by direct double enumeration over (a, x).
pub fn naive_walsh(f: &BooleanFunction) -> Result<WalshSpectrum> {
    guard("naive Walsh spectrum", f.n(), NAIVE_WALSH_MAX_N)?;
    let values = (0..f.size())
        .map(|a| {
            (0..f.size())
                .map(|x| if f.get(x) ^ dot(a, x) { -1i64 } else { 1 })
                .sum()
        })
        .collect();
    Ok(WalshSpectrum::from_values(f.n(), values))
}

/// wt(D_a f) by direct evaluation of f(x + a) + f(x) over all x.
pub fn naive_derivative_weight(f: &BooleanFunction, a: u64) -> u64 {
    (0..f.size()).filter(|&x| f.get(x) ^ f.get(x ^ a)).count() as u64
}

/// Signed correlation of the derivative: 2^n - 2 wt(D_a f), enumerated.
pub fn naive_derivative_fourier(f: &BooleanFunction, a: u64) -> i64 {
    f.size() as i64 - 2 * naive_derivative_weight(f, a) as i64
}

/// Sum of wt(D_a f) over nonzero a.
pub fn naive_s1(f: &BooleanFunction) -> u64 {
    (1..f.size()).map(|a| naive_derivative_weight(f, a)).sum()
}

/// Sum of wt(D_a f)^2 over nonzero a.
pub fn naive_s1_sq(f: &BooleanFunction) -> u64 {
    (1..f.size())
        .map(|a| {
            let w = naive_derivative_weight(f, a);
            w * w
        })
        .sum()
}

/// Sum of wt(D_b D_a f) over nonzero a and b, by materializing each first
/// derivative table and enumerating its derivatives.
pub fn naive_s2(f: &BooleanFunction) -> Result<u64> {
    guard("naive second-derivative total", f.n(), NAIVE_S2_MAX_N)?;
    let size = f.size();
    let mut total = 0u64;
    for a in 1..size {
        let da: Vec<u8> = (0..size).map(|x| u8::from(f.get(x) ^ f.get(x ^ a))).collect();
        for b in 1..size {
            let mut wt = 0u64;
            for (x, &v) in da.iter().enumerate() {
                wt += u64::from(v ^ da[x ^ b as usize]);
            }
            total += wt;
        }
    }
    Ok(total)
}

/// Differential uniformity and the APN verdict by enumerating every
/// difference row.
pub fn naive_ddt_apn(f: &VectorialFunction) -> Result<(u64, bool)> {
    guard("naive difference table", f.n(), NAIVE_DDT_MAX_N)?;
    let size = f.size();
    let mut delta = 0u64;
    for a in 1..size {
        let mut row = vec![0u64; size as usize];
        for x in 0..size {
            row[(f.get(x ^ a) ^ f.get(x)) as usize] += 1;
        }
        delta = delta.max(row.into_iter().max().unwrap_or(0));
    }
    Ok((delta, delta == 2))
}

fn component_table(f: &VectorialFunction, mask: u64) -> Vec<u8> {
    (0..f.size())
        .map(|x| u8::from(dot(mask, f.get(x))))
        .collect()
}

fn table_derivative_weight(t: &[u8], a: u64) -> u64 {
    t.iter()
        .enumerate()
        .map(|(x, &v)| u64::from(v ^ t[x ^ a as usize]))
        .sum()
}

/// Sum of wt(D_a F_m) over nonzero masks m and nonzero a.
pub fn naive_vs1(f: &VectorialFunction) -> Result<u64> {
    guard("naive component sweep", f.n(), NAIVE_VECTORIAL_MAX_N)?;
    let mut total = 0u64;
    for mask in 1..f.size() {
        let t = component_table(f, mask);
        for a in 1..f.size() {
            total += table_derivative_weight(&t, a);
        }
    }
    Ok(total)
}

/// Sum of wt(D_a F_m)^2 over nonzero masks m and nonzero a.
pub fn naive_vs1_sq(f: &VectorialFunction) -> Result<u64> {
    guard("naive component sweep", f.n(), NAIVE_VECTORIAL_MAX_N)?;
    let mut total = 0u64;
    for mask in 1..f.size() {
        let t = component_table(f, mask);
        for a in 1..f.size() {
            let w = table_derivative_weight(&t, a);
            total += w * w;
        }
    }
    Ok(total)
}

/// Sum of wt(D_b D_a F_m) over nonzero masks and nonzero a, b.
pub fn naive_vs2(f: &VectorialFunction) -> Result<u64> {
    guard(
        "naive component second-derivative sweep",
        f.n(),
        NAIVE_VECTORIAL_S2_MAX_N,
    )?;
    let size = f.size();
    let mut total = 0u64;
    for mask in 1..size {
        let t = component_table(f, mask);
        for a in 1..size {
            let da: Vec<u8> = (0..size)
                .map(|x| t[x as usize] ^ t[(x ^ a) as usize])
                .collect();
            for b in 1..size {
                total += table_derivative_weight(&da, b);
            }
        }
    }
    Ok(total)
}

/// Sum over nonzero masks m and ALL directions a of the squared derivative
/// correlation F(D_a F_m)^2, where F(g) = 2^n - 2 wt(g).
pub fn naive_fsq(f: &VectorialFunction) -> Result<u64> {
    guard(
        "naive component second-derivative sweep",
        f.n(),
        NAIVE_VECTORIAL_S2_MAX_N,
    )?;
    let size = f.size() as i64;
    let mut total = 0u64;
    for mask in 1..f.size() {
        let t = component_table(f, mask);
        for a in 0..f.size() {
            let fourier = size - 2 * table_derivative_weight(&t, a) as i64;
            total += (fourier * fourier) as u64;
        }
    }
    Ok(total)
}

/// For one fixed direction a: the sum of wt(D_b D_a F_m) over nonzero masks
/// m and nonzero b.
pub fn naive_per_direction_s2(f: &VectorialFunction, a: u64) -> Result<u64> {
    guard(
        "naive component second-derivative sweep",
        f.n(),
        NAIVE_VECTORIAL_S2_MAX_N,
    )?;
    let size = f.size();
    let mut total = 0u64;
    for mask in 1..size {
        let t = component_table(f, mask);
        let da: Vec<u8> = (0..size)
            .map(|x| t[x as usize] ^ t[(x ^ a) as usize])
            .collect();
        for b in 1..size {
            total += table_derivative_weight(&da, b);
        }
    }
    Ok(total)
}

/// For one fixed direction a: the sum of F(D_a F_m)^2 over ALL masks m,
/// the zero mask included.
pub fn naive_per_direction_fsq(f: &VectorialFunction, a: u64) -> Result<u64> {
    guard(
        "naive component second-derivative sweep",
        f.n(),
        NAIVE_VECTORIAL_S2_MAX_N,
    )?;
    let size = f.size() as i64;
    let mut total = 0u64;
    for mask in 0..f.size() {
        let t = component_table(f, mask);
        let fourier = size - 2 * table_derivative_weight(&t, a) as i64;
        total += (fourier * fourier) as u64;
    }
    Ok(total)
}
