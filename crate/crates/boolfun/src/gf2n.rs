//! Arithmetic in GF(2^n) for 1 <= n <= 20 with a runtime-chosen modulus.
//!
//! Field elements are bitmask representations of polynomials over GF(2),
//! reduced modulo an irreducible polynomial of degree n. Multiplication is
//! carry-less (XOR accumulation) followed by reduction; nothing here depends
//! on hardware carry-less multiply instructions.
//!
//! Every context validates its modulus at construction. The built-in default
//! moduli are the lowest-weight, then lowest-value, irreducible polynomials
//! of each degree; they are a cache, and the validation pass is what makes
//! them trustworthy (a regeneration test rebuilds the table from scratch).

use crate::bf::MAX_N;
use crate::error::{Error, Result};

/// Default modulus for each degree, indexed by n - 1. Lowest weight first,
/// then lowest value: a trinomial when one exists, else a pentanomial.
pub const DEFAULT_MODULI: [u64; MAX_N as usize] = [
    0b11,                    // n = 1:  x + 1
    0b111,                   // n = 2:  x^2 + x + 1
    0b1011,                  // n = 3:  x^3 + x + 1
    0b10011,                 // n = 4:  x^4 + x + 1
    0b100101,                // n = 5:  x^5 + x^2 + 1
    0b1000011,               // n = 6:  x^6 + x + 1
    0b10000011,              // n = 7:  x^7 + x + 1
    0b100011011,             // n = 8:  x^8 + x^4 + x^3 + x + 1
    0b1000000011,            // n = 9:  x^9 + x + 1
    0b10000001001,           // n = 10: x^10 + x^3 + 1
    0b100000000101,          // n = 11: x^11 + x^2 + 1
    0b1000000001001,         // n = 12: x^12 + x^3 + 1
    0b10000000011011,        // n = 13: x^13 + x^4 + x^3 + x + 1
    0b100000000100001,       // n = 14: x^14 + x^5 + 1
    0b1000000000000011,      // n = 15: x^15 + x + 1
    0b10000000000101011,     // n = 16: x^16 + x^5 + x^3 + x + 1
    0b100000000000001001,    // n = 17: x^17 + x^3 + 1
    0b1000000000000001001,   // n = 18: x^18 + x^3 + 1
    0b10000000000000100111,  // n = 19: x^19 + x^5 + x^2 + x + 1
    0b100000000000000001001, // n = 20: x^20 + x^3 + 1
];

fn poly_degree(p: u64) -> u32 {
    assert!(p != 0, "zero polynomial has no degree");
    63 - p.leading_zeros()
}

/// Carry-less product of two polynomial bitmasks (no reduction).
fn clmul(mut a: u64, mut b: u64) -> u64 {
    let mut acc = 0u64;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    acc
}

/// Remainder of v modulo p (polynomial long division).
fn poly_rem(mut v: u64, p: u64) -> u64 {
    let dp = poly_degree(p);
    while v != 0 && poly_degree(v) >= dp {
        v ^= p << (poly_degree(v) - dp);
    }
    v
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Whether p is irreducible over GF(2).
///
/// Uses the finite-field criterion: with n = deg p, x^(2^n) must equal x in
/// GF(2)[x]/(p), and for every prime q dividing n, x^(2^(n/q)) - x must be
/// coprime to p.
pub fn is_irreducible(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let n = poly_degree(p);
    if n == 1 {
        return true;
    }
    if p & 1 == 0 {
        // Divisible by x.
        return false;
    }
    let x = poly_rem(2, p);
    let frob = |k: u32| -> u64 {
        let mut t = x;
        for _ in 0..k {
            t = poly_rem(clmul(t, t), p);
        }
        t
    };
    if frob(n) != x {
        return false;
    }
    for q in prime_factors(n) {
        let g = frob(n / q) ^ x;
        if poly_gcd(p, g) != 1 {
            return false;
        }
    }
    true
}

/// The lowest-weight, then lowest-value, irreducible polynomial of degree n.
pub fn lowest_irreducible(n: u32) -> u64 {
    assert!((1..=MAX_N).contains(&n));
    if n == 1 {
        return 0b11;
    }
    // Candidates have bit n and bit 0 set; enumerate the inner bits by
    // ascending popcount (Gosper's hack walks each weight class in value
    // order).
    for inner_weight in 0..n {
        if inner_weight == 0 {
            if is_irreducible((1 << n) | 1) {
                return (1 << n) | 1;
            }
            continue;
        }
        let mut m: u64 = ((1 << inner_weight) - 1) << 1;
        let limit = 1u64 << n;
        while m < limit {
            let p = (1 << n) | m | 1;
            if m & 1 == 0 && is_irreducible(p) {
                return p;
            }
            let c = m & m.wrapping_neg();
            let r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    unreachable!("an irreducible polynomial exists for every degree");
}

/// A GF(2^n) context: dimension plus validated irreducible modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldContext {
    n: u32,
    modulus: u64,
}

impl FieldContext {
    /// Context with the built-in default modulus for this degree.
    pub fn new(n: u32) -> Result<Self> {
        crate::bf::check_dimension(n)?;
        Self::with_modulus(n, DEFAULT_MODULI[(n - 1) as usize])
    }

    /// Context with an explicit modulus, which must have degree exactly n
    /// and be irreducible.
    pub fn with_modulus(n: u32, modulus: u64) -> Result<Self> {
        crate::bf::check_dimension(n)?;
        if modulus < 2 || poly_degree(modulus) != n {
            return Err(Error::ModulusDegree { modulus, n });
        }
        if !is_irreducible(modulus) {
            return Err(Error::ReducibleModulus { modulus });
        }
        Ok(Self { n, modulus })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Field size 2^n.
    pub fn order(&self) -> u64 {
        1u64 << self.n
    }

    /// Whether x is a valid element bitmask.
    pub fn contains(&self, x: u64) -> bool {
        x < self.order()
    }

    /// Field addition (XOR of bitmasks).
    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(self.contains(a) && self.contains(b));
        a ^ b
    }

    /// Field multiplication: carry-less product reduced by the modulus.
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(self.contains(a) && self.contains(b));
        if a == 0 || b == 0 {
            return 0;
        }
        poly_rem(clmul(a, b), self.modulus)
    }

    pub fn square(&self, a: u64) -> u64 {
        self.mul(a, a)
    }

    /// a^e by square and multiply; 0^0 = 1 by convention.
    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        debug_assert!(self.contains(a));
        let mut acc = 1u64;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.square(a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via a^(2^n - 2), with inverse(0) = 0.
    pub fn inverse(&self, a: u64) -> u64 {
        if a == 0 {
            return 0;
        }
        self.pow(a, self.order() - 2)
    }

    /// Absolute trace: the sum of the n Frobenius conjugates, always 0 or 1.
    pub fn trace(&self, a: u64) -> u64 {
        debug_assert!(self.contains(a));
        let mut acc = a;
        let mut cur = a;
        for _ in 1..self.n {
            cur = self.square(cur);
            acc ^= cur;
        }
        debug_assert!(acc <= 1, "trace escaped the prime subfield");
        acc
    }
}
