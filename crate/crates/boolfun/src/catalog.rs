//! Named function families and fixtures used across tests and the CLI.
//!
//! Power-map families are built over the default field of each dimension,
//! the six-bit uniformity-2 permutation is reconstructed from scratch as a
//! two-round bijective structure over GF(8) and checked against a frozen
//! checksum, and the random generators are fully determined by their seed.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bf::{check_dimension, dot, BooleanFunction};
use crate::error::{Error, Result};
use crate::gf2n::FieldContext;
use crate::vectorial::{Provenance, VectorialFunction};

/// What a catalog entry is known to satisfy ahead of any measurement.
/// `None` means the property is left to be measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpectedProperties {
    pub apn: Option<bool>,
    pub permutation: Option<bool>,
    pub degree: Option<u32>,
}

/// A named, ready-built vectorial function with its expected properties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub n: u32,
    pub function: VectorialFunction,
    pub expected: ExpectedProperties,
    pub note: &'static str,
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_exponent_parameter(n: u32, k: u32) -> Result<()> {
    check_dimension(n)?;
    if k == 0 || k >= n {
        return Err(Error::KOutOfRange {
            what: "power-map exponent parameter",
            k,
            n,
        });
    }
    if gcd(k, n) != 1 {
        return Err(Error::GcdConstraint { n, k });
    }
    Ok(())
}

/// x^(2^k + 1) over the default field of dimension n; requires
/// gcd(k, n) = 1, which makes the map differentially 2-uniform.
pub fn gold(n: u32, k: u32) -> Result<VectorialFunction> {
    check_exponent_parameter(n, k)?;
    let ctx = FieldContext::new(n)?;
    let mut f = VectorialFunction::from_power(&ctx, (1u64 << k) + 1)?;
    f.set_provenance(Provenance::Catalog {
        name: format!("gold({n},{k})"),
        modulus: Some(ctx.modulus()),
    });
    Ok(f)
}

/// x^(2^2k - 2^k + 1) over the default field of dimension n; requires
/// gcd(k, n) = 1. Exponents past 2^n - 1 are reduced mod 2^n - 1, which
/// leaves the map unchanged pointwise.
pub fn kasami(n: u32, k: u32) -> Result<VectorialFunction> {
    check_exponent_parameter(n, k)?;
    let ctx = FieldContext::new(n)?;
    let order = (1u64 << n) - 1;
    let mut e = (1u64 << (2 * k)) - (1u64 << k) + 1;
    if e > order {
        e %= order;
        if e == 0 {
            e = order;
        }
    }
    let mut f = VectorialFunction::from_power(&ctx, e)?;
    f.set_provenance(Provenance::Catalog {
        name: format!("kasami({n},{k})"),
        modulus: Some(ctx.modulus()),
    });
    Ok(f)
}

/// Multiplicative inverse over the default field of dimension n, with 0
/// mapped to 0; a permutation in every dimension.
pub fn inverse_map(n: u32) -> Result<VectorialFunction> {
    let ctx = FieldContext::new(n)?;
    let lut: Vec<u64> = (0..ctx.order()).map(|x| ctx.inverse(x)).collect();
    VectorialFunction::with_provenance(
        n,
        lut,
        Provenance::Catalog {
            name: format!("inverse({n})"),
            modulus: Some(ctx.modulus()),
        },
    )
}

/// GF(8) modulus the six-bit fixture is built over, pinned so the fixture
/// does not move if the default table ever does.
const BUTTERFLY_MODULUS: u64 = 0b1011;
/// Mixing parameter of the keystone (the class of x in GF(8)).
const BUTTERFLY_ALPHA: u64 = 2;
/// Frozen FNV-1a checksum of the fixture's look-up table.
const SIX_BIT_FIXTURE_FNV: u64 = 0x78fc704d076ddbfd;

fn fnv1a64(bytes: impl IntoIterator<Item = u8>) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// The six-bit permutation of differential uniformity 2, rebuilt on every
/// call and cross-checked three ways: a frozen checksum of the table,
/// bijectivity, and the uniformity itself.
///
/// Construction: over GF(8), with keystone r_y(x) = (x + ay)^3 + y^3 and
/// a the class of x, the map (x, y) -> (r_z(y), z) where z = r_y^{-1}(x)
/// is a bijection of GF(8)^2; inverting the keystone uses the cube root
/// t -> t^5. Low three bits of an input hold x, high three hold y.
pub fn dillon_permutation() -> Result<VectorialFunction> {
    let ctx = FieldContext::with_modulus(3, BUTTERFLY_MODULUS)?;
    let keystone = |y: u64, x: u64| ctx.pow(x ^ ctx.mul(BUTTERFLY_ALPHA, y), 3) ^ ctx.pow(y, 3);
    let keystone_inv = |y: u64, u: u64| ctx.pow(u ^ ctx.pow(y, 3), 5) ^ ctx.mul(BUTTERFLY_ALPHA, y);
    let lut: Vec<u64> = (0..64u64)
        .map(|i| {
            let (x, y) = (i & 7, i >> 3);
            let z = keystone_inv(y, x);
            (keystone(z, y) << 3) | z
        })
        .collect();

    let integrity = Error::FixtureIntegrity { name: "dillon" };
    if fnv1a64(lut.iter().map(|&v| v as u8)) != SIX_BIT_FIXTURE_FNV {
        return Err(integrity);
    }
    let f = VectorialFunction::with_provenance(
        6,
        lut,
        Provenance::Catalog {
            name: "dillon".to_string(),
            modulus: None,
        },
    )?;
    if !f.is_permutation() || f.differential_uniformity() != 2 {
        return Err(integrity);
    }
    Ok(f)
}

/// Sum of `pairs` disjoint quadratic terms x_{2i-1} x_{2i}, an optional
/// lone linear term x_{2 pairs + 1} making the function balanced, and an
/// optional constant 1.
pub fn quadratic_canonical(
    n: u32,
    pairs: u32,
    balanced: bool,
    constant: bool,
) -> Result<BooleanFunction> {
    check_dimension(n)?;
    let needed = if balanced { 2 * pairs + 1 } else { 2 * pairs };
    if needed > n {
        return Err(Error::KOutOfRange {
            what: "disjoint quadratic pair count",
            k: pairs,
            n,
        });
    }
    let mut masks: Vec<u64> = (0..pairs).map(|i| 0b11u64 << (2 * i)).collect();
    if balanced {
        masks.push(1u64 << (2 * pairs));
    }
    if constant {
        masks.push(0);
    }
    BooleanFunction::from_monomials(n, &masks)
}

/// Bent concatenation on 2m variables: f(x, y) = x . pi(y) + g(y) with pi a
/// permutation of m-bit words and g any m-bit function; x sits in the low
/// half of the input, y in the high half.
pub fn maiorana_mcfarland(pi: &VectorialFunction, g: &BooleanFunction) -> Result<BooleanFunction> {
    let half = pi.n();
    if g.n() != half {
        return Err(Error::PieceDimension {
            what: "bent concatenation pieces",
            expected: half,
            got: g.n(),
        });
    }
    let n = 2 * half;
    check_dimension(n)?;
    if !pi.is_permutation() {
        return Err(Error::NotAPermutation {
            what: "bent concatenation inner map",
        });
    }
    let low = (1u64 << half) - 1;
    BooleanFunction::from_fn(n, |i| {
        let (x, y) = (i & low, i >> half);
        dot(x, pi.get(y)) ^ g.get(y)
    })
}

fn uniform_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    if bound.is_power_of_two() {
        return rng.next_u64() & (bound - 1);
    }
    // Rejection keeps the draw exactly uniform.
    loop {
        let v = rng.next_u64();
        let r = v % bound;
        if v - r <= u64::MAX - (bound - 1) {
            return r;
        }
    }
}

/// Seeded uniform function on n variables; the same seed always yields the
/// same function.
pub fn random_function(n: u32, seed: u64) -> Result<BooleanFunction> {
    check_dimension(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bits = vec![false; 1usize << n];
    for chunk in bits.chunks_mut(64) {
        let mut w = rng.next_u64();
        for b in chunk.iter_mut() {
            *b = w & 1 == 1;
            w >>= 1;
        }
    }
    BooleanFunction::from_bits(n, &bits)
}

/// Seeded uniform choice among the balanced functions on n variables.
pub fn random_balanced(n: u32, seed: u64) -> Result<BooleanFunction> {
    check_dimension(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = 1usize << n;
    let half = size / 2;
    let mut idx: Vec<u32> = (0..size as u32).collect();
    for i in 0..half {
        let j = i + uniform_below(&mut rng, (size - i) as u64) as usize;
        idx.swap(i, j);
    }
    let mut bits = vec![false; size];
    for &p in &idx[..half] {
        bits[p as usize] = true;
    }
    BooleanFunction::from_bits(n, &bits)
}

/// Seeded uniform look-up table, not necessarily a permutation.
pub fn random_lut(n: u32, seed: u64) -> Result<VectorialFunction> {
    check_dimension(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = 1u64 << n;
    let lut: Vec<u64> = (0..size).map(|_| rng.next_u64() & (size - 1)).collect();
    VectorialFunction::from_lut(n, lut)
}

fn gold_entry(n: u32, k: u32) -> Result<CatalogEntry> {
    Ok(CatalogEntry {
        name: format!("gold({n},{k})"),
        n,
        function: gold(n, k)?,
        expected: ExpectedProperties {
            apn: Some(true),
            permutation: Some(n % 2 == 1),
            degree: Some(2),
        },
        note: "quadratic power map x^(2^k + 1)",
    })
}

fn kasami_entry(n: u32, k: u32) -> Result<CatalogEntry> {
    let function = kasami(n, k)?;
    // Inside the enumerated range 2k < n the exponent is unreduced and the
    // degree is k + 1; outside it the measured value stands alone.
    let degree = (2 * k < n).then_some(k + 1);
    Ok(CatalogEntry {
        name: format!("kasami({n},{k})"),
        n,
        function,
        expected: ExpectedProperties {
            apn: Some(true),
            permutation: Some(n % 2 == 1),
            degree,
        },
        note: "power map x^(2^2k - 2^k + 1)",
    })
}

fn inverse_entry(n: u32) -> Result<CatalogEntry> {
    Ok(CatalogEntry {
        name: format!("inverse({n})"),
        n,
        function: inverse_map(n)?,
        expected: ExpectedProperties {
            apn: Some(n == 1 || n % 2 == 1),
            permutation: Some(true),
            degree: Some(if n == 1 { 1 } else { n - 1 }),
        },
        note: "multiplicative inverse with 0 fixed",
    })
}

fn dillon_entry() -> Result<CatalogEntry> {
    Ok(CatalogEntry {
        name: "dillon".to_string(),
        n: 6,
        function: dillon_permutation()?,
        expected: ExpectedProperties {
            apn: Some(true),
            permutation: Some(true),
            degree: Some(4),
        },
        note: "six-bit permutation of differential uniformity 2",
    })
}

/// Every catalog entry living in dimension n: gold and kasami maps over the
/// coprime parameters up to the dimension's midpoint, the inverse map, and
/// at n = 6 the uniformity-2 permutation fixture.
pub fn entries_for_dimension(n: u32) -> Result<Vec<CatalogEntry>> {
    check_dimension(n)?;
    let mut entries = Vec::new();
    for k in 1..=n / 2 {
        if gcd(k, n) == 1 {
            entries.push(gold_entry(n, k)?);
        }
    }
    for k in 2..=n.saturating_sub(1) / 2 {
        if gcd(k, n) == 1 {
            entries.push(kasami_entry(n, k)?);
        }
    }
    entries.push(inverse_entry(n)?);
    if n == 6 {
        entries.push(dillon_entry()?);
    }
    Ok(entries)
}

/// Fetch one entry by its display name, e.g. `gold(6,1)` or `dillon`.
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    let unknown = || Error::Parse(format!("unknown catalog entry `{}`", name.trim()));
    let trimmed = name.trim();
    if trimmed == "dillon" {
        return dillon_entry();
    }
    let (head, rest) = trimmed.split_once('(').ok_or_else(unknown)?;
    let args = rest.strip_suffix(')').ok_or_else(unknown)?;
    let nums = args
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| unknown()))
        .collect::<Result<Vec<u32>>>()?;
    match (head, nums.as_slice()) {
        ("gold", &[n, k]) => gold_entry(n, k),
        ("kasami", &[n, k]) => kasami_entry(n, k),
        ("inverse", &[n]) => inverse_entry(n),
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gold_matches_raw_power_map() {
        let ctx = FieldContext::new(3).unwrap();
        let raw = VectorialFunction::from_power(&ctx, 3).unwrap();
        let g = gold(3, 1).unwrap();
        assert_eq!(g, raw);
        assert!(matches!(
            g.provenance(),
            Provenance::Catalog { modulus: Some(0b1011), .. }
        ));
    }

    #[test]
    fn gold_rejects_bad_parameters() {
        assert!(matches!(gold(4, 2), Err(Error::GcdConstraint { .. })));
        assert!(matches!(gold(4, 0), Err(Error::KOutOfRange { .. })));
        assert!(matches!(gold(4, 4), Err(Error::KOutOfRange { .. })));
        assert!(matches!(gold(1, 1), Err(Error::KOutOfRange { .. })));
    }

    #[test]
    fn gold_small_dimensions() {
        let odd = gold(5, 1).unwrap();
        assert!(odd.is_permutation());
        assert_eq!(odd.differential_uniformity(), 2);
        assert_eq!(odd.degree(), 2);

        let even = gold(4, 1).unwrap();
        assert!(!even.is_permutation());
        assert_eq!(even.differential_uniformity(), 2);
        assert_eq!(even.degree(), 2);
    }

    #[test]
    fn kasami_small_dimensions() {
        let f = kasami(5, 2).unwrap();
        assert!(f.is_permutation());
        assert_eq!(f.differential_uniformity(), 2);
        assert_eq!(f.degree(), 3);

        let g = kasami(8, 3).unwrap();
        assert_eq!(g.differential_uniformity(), 2);
        assert_eq!(g.degree(), 4);
    }

    #[test]
    fn kasami_reduces_large_exponents() {
        // 2^6 - 2^3 + 1 = 57 wraps to 12 mod 15.
        let ctx = FieldContext::new(4).unwrap();
        let raw = VectorialFunction::from_power(&ctx, 12).unwrap();
        assert_eq!(kasami(4, 3).unwrap(), raw);
    }

    #[test]
    fn inverse_small_dimensions() {
        let f = inverse_map(4).unwrap();
        assert!(f.is_permutation());
        assert_eq!(f.differential_uniformity(), 4);
        assert_eq!(f.degree(), 3);

        let g = inverse_map(5).unwrap();
        assert!(g.is_permutation());
        assert_eq!(g.differential_uniformity(), 2);
        assert_eq!(g.degree(), 4);

        assert_eq!(inverse_map(1).unwrap().lut(), &[0, 1]);
    }

    #[test]
    fn six_bit_fixture_loads_and_checks_out() {
        let f = dillon_permutation().unwrap();
        assert_eq!(f.n(), 6);
        assert_eq!(f.get(0), 0);
        assert!(f.is_permutation());
        assert_eq!(f.differential_uniformity(), 2);
        assert_eq!(f.degree(), 4);
    }

    #[test]
    fn quadratic_canonical_shapes() {
        let balanced = quadratic_canonical(3, 1, true, false).unwrap();
        assert_eq!(
            balanced,
            BooleanFunction::from_monomials(3, &[0b011, 0b100]).unwrap()
        );

        let and2 = quadratic_canonical(2, 1, false, false).unwrap();
        assert_eq!(and2, BooleanFunction::parse_table("0001").unwrap());

        let flipped = quadratic_canonical(2, 1, false, true).unwrap();
        assert_eq!(flipped, BooleanFunction::parse_table("1110").unwrap());

        assert_eq!(quadratic_canonical(5, 2, true, false).unwrap().weight(), 16);
        assert!(matches!(
            quadratic_canonical(4, 2, true, false),
            Err(Error::KOutOfRange { .. })
        ));
    }

    #[test]
    fn bent_concatenation_is_bent() {
        let pi = VectorialFunction::identity(2).unwrap();
        let g = BooleanFunction::zero(2).unwrap();
        let f = maiorana_mcfarland(&pi, &g).unwrap();
        assert_eq!(f.n(), 4);
        assert!(f.classify().is_bent);

        let wrong = BooleanFunction::zero(3).unwrap();
        assert!(matches!(
            maiorana_mcfarland(&pi, &wrong),
            Err(Error::PieceDimension { .. })
        ));
        let squash = VectorialFunction::from_lut(2, vec![0, 0, 0, 0]).unwrap();
        assert!(matches!(
            maiorana_mcfarland(&squash, &g),
            Err(Error::NotAPermutation { .. })
        ));
    }

    #[test]
    fn seeded_generators_are_deterministic() {
        assert_eq!(random_function(9, 5).unwrap(), random_function(9, 5).unwrap());
        assert_ne!(random_function(9, 5).unwrap(), random_function(9, 6).unwrap());

        let b = random_balanced(6, 7).unwrap();
        assert_eq!(b.weight(), 32);
        assert_eq!(b, random_balanced(6, 7).unwrap());
        assert_ne!(b, random_balanced(6, 8).unwrap());

        let lut = random_lut(5, 11).unwrap();
        assert!(lut.lut().iter().all(|&v| v < 32));
        assert_eq!(lut, random_lut(5, 11).unwrap());
    }

    #[test]
    fn enumeration_covers_expected_names() {
        let names = |n: u32| -> Vec<String> {
            entries_for_dimension(n)
                .unwrap()
                .into_iter()
                .map(|e| e.name)
                .collect()
        };
        assert_eq!(names(6), ["gold(6,1)", "inverse(6)", "dillon"]);
        assert_eq!(
            names(8),
            ["gold(8,1)", "gold(8,3)", "kasami(8,3)", "inverse(8)"]
        );
        assert_eq!(names(1), ["inverse(1)"]);
    }

    #[test]
    fn lookup_round_trips() {
        assert_eq!(lookup("gold(6,1)").unwrap().name, "gold(6,1)");
        assert_eq!(lookup("dillon").unwrap().n, 6);
        assert_eq!(
            lookup("inverse(7)").unwrap().expected.permutation,
            Some(true)
        );
        assert!(matches!(lookup("nope(3)"), Err(Error::Parse(_))));
        assert!(matches!(lookup("gold(6)"), Err(Error::Parse(_))));
    }
}
