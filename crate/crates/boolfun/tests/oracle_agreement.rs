//! Every fast path in the crate against its definitional oracle: exhaustive
//! where the space is small, seeded sampling above that, sized so each
//! oracle stays inside its own cost envelope.

use boolfun::metrics::{s1_sq_total, s1_total, s2_total, VectorialDerivativeProfile};
use boolfun::{catalog, oracle, BooleanFunction, VectorialFunction};

fn all_tables(n: u32) -> impl Iterator<Item = BooleanFunction> {
    let table_bits = 1usize << n;
    (0u32..(1 << table_bits)).map(move |t| {
        let bits: Vec<bool> = (0..table_bits).map(|i| (t >> i) & 1 == 1).collect();
        BooleanFunction::from_bits(n, &bits).unwrap()
    })
}

fn random_scalars(n: u32, count: u64, seed_base: u64) -> impl Iterator<Item = BooleanFunction> {
    (0..count).map(move |i| catalog::random_function(n, seed_base + i).unwrap())
}

fn random_luts(n: u32, count: u64, seed_base: u64) -> impl Iterator<Item = VectorialFunction> {
    (0..count).map(move |i| catalog::random_lut(n, seed_base + i).unwrap())
}

fn vectorial_corpus(max_n: u32) -> Vec<VectorialFunction> {
    let mut corpus: Vec<VectorialFunction> = (1..=max_n)
        .flat_map(|n| catalog::entries_for_dimension(n).unwrap())
        .map(|e| e.function)
        .collect();
    for n in 3..=max_n.min(5) {
        corpus.extend(random_luts(n, 30, 200_000 + 1_000 * n as u64));
    }
    corpus
}

#[test]
fn walsh_spectrum_matches_definition() {
    for n in 1..=3 {
        for f in all_tables(n) {
            assert_eq!(oracle::naive_walsh(&f).unwrap().values(), f.walsh().values());
        }
    }
    for n in 4..=8 {
        for f in random_scalars(n, 1_000, 210_000 + 1_000 * n as u64) {
            assert_eq!(oracle::naive_walsh(&f).unwrap().values(), f.walsh().values());
        }
    }
}

#[test]
fn derivative_weights_match_definition() {
    let check = |f: &BooleanFunction| {
        let fast = f.derivative_weights();
        for a in 0..f.size() {
            assert_eq!(fast[a as usize], oracle::naive_derivative_weight(f, a));
            assert_eq!(
                f.size() as i64 - 2 * fast[a as usize] as i64,
                oracle::naive_derivative_fourier(f, a)
            );
            assert_eq!(f.derivative_weight(a).unwrap(), fast[a as usize]);
        }
    };
    for n in 1..=3 {
        for f in all_tables(n) {
            check(&f);
        }
    }
    for n in 4..=6 {
        for f in random_scalars(n, 200, 220_000 + 1_000 * n as u64) {
            check(&f);
        }
    }
}

#[test]
fn first_order_totals_match_definition() {
    let check = |f: &BooleanFunction| {
        assert_eq!(s1_total(f), oracle::naive_s1(f));
        assert_eq!(s1_sq_total(f), oracle::naive_s1_sq(f));
    };
    for n in 1..=3 {
        for f in all_tables(n) {
            check(&f);
        }
    }
    for n in 4..=8 {
        for f in random_scalars(n, 1_000, 230_000 + 1_000 * n as u64) {
            check(&f);
        }
        // Balanced draws hit the degenerate zero-imbalance corner.
        let g = catalog::random_balanced(n, 231_000 + n as u64).unwrap();
        check(&g);
    }
}

#[test]
fn second_order_total_matches_definition() {
    let check = |f: &BooleanFunction| assert_eq!(s2_total(f), oracle::naive_s2(f).unwrap());
    for n in 1..=3 {
        for f in all_tables(n) {
            check(&f);
        }
    }
    for (n, count) in [(4u32, 100u64), (5, 100), (6, 100), (7, 25), (8, 10)] {
        for f in random_scalars(n, count, 240_000 + 1_000 * n as u64) {
            check(&f);
        }
    }
}

#[test]
fn vectorial_first_order_totals_match_definition() {
    for f in vectorial_corpus(8) {
        let p = VectorialDerivativeProfile::compute(&f).unwrap();
        assert_eq!(p.vs1, oracle::naive_vs1(&f).unwrap(), "n = {}", f.n());
        assert_eq!(p.vs1_sq, oracle::naive_vs1_sq(&f).unwrap(), "n = {}", f.n());
    }
}

#[test]
fn vectorial_second_order_totals_match_definition() {
    for f in vectorial_corpus(6) {
        let p = VectorialDerivativeProfile::compute(&f).unwrap();
        assert_eq!(p.vs2, oracle::naive_vs2(&f).unwrap(), "n = {}", f.n());
        assert_eq!(p.fsq, oracle::naive_fsq(&f).unwrap(), "n = {}", f.n());
        for a in 1..f.size() {
            assert_eq!(
                p.per_direction_s2[a as usize],
                oracle::naive_per_direction_s2(&f, a).unwrap()
            );
            assert_eq!(
                p.per_direction_fsq[a as usize],
                oracle::naive_per_direction_fsq(&f, a).unwrap()
            );
        }
    }
}

#[test]
fn uniformity_matches_full_table() {
    for f in vectorial_corpus(8) {
        let (uniformity, apn) = oracle::naive_ddt_apn(&f).unwrap();
        assert_eq!(f.differential_uniformity(), uniformity);
        let ddt = f.ddt().unwrap();
        assert_eq!(ddt.uniformity(), uniformity);
        assert_eq!(ddt.is_apn(), apn);
    }
}

#[test]
fn autocorrelation_recovers_derivative_weights() {
    for n in 4..=7 {
        for f in random_scalars(n, 100, 250_000 + 1_000 * n as u64) {
            let ac = f.autocorrelation();
            let weights = f.derivative_weights();
            for a in 0..f.size() as usize {
                assert_eq!(f.size() as i64 - 2 * weights[a] as i64, ac[a]);
            }
        }
    }
}
