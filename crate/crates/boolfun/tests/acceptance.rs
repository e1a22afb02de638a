//! Acceptance suite: ten structural criteria, one test per criterion, every
//! comparison exact integer equality. Each test prints a single PASS/FAIL
//! line (visible with --nocapture, or through the harness result line).

use std::time::{Duration, Instant};

use boolfun::catalog::{self, CatalogEntry};
use boolfun::metrics::{
    apn_s2_value, check_apn_by_s2, check_apn_per_direction, check_apn_permutation_by_s1sq,
    check_fsq_bounds, check_permutation_by_s1, check_quadratic_apn_s1, closed_form_s1,
    closed_form_s2, ell_parameter, quadratic_apn_s1_value, s1_sq_total, s1_total, s2_total,
    s2_via_walsh_moment, weight_from_s1, Relation, S1Class, S2Class, ScalarDerivativeProfile,
    VectorialDerivativeProfile, WeightBranch,
};
use boolfun::oracle;
use boolfun::{BooleanFunction, VectorialFunction};

fn report(criterion: u32, label: &str, failures: Vec<String>) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {criterion} ({label}): {verdict}");
    assert!(
        failures.is_empty(),
        "criterion {criterion} ({label}) failed:\n{}",
        failures.join("\n")
    );
}

fn profile(f: &VectorialFunction) -> VectorialDerivativeProfile {
    VectorialDerivativeProfile::compute(f).expect("profile within size cap")
}

/// Catalog entries for dimensions 1..=max_n whose expected uniformity-2 flag
/// matches `apn`, re-confirmed against the definitional difference table.
fn catalog_entries_by_apn(max_n: u32, apn: bool) -> Vec<CatalogEntry> {
    (1..=max_n)
        .flat_map(|n| catalog::entries_for_dimension(n).expect("enumeration in range"))
        .filter(|e| e.expected.apn == Some(apn))
        .inspect(|e| {
            let (_, measured) = oracle::naive_ddt_apn(&e.function).expect("within oracle cap");
            assert_eq!(
                measured, apn,
                "catalog expectation for {} disagrees with the difference table",
                e.name
            );
        })
        .collect()
}

/// Seeded uniform tables at dimension n that the difference-table oracle
/// confirms are not uniformity 2.
fn random_non_apn_luts(n: u32, count: usize, seed_base: u64) -> Vec<VectorialFunction> {
    (seed_base..)
        .map(|seed| catalog::random_lut(n, seed).expect("dimension in range"))
        .filter(|f| !oracle::naive_ddt_apn(f).expect("within oracle cap").1)
        .take(count)
        .collect()
}

#[test]
fn criterion_01_fixture_first_order_total() {
    let mut failures = Vec::new();
    let fixture = catalog::dillon_permutation().expect("fixture integrity");
    let start = Instant::now();
    let p = profile(&fixture);
    let elapsed = start.elapsed();

    if p.vs1 != 129_024 {
        failures.push(format!("six-bit fixture vs1 = {}, want 129024", p.vs1));
    }
    if !check_permutation_by_s1(&p).verdict {
        failures.push("fixture misses the bijectivity extreme".into());
    }
    if elapsed >= Duration::from_secs(1) {
        failures.push(format!("profile took {elapsed:?}, budget 1 s"));
    }
    report(1, "six-bit fixture first-order total", failures);
}

#[test]
fn criterion_02_squared_total_separates_bijective_uniformity_two() {
    let mut failures = Vec::new();

    let fixture = catalog::dillon_permutation().unwrap();
    let p = profile(&fixture);
    if p.vs1_sq != 4_257_792 {
        failures.push(format!("fixture vs1_sq = {}, want 4257792", p.vs1_sq));
    }
    if !check_apn_permutation_by_s1sq(&p).verdict {
        failures.push("fixture fails the squared-total criterion".into());
    }

    let cube = catalog::gold(3, 1).unwrap();
    let pc = profile(&cube);
    if pc.vs1_sq != 1_120 {
        failures.push(format!("gold(3,1) vs1_sq = {}, want 1120", pc.vs1_sq));
    }
    if !check_apn_permutation_by_s1sq(&pc).verdict {
        failures.push("gold(3,1) fails the squared-total criterion".into());
    }

    // The criterion must reject every uniformity-2 catalog function that is
    // not bijective.
    for entry in catalog_entries_by_apn(8, true) {
        if entry.function.is_permutation() {
            continue;
        }
        let outcome = check_apn_permutation_by_s1sq(&profile(&entry.function));
        if outcome.verdict {
            failures.push(format!(
                "non-bijective {} passes the squared-total criterion",
                entry.name
            ));
        }
    }
    report(2, "squared totals pick out bijective uniformity 2", failures);
}

#[test]
fn criterion_03_quadratic_uniformity_two_first_order_value() {
    let mut failures = Vec::new();
    let cases: [(VectorialFunction, &str, u64); 4] = [
        (catalog::gold(4, 1).unwrap(), "gold(4,1)", 1_680),
        (catalog::gold(6, 1).unwrap(), "gold(6,1)", 124_992),
        (catalog::gold(8, 1).unwrap(), "gold(8,1)", 8_290_560),
        (catalog::kasami(8, 3).unwrap(), "kasami(8,3)", 8_290_560),
    ];
    for (f, name, want) in &cases {
        let p = profile(f);
        if p.vs1 != *want {
            failures.push(format!("{name} vs1 = {}, want {want}", p.vs1));
        }
        if p.vs1 != quadratic_apn_s1_value(f.n()) {
            failures.push(format!("{name} misses the closed-form value"));
        }
        let check = check_quadratic_apn_s1(f, &p);
        if !check.outcome.verdict {
            failures.push(format!("{name} fails the first-order verdict"));
        }
        // The gold maps satisfy the quadratic hypotheses and must show the
        // 2/3 bent : 1/3 semi-bent component census; the kasami map is
        // degree 4 and only promises the total.
        if name.starts_with("gold") {
            if !check.hypotheses_hold {
                failures.push(format!("{name} does not measure as quadratic uniformity 2"));
            }
            if !check.census_matches_split {
                failures.push(format!("{name} component census off the 2/3 : 1/3 split"));
            }
        } else if check.hypotheses_hold {
            failures.push(format!("{name} unexpectedly measures as quadratic"));
        }
    }
    report(3, "quadratic uniformity-2 first-order value", failures);
}

#[test]
fn criterion_04_second_order_total_decides_uniformity_two() {
    let mut failures = Vec::new();

    for n in 3..=8 {
        let f = catalog::gold(n, 1).unwrap();
        let p = profile(&f);
        if p.vs2 != apn_s2_value(n) || !check_apn_by_s2(&p).verdict {
            failures.push(format!("gold({n},1) misses the vs2 extreme"));
        }
    }
    for (f, name) in [
        (catalog::kasami(8, 3).unwrap(), "kasami(8,3)"),
        (catalog::dillon_permutation().unwrap(), "dillon"),
    ] {
        let p = profile(&f);
        if p.vs2 != apn_s2_value(f.n()) || !check_apn_by_s2(&p).verdict {
            failures.push(format!("{name} misses the vs2 extreme"));
        }
    }

    let mut controls: Vec<(VectorialFunction, String)> = vec![
        (VectorialFunction::identity(4).unwrap(), "identity(4)".into()),
        (VectorialFunction::identity(8).unwrap(), "identity(8)".into()),
        (catalog::inverse_map(4).unwrap(), "inverse(4)".into()),
        (catalog::inverse_map(8).unwrap(), "inverse(8)".into()),
    ];
    for n in [4u32, 5] {
        for (i, f) in random_non_apn_luts(n, 100, 40_000 + 1_000 * n as u64)
            .into_iter()
            .enumerate()
        {
            controls.push((f, format!("random lut n={n} #{i}")));
        }
    }
    for (f, name) in controls {
        let outcome = check_apn_by_s2(&profile(&f));
        if outcome.verdict || outcome.relation != Relation::BelowBound {
            failures.push(format!("{name}: vs2 not strictly below the extreme"));
        }
    }
    report(4, "second-order total decides uniformity 2", failures);
}

#[test]
fn criterion_05_per_direction_totals() {
    let mut failures = Vec::new();

    for entry in catalog_entries_by_apn(8, true) {
        let p = profile(&entry.function);
        if !check_apn_per_direction(&p).verdict || !p.directions_below_apn_s2().is_empty() {
            failures.push(format!("{}: some direction misses its share", entry.name));
        }
    }

    let mut controls: Vec<(VectorialFunction, String)> = catalog_entries_by_apn(8, false)
        .into_iter()
        .map(|e| (e.function, e.name))
        .collect();
    controls.push((VectorialFunction::identity(5).unwrap(), "identity(5)".into()));
    for (i, f) in random_non_apn_luts(4, 20, 50_000).into_iter().enumerate() {
        controls.push((f, format!("random lut n=4 #{i}")));
    }
    for (f, name) in controls {
        let p = profile(&f);
        if check_apn_per_direction(&p).verdict || p.directions_below_apn_s2().is_empty() {
            failures.push(format!("{name}: no direction deviates"));
        }
    }
    report(5, "per-direction second-order shares", failures);
}

#[test]
fn criterion_06_first_order_total_decides_bijectivity() {
    let mut failures = Vec::new();
    let mut check = |f: &VectorialFunction, name: &str| {
        let by_total = check_permutation_by_s1(&profile(f)).verdict;
        let by_table = f.is_permutation();
        if by_total != by_table {
            failures.push(format!(
                "{name}: total says {by_total}, table says {by_table}"
            ));
        }
    };
    for n in 1..=8 {
        for entry in catalog::entries_for_dimension(n).unwrap() {
            check(&entry.function, &entry.name);
        }
    }
    for n in 3..=5u32 {
        for i in 0..1_000u64 {
            let f = catalog::random_lut(n, 60_000 + 1_000 * n as u64 + i).unwrap();
            check(&f, &format!("random lut n={n} seed#{i}"));
        }
    }
    report(6, "first-order total decides bijectivity", failures);
}

/// Every identity the scalar totals satisfy, checked against literal
/// definitional sums for one function.
fn scalar_identity_failures(f: &BooleanFunction, name: &str, failures: &mut Vec<String>) {
    let n = f.n();
    let size = f.size();
    let weights: Vec<u64> = (0..size)
        .map(|a| oracle::naive_derivative_weight(f, a))
        .collect();
    let lit_s1: u64 = weights[1..].iter().sum();
    let lit_s1_sq: u64 = weights[1..].iter().map(|&w| w * w).sum();

    let wt = f.weight();
    if s1_total(f) != lit_s1 || 2 * wt * (size - wt) != lit_s1 {
        failures.push(format!("{name}: first-order total breaks its weight form"));
    }
    if s1_sq_total(f) != lit_s1_sq {
        failures.push(format!("{name}: squared total disagrees with literal sum"));
    }

    let fourier = f.fourier();
    let lit_fourier_sum: i64 = (0..size).map(|a| size as i64 - 2 * weights[a as usize] as i64).sum();
    if fourier * fourier != lit_fourier_sum {
        failures.push(format!(
            "{name}: signed-sum square differs from the derivative signed sums"
        ));
    }

    let s2 = s2_total(f);
    let from_totals = (((lit_s1 as u128) << (n + 1)) - 2 * lit_s1_sq as u128) as u64;
    if s2 != from_totals {
        failures.push(format!("{name}: second-order total breaks the totals form"));
    }
    if wt == size / 2 {
        let balanced_form = ((1u128 << (3 * n)) - 2 * lit_s1_sq as u128) as u64;
        if s2 != balanced_form {
            failures.push(format!("{name}: balanced second-order form fails"));
        }
    }
    let sq_sum: u64 = weights[1..]
        .iter()
        .map(|&w| {
            let fc = size as i64 - 2 * w as i64;
            (fc * fc) as u64
        })
        .sum();
    let component_form = (1u64 << (2 * n - 1)) * (size - 1) - sq_sum / 2;
    if s2 != component_form {
        failures.push(format!("{name}: spectral second-order form fails"));
    }
    if s2 != s2_via_walsh_moment(f) {
        failures.push(format!("{name}: fourth-moment route disagrees"));
    }

    let radicand = (1u64 << (2 * n)) - 2 * lit_s1;
    let root = radicand.isqrt();
    if root * root != radicand || !root.is_multiple_of(2) || root / 2 != ell_parameter(f) {
        failures.push(format!("{name}: imbalance square form fails"));
    }
    let recovered = [
        weight_from_s1(n, lit_s1, WeightBranch::Minus),
        weight_from_s1(n, lit_s1, WeightBranch::Plus),
    ];
    if !recovered.iter().any(|r| r.as_ref() == Ok(&wt)) {
        failures.push(format!("{name}: weight not recovered from its total"));
    }

    // The profile bundles the same quantities; any drift is a failure here
    // rather than a panic deep inside.
    let p = ScalarDerivativeProfile::compute(f);
    if (p.s1, p.s1_sq, p.s2, p.weight) != (lit_s1, lit_s1_sq, s2, wt) {
        failures.push(format!("{name}: profile fields drift from literal sums"));
    }
}

#[test]
fn criterion_07_scalar_identity_suite() {
    let mut failures = Vec::new();

    // Exhaustive at three variables: all 256 truth tables.
    for t in 0..256u32 {
        let bits: Vec<bool> = (0..8).map(|i| (t >> i) & 1 == 1).collect();
        let f = BooleanFunction::from_bits(3, &bits).unwrap();
        scalar_identity_failures(&f, &format!("n=3 table {t:#04x}"), &mut failures);
        if failures.len() > 20 {
            break;
        }
    }

    // Seeded sampling above, with every fifth draw balanced so the balanced
    // branch is exercised hundreds of times per dimension.
    for n in 4..=8u32 {
        for i in 0..1_000u64 {
            let seed = 70_000 + 10_000 * n as u64 + i;
            let f = if i % 5 == 0 {
                catalog::random_balanced(n, seed).unwrap()
            } else {
                catalog::random_function(n, seed).unwrap()
            };
            scalar_identity_failures(&f, &format!("n={n} seed#{i}"), &mut failures);
            if failures.len() > 20 {
                break;
            }
        }
    }
    report(7, "scalar identity suite", failures);
}

#[test]
fn criterion_08_class_closed_forms() {
    let mut failures = Vec::new();

    // Bent witnesses: full-rank canonical quadratics and a two-block
    // concatenation, at 2, 4 and 6 variables.
    let mut bent_cases: Vec<(BooleanFunction, String)> = [2u32, 4, 6]
        .iter()
        .map(|&n| {
            let f = catalog::quadratic_canonical(n, n / 2, false, false).unwrap();
            (f, format!("canonical bent n={n}"))
        })
        .collect();
    let pi = catalog::gold(3, 1).unwrap();
    let g = catalog::random_function(3, 80_001).unwrap();
    bent_cases.push((
        catalog::maiorana_mcfarland(&pi, &g).unwrap(),
        "concatenation bent n=6".into(),
    ));
    for (f, name) in &bent_cases {
        let n = f.n();
        if !f.classify().is_bent {
            failures.push(format!("{name} is not bent"));
            continue;
        }
        if s1_total(f) != closed_form_s1(n, S1Class::Bent).unwrap() {
            failures.push(format!("{name}: first-order closed form misses"));
        }
        if s2_total(f) != closed_form_s2(n, S2Class::Bent).unwrap() {
            failures.push(format!("{name}: second-order closed form misses"));
        }
    }

    // Strictness: everything that is not bent stays below the bent
    // second-order value.
    for n in [2u32, 4, 6] {
        let bound = closed_form_s2(n, S2Class::Bent).unwrap();
        let mut controls = vec![
            BooleanFunction::constant(n, false).unwrap(),
            BooleanFunction::from_monomials(n, &[1]).unwrap(),
            catalog::quadratic_canonical(n, n / 2 - (n > 2) as u32, false, false).unwrap(),
        ];
        for i in 0..50 {
            controls.push(catalog::random_function(n, 81_000 + i).unwrap());
        }
        for f in controls {
            if f.classify().is_bent {
                continue;
            }
            if s2_total(&f) >= bound {
                failures.push(format!("non-bent control at n={n} reaches the bent value"));
            }
        }
    }

    // Unbalanced canonical quadratics across every dimension and rank:
    // measured linear-space dimension feeds the closed form.
    for n in 2..=8u32 {
        for pairs in 1..=n / 2 {
            let f = catalog::quadratic_canonical(n, pairs, false, false).unwrap();
            let dim = f.linear_space().dim();
            if dim != n - 2 * pairs {
                failures.push(format!(
                    "quadratic n={n} pairs={pairs}: linear space dim {dim}"
                ));
            }
            let want = closed_form_s1(n, S1Class::QuadraticUnbalanced { linear_dim: dim }).unwrap();
            if s1_total(&f) != want {
                failures.push(format!("quadratic n={n} pairs={pairs}: closed form misses"));
            }
        }
        // The balanced variants sit at the balanced value instead.
        for pairs in 0..=(n - 1) / 2 {
            let f = catalog::quadratic_canonical(n, pairs, true, false).unwrap();
            if s1_total(&f) != closed_form_s1(n, S1Class::Balanced).unwrap() {
                failures.push(format!("balanced quadratic n={n} pairs={pairs} off value"));
            }
        }
    }

    // Affine functions: no second-order weight anywhere.
    for n in 1..=6u32 {
        for f in [
            BooleanFunction::constant(n, true).unwrap(),
            BooleanFunction::from_monomials(n, &[1 << (n - 1), 0]).unwrap(),
        ] {
            if s2_total(&f) != closed_form_s2(n, S2Class::Affine).unwrap() {
                failures.push(format!("affine control at n={n} has nonzero s2"));
            }
        }
    }

    // The unbalanced plateaued value at three variables.
    let f = BooleanFunction::from_monomials(3, &[0b011]).unwrap();
    let class = f.classify();
    if !class.is_semi_bent || class.is_balanced || class.plateaued_order != Some(2) {
        failures.push("x1x2 on three variables misclassified".into());
    }
    if s1_total(&f) != 24
        || closed_form_s1(3, S1Class::PlateauedUnbalanced { order: 2 }) != Ok(24)
    {
        failures.push("plateaued order-2 value at n=3 is not 24".into());
    }

    report(8, "class closed forms", failures);
}

#[test]
fn criterion_09_squared_fourier_bounds() {
    let mut failures = Vec::new();

    for entry in catalog_entries_by_apn(8, true) {
        let bounds = check_fsq_bounds(&profile(&entry.function));
        if !bounds.global.verdict || !bounds.per_direction.verdict {
            failures.push(format!("{}: bounds not met with equality", entry.name));
        }
    }

    let mut controls: Vec<(VectorialFunction, String)> = catalog_entries_by_apn(8, false)
        .into_iter()
        .map(|e| (e.function, e.name))
        .collect();
    for n in [4u32, 5, 6] {
        controls.push((
            VectorialFunction::identity(n).unwrap(),
            format!("identity({n})"),
        ));
    }
    for n in [4u32, 5] {
        for (i, f) in random_non_apn_luts(n, 50, 90_000 + 1_000 * n as u64)
            .into_iter()
            .enumerate()
        {
            controls.push((f, format!("random lut n={n} #{i}")));
        }
    }
    for (f, name) in controls {
        let bounds = check_fsq_bounds(&profile(&f));
        let strict_global =
            bounds.global.relation == Relation::AboveBound && bounds.global.gap() > 0;
        let strict_dir =
            bounds.per_direction.relation == Relation::AboveBound && bounds.per_direction.gap() > 0;
        if bounds.global.verdict || bounds.per_direction.verdict || !strict_global || !strict_dir {
            failures.push(format!("{name}: bounds not strictly exceeded"));
        }
    }
    report(9, "squared-Fourier lower bounds", failures);
}

#[test]
fn criterion_10_oracle_equivalence() {
    let mut failures = Vec::new();

    let scalar_check = |f: &BooleanFunction, name: &str, failures: &mut Vec<String>| {
        let naive = oracle::naive_walsh(f).unwrap();
        if naive.values() != f.walsh().values() {
            failures.push(format!("{name}: spectra disagree"));
        }
        if oracle::naive_s1(f) != s1_total(f) {
            failures.push(format!("{name}: first-order totals disagree"));
        }
        if oracle::naive_s2(f).unwrap() != s2_total(f) {
            failures.push(format!("{name}: second-order totals disagree"));
        }
    };

    for n in 1..=3u32 {
        let table_bits = 1usize << n;
        for t in 0u32..(1 << table_bits) {
            let bits: Vec<bool> = (0..table_bits).map(|i| (t >> i) & 1 == 1).collect();
            let f = BooleanFunction::from_bits(n, &bits).unwrap();
            scalar_check(&f, &format!("n={n} table {t:#x}"), &mut failures);
            if failures.len() > 20 {
                break;
            }
        }
    }
    for n in 4..=6u32 {
        for i in 0..200u64 {
            let f = catalog::random_function(n, 100_000 + 1_000 * n as u64 + i).unwrap();
            scalar_check(&f, &format!("n={n} seed#{i}"), &mut failures);
            if failures.len() > 20 {
                break;
            }
        }
    }

    // Difference-table verdict against the second-order verdict.
    let vec_check = |f: &VectorialFunction, name: &str, failures: &mut Vec<String>| {
        let (_, by_table) = oracle::naive_ddt_apn(f).unwrap();
        let by_total = check_apn_by_s2(&profile(f)).verdict;
        if by_table != by_total {
            failures.push(format!(
                "{name}: table says {by_table}, total says {by_total}"
            ));
        }
    };
    for n in 1..=6u32 {
        for entry in catalog::entries_for_dimension(n).unwrap() {
            vec_check(&entry.function, &entry.name, &mut failures);
        }
    }
    for n in 3..=5u32 {
        for i in 0..100u64 {
            let f = catalog::random_lut(n, 110_000 + 1_000 * n as u64 + i).unwrap();
            vec_check(&f, &format!("random lut n={n} seed#{i}"), &mut failures);
        }
    }
    report(10, "fast paths match definitional oracles", failures);
}
