//! Derivative weight totals and the verdicts built on them.
//!
//! For a Boolean function f the first-order total s1 sums wt(D_a f) over
//! nonzero directions, s1_sq sums the squares, and the second-order total s2
//! sums wt(D_b D_a f) over pairs of nonzero directions. All three collapse to
//! spectral data: s1 depends only on the weight of f, s1_sq on the
//! autocorrelation, s2 on the fourth Walsh moment. For a vectorial function
//! the same totals accumulated over all nonzero component masks separate
//! permutations, differentially 2-uniform maps, and their intersection by
//! exact integer comparisons against attainable extremes.

use rayon::prelude::*;

use crate::bf::{check_dimension, BooleanFunction};
use crate::error::{Error, Result};
use crate::vectorial::VectorialFunction;

/// Largest n for which a full vectorial derivative profile is computed.
/// Totals stay below 2^56 there, comfortably inside u64, and the 2^n - 1
/// component transforms stay affordable.
pub const VECTORIAL_PROFILE_MAX_N: u32 = 14;

#[inline]
fn pow2(k: u32) -> u64 {
    1u64 << k
}

/// First-order total: s1 = sum over a != 0 of wt(D_a f) = 2 wt (2^n - wt).
pub fn s1_total(f: &BooleanFunction) -> u64 {
    let wt = f.weight();
    2 * wt * (f.size() - wt)
}

/// First-order total from the Fourier coefficient: 2^(2n-1) - F(f)^2 / 2.
pub fn s1_via_fourier(f: &BooleanFunction) -> u64 {
    let n = f.n();
    let fc = f.fourier();
    pow2(2 * n - 1) - ((fc * fc) as u64) / 2
}

/// Imbalance |2^(n-1) - wt(f)|; s1 = 2^(2n-1) - 2 ell^2.
pub fn ell_parameter(f: &BooleanFunction) -> u64 {
    let half = pow2(f.n() - 1) as i64;
    (half - f.weight() as i64).unsigned_abs()
}

/// Sum of squared derivative weights over nonzero directions.
pub fn s1_sq_total(f: &BooleanFunction) -> u64 {
    f.derivative_weights().iter().skip(1).map(|&w| w * w).sum()
}

/// Which of the two weights consistent with a first-order total to return.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightBranch {
    /// 2^(n-1) + ell.
    Plus,
    /// 2^(n-1) - ell.
    Minus,
}

/// Invert s1 = 2 wt (2^n - wt): recover a weight from a first-order total.
///
/// The total determines the weight only up to complementation, so the caller
/// picks a branch. Fails when no function on n variables attains the total:
/// s1 may not exceed the balanced maximum 2^(2n-1), and 2^(2n) - 2 s1 must be
/// a perfect square (it equals (2 ell)^2).
pub fn weight_from_s1(n: u32, s1: u64, branch: WeightBranch) -> Result<u64> {
    check_dimension(n)?;
    let max = pow2(2 * n - 1);
    if s1 > max {
        return Err(Error::UnrealizableS1 {
            s1,
            n,
            reason: "exceeds the balanced maximum 2^(2n-1)",
        });
    }
    let radicand = pow2(2 * n) - 2 * s1;
    let root = radicand.isqrt();
    if root * root != radicand {
        return Err(Error::UnrealizableS1 {
            s1,
            n,
            reason: "2^(2n) - 2 s1 is not a perfect square",
        });
    }
    // radicand = (2 ell)^2 is even, so its exact root is even too.
    debug_assert_eq!(root % 2, 0);
    let ell = root / 2;
    Ok(match branch {
        WeightBranch::Plus => pow2(n - 1) + ell,
        WeightBranch::Minus => pow2(n - 1) - ell,
    })
}

/// Second-order total: s2 = sum over a, b != 0 of wt(D_b D_a f),
/// computed as 2^(n+1) s1 - 2 s1_sq.
pub fn s2_total(f: &BooleanFunction) -> u64 {
    let n = f.n();
    let s1 = s1_total(f) as u128;
    let s1_sq = s1_sq_total(f) as u128;
    let s2 = (s1 << (n + 1)) - 2 * s1_sq;
    s2 as u64
}

/// Second-order total from the fourth Walsh moment:
/// s2 = 2^(3n-1) - (sum of W^4) / 2^(n+1).
pub fn s2_via_walsh_moment(f: &BooleanFunction) -> u64 {
    let n = f.n();
    let moment = f.walsh().power_moment4();
    let denom = 1u128 << (n + 1);
    debug_assert_eq!(moment % denom, 0, "fourth moment must divide exactly");
    ((1u128 << (3 * n - 1)) - moment / denom) as u64
}

/// Structure classes whose first-order total has a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum S1Class {
    /// wt = 2^(n-1).
    Balanced,
    /// All squared Walsh values equal 2^n; requires even n.
    Bent,
    /// Unbalanced of degree 2 with linear space of dimension `linear_dim`.
    QuadraticUnbalanced { linear_dim: u32 },
    /// Unbalanced with bent part on 2h variables.
    PartiallyBentUnbalanced { h: u32 },
    /// Unbalanced plateaued of the given order.
    PlateauedUnbalanced { order: u32 },
}

/// Closed form for s1 on a structure class, without touching a truth table.
pub fn closed_form_s1(n: u32, class: S1Class) -> Result<u64> {
    check_dimension(n)?;
    let full = pow2(2 * n - 1);
    match class {
        S1Class::Balanced => Ok(full),
        S1Class::Bent => {
            if !n.is_multiple_of(2) {
                return Err(Error::OddDimension {
                    what: "bent first-order total",
                    n,
                });
            }
            Ok(full - pow2(n - 1))
        }
        S1Class::QuadraticUnbalanced { linear_dim } => {
            if linear_dim > n {
                return Err(Error::KOutOfRange {
                    what: "linear space dimension",
                    k: linear_dim,
                    n,
                });
            }
            if !(n - linear_dim).is_multiple_of(2) {
                // The rank of a quadratic part is even, so n - dim V is too.
                return Err(Error::NoClosedForm {
                    what: "quadratic with odd co-rank n - dim V",
                    n,
                });
            }
            Ok(full - pow2(n + linear_dim - 1))
        }
        S1Class::PartiallyBentUnbalanced { h } => {
            if 2 * h > n {
                return Err(Error::KOutOfRange {
                    what: "bent-part half rank h",
                    k: h,
                    n,
                });
            }
            Ok(full - pow2(2 * n - 2 * h - 1))
        }
        S1Class::PlateauedUnbalanced { order } => {
            if order > n {
                return Err(Error::KOutOfRange {
                    what: "plateau order",
                    k: order,
                    n,
                });
            }
            if order % 2 != 0 {
                return Err(Error::NoClosedForm {
                    what: "plateaued of odd order",
                    n,
                });
            }
            Ok(full - pow2(2 * n - order - 1))
        }
    }
}

/// Structure classes whose second-order total has a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum S2Class {
    /// Requires even n.
    Bent,
    /// Bent part on 2h variables; h = n/2 recovers the bent value,
    /// h = 0 the affine one.
    PartiallyBent { h: u32 },
    Affine,
}

/// Closed form for s2 on a structure class.
pub fn closed_form_s2(n: u32, class: S2Class) -> Result<u64> {
    check_dimension(n)?;
    match class {
        S2Class::Bent => {
            if !n.is_multiple_of(2) {
                return Err(Error::OddDimension {
                    what: "bent second-order total",
                    n,
                });
            }
            Ok(pow2(2 * n - 1) * (pow2(n) - 1))
        }
        S2Class::PartiallyBent { h } => {
            if 2 * h > n {
                return Err(Error::KOutOfRange {
                    what: "bent-part half rank h",
                    k: h,
                    n,
                });
            }
            Ok(pow2(2 * n - 1) * (pow2(n) - pow2(n - 2 * h)))
        }
        S2Class::Affine => Ok(0),
    }
}

/// Exact derivative data of one Boolean function: weight, both first-order
/// totals, the second-order total, the imbalance, and the fourth Walsh
/// moment the second-order total was cross-checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarDerivativeProfile {
    pub n: u32,
    pub weight: u64,
    pub s1: u64,
    pub s1_sq: u64,
    pub s2: u64,
    pub ell: u64,
    pub walsh4: u128,
}

impl ScalarDerivativeProfile {
    /// One spectrum pass feeds every field; the second-order total is
    /// computed twice, from the totals and from the fourth moment, and the
    /// two routes must agree.
    pub fn compute(f: &BooleanFunction) -> Self {
        let n = f.n();
        let size = f.size();
        let weight = f.weight();
        let spectrum = f.walsh();
        let walsh4 = spectrum.power_moment4();

        let s1 = 2 * weight * (size - weight);
        let s1_sq: u64 = spectrum
            .autocorrelation()
            .iter()
            .skip(1)
            .map(|&ac| {
                let w = ((size as i64 - ac) / 2) as u64;
                w * w
            })
            .sum();

        let s2 = (((s1 as u128) << (n + 1)) - 2 * s1_sq as u128) as u64;
        let denom = 1u128 << (n + 1);
        let via_moment = (1u128 << (3 * n - 1)) - walsh4 / denom;
        assert_eq!(
            s2 as u128, via_moment,
            "second-order total disagrees with the fourth-moment route"
        );

        let ell = (pow2(n - 1) as i64 - weight as i64).unsigned_abs();
        Self {
            n,
            weight,
            s1,
            s1_sq,
            s2,
            ell,
            walsh4,
        }
    }
}

/// Exact derivative data of a vectorial function, accumulated over all
/// nonzero component masks.
///
/// `per_direction_s2[a]` sums wt(D_b D_a F_m) over nonzero b and m, so entry
/// 0 is 0. `per_direction_fsq[a]` sums F(D_a F_m)^2 over ALL masks m
/// including 0, so entry 0 is 2^(3n) and every entry satisfies
/// `per_direction_fsq[a] = 2^(3n) - 2 per_direction_s2[a]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorialDerivativeProfile {
    pub n: u32,
    pub vs1: u64,
    pub vs1_sq: u64,
    pub vs2: u64,
    pub fsq: u64,
    pub per_direction_s2: Vec<u64>,
    pub per_direction_fsq: Vec<u64>,
}

struct ProfileAcc {
    vs1: u64,
    vs1_sq: u64,
    vs2: u64,
    fsq: u64,
    pd_s2: Vec<u64>,
    pd_fsq: Vec<u64>,
}

impl ProfileAcc {
    fn new(size: usize) -> Self {
        Self {
            vs1: 0,
            vs1_sq: 0,
            vs2: 0,
            fsq: 0,
            pd_s2: vec![0; size],
            pd_fsq: vec![0; size],
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.vs1 += other.vs1;
        self.vs1_sq += other.vs1_sq;
        self.vs2 += other.vs2;
        self.fsq += other.fsq;
        for (a, b) in self.pd_s2.iter_mut().zip(&other.pd_s2) {
            *a += b;
        }
        for (a, b) in self.pd_fsq.iter_mut().zip(&other.pd_fsq) {
            *a += b;
        }
        self
    }
}

impl VectorialDerivativeProfile {
    /// One autocorrelation per component, components in parallel.
    pub fn compute(f: &VectorialFunction) -> Result<Self> {
        let n = f.n();
        if n > VECTORIAL_PROFILE_MAX_N {
            return Err(Error::SizeCap {
                what: "vectorial derivative profile",
                n,
                cap: VECTORIAL_PROFILE_MAX_N,
            });
        }
        let size = f.size();
        let sz = size as usize;
        let size_sq = size * size;

        let acc = (1..size)
            .into_par_iter()
            .fold(
                || ProfileAcc::new(sz),
                |mut acc, mask| {
                    let g = f.component(mask).expect("component masks stay in range");
                    let ac = g.autocorrelation();
                    let mut sum_sq_nz = 0u64;
                    for (a, &aca) in ac.iter().enumerate().skip(1) {
                        let w = ((size as i64 - aca) / 2) as u64;
                        let sq = (aca * aca) as u64;
                        acc.vs1 += w;
                        acc.vs1_sq += w * w;
                        acc.pd_s2[a] += 2 * w * (size - w);
                        acc.pd_fsq[a] += sq;
                        sum_sq_nz += sq;
                    }
                    // a = 0: the derivative is the zero function, F = 2^n.
                    acc.fsq += size_sq + sum_sq_nz;
                    acc.pd_fsq[0] += size_sq;
                    acc.vs2 += pow2(2 * n - 1) * (size - 1) - sum_sq_nz / 2;
                    acc
                },
            )
            .reduce(|| ProfileAcc::new(sz), ProfileAcc::merge);

        let ProfileAcc {
            vs1,
            vs1_sq,
            vs2,
            fsq,
            pd_s2,
            mut pd_fsq,
        } = acc;
        // Mask 0 contributes F(D_a 0)^2 = 2^(2n) in every direction.
        for v in &mut pd_fsq {
            *v += size_sq;
        }

        debug_assert_eq!(vs2, pd_s2.iter().sum::<u64>());
        debug_assert!(pd_fsq
            .iter()
            .zip(&pd_s2)
            .all(|(&fq, &s2)| fq == pow2(3 * n) - 2 * s2));
        debug_assert_eq!(fsq, pow2(3 * n) * (size - 1) - 2 * vs2);

        Ok(Self {
            n,
            vs1,
            vs1_sq,
            vs2,
            fsq,
            per_direction_s2: pd_s2,
            per_direction_fsq: pd_fsq,
        })
    }

    /// Directions a != 0 whose second-order slice falls short of the
    /// differentially 2-uniform extremum.
    pub fn directions_below_apn_s2(&self) -> Vec<u64> {
        let bound = apn_per_direction_s2_value(self.n);
        self.per_direction_s2
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &v)| v < bound)
            .map(|(a, _)| a as u64)
            .collect()
    }
}

/// vs1 of a permutation: every component balanced, (2^n - 1) 2^(2n-1).
pub fn permutation_s1_value(n: u32) -> u64 {
    pow2(2 * n - 1) * (pow2(n) - 1)
}

/// vs1_sq of a differentially 2-uniform permutation:
/// 2^(2n-1) (2^n - 1)(2^(n-1) + 1). Among permutations this is the minimum.
pub fn apn_permutation_s1_sq_value(n: u32) -> u64 {
    assert!(
        n <= VECTORIAL_PROFILE_MAX_N,
        "value exceeds u64 beyond n = {VECTORIAL_PROFILE_MAX_N}"
    );
    pow2(2 * n - 1) * (pow2(n) - 1) * (pow2(n - 1) + 1)
}

/// vs2 at differential uniformity 2: 2^(2n-1) (2^n - 1)(2^n - 2),
/// the maximum over all functions.
pub fn apn_s2_value(n: u32) -> u64 {
    assert!(
        n <= VECTORIAL_PROFILE_MAX_N,
        "value exceeds u64 beyond n = {VECTORIAL_PROFILE_MAX_N}"
    );
    pow2(2 * n - 1) * (pow2(n) - 1) * (pow2(n) - 2)
}

/// Single-direction share of the vs2 extremum: 2^(2n-1) (2^n - 2).
pub fn apn_per_direction_s2_value(n: u32) -> u64 {
    pow2(2 * n - 1) * (pow2(n) - 2)
}

/// Minimum of fsq = sum of F(D_a F_m)^2 over nonzero masks and all
/// directions: 2^(2n+1) (2^n - 1), attained exactly at uniformity 2.
pub fn apn_fsq_value(n: u32) -> u64 {
    pow2(2 * n + 1) * (pow2(n) - 1)
}

/// Single-direction minimum of the squared-Fourier sum taken over all masks
/// including 0: 2^(2n+1).
pub fn apn_per_direction_fsq_value(n: u32) -> u64 {
    pow2(2 * n + 1)
}

/// vs1 of a quadratic function with differential uniformity 2 on even n:
/// 2^(n-1) (2^n - 1)(2^n - 2).
pub fn quadratic_apn_s1_value(n: u32) -> u64 {
    pow2(n - 1) * (pow2(n) - 1) * (pow2(n) - 2)
}

/// Where a measured total landed relative to its attainable extreme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Equal,
    BelowBound,
    AboveBound,
}

impl std::fmt::Display for Relation {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        out.write_str(match self {
            Relation::Equal => "equal",
            Relation::BelowBound => "below-bound",
            Relation::AboveBound => "above-bound",
        })
    }
}

/// Result of comparing one total against the extreme that characterizes a
/// structural property. `verdict` is true exactly when the property holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateOutcome {
    pub name: &'static str,
    pub expected: u64,
    pub actual: u64,
    pub relation: Relation,
    pub verdict: bool,
}

impl PredicateOutcome {
    fn new(name: &'static str, expected: u64, actual: u64, verdict: bool) -> Self {
        let relation = match actual.cmp(&expected) {
            std::cmp::Ordering::Less => Relation::BelowBound,
            std::cmp::Ordering::Equal => Relation::Equal,
            std::cmp::Ordering::Greater => Relation::AboveBound,
        };
        Self {
            name,
            expected,
            actual,
            relation,
            verdict,
        }
    }

    /// actual - expected; positive means the total overshot the extreme.
    pub fn gap(&self) -> i128 {
        self.actual as i128 - self.expected as i128
    }
}

impl std::fmt::Display for PredicateOutcome {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            out,
            "{}: actual {} vs expected {} ({}), verdict {}",
            self.name, self.actual, self.expected, self.relation, self.verdict
        )
    }
}

/// Bijectivity by first-order total alone: vs1 never exceeds
/// (2^n - 1) 2^(2n-1) and reaches it exactly for permutations.
pub fn check_permutation_by_s1(p: &VectorialDerivativeProfile) -> PredicateOutcome {
    let expected = permutation_s1_value(p.n);
    PredicateOutcome::new("perm-s1", expected, p.vs1, p.vs1 == expected)
}

/// Differentially 2-uniform permutation by squared first-order total.
///
/// Among permutations vs1_sq is minimized exactly at uniformity 2, so the
/// verdict requires both the permutation extreme of vs1 and the minimum of
/// vs1_sq; both sides come from derivative weights alone.
pub fn check_apn_permutation_by_s1sq(p: &VectorialDerivativeProfile) -> PredicateOutcome {
    let expected = apn_permutation_s1_sq_value(p.n);
    let is_perm = p.vs1 == permutation_s1_value(p.n);
    PredicateOutcome::new(
        "apn-perm-s1sq",
        expected,
        p.vs1_sq,
        is_perm && p.vs1_sq == expected,
    )
}

/// Differential uniformity 2 by second-order total: vs2 never exceeds
/// 2^(2n-1) (2^n - 1)(2^n - 2) and reaches it exactly at uniformity 2.
pub fn check_apn_by_s2(p: &VectorialDerivativeProfile) -> PredicateOutcome {
    let expected = apn_s2_value(p.n);
    PredicateOutcome::new("apn-s2", expected, p.vs2, p.vs2 == expected)
}

/// Per-direction version of the vs2 extreme: every direction must attain
/// 2^(2n-1) (2^n - 2). `actual` reports the worst (smallest) direction.
pub fn check_apn_per_direction(p: &VectorialDerivativeProfile) -> PredicateOutcome {
    let expected = apn_per_direction_s2_value(p.n);
    let worst = p.per_direction_s2[1..]
        .iter()
        .copied()
        .min()
        .expect("n >= 1 gives at least one direction");
    debug_assert!(p.per_direction_s2[1..].iter().all(|&v| v <= expected));
    PredicateOutcome::new("apn-per-direction-s2", expected, worst, worst == expected)
}

/// Both squared-Fourier lower bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FsqBounds {
    pub global: PredicateOutcome,
    pub per_direction: PredicateOutcome,
}

/// Lower bounds on the squared-Fourier totals, met exactly at uniformity 2:
/// globally fsq >= 2^(2n+1) (2^n - 1), and in every single direction the
/// all-masks sum is >= 2^(2n+1). The per-direction `actual` reports the
/// worst (largest) direction.
pub fn check_fsq_bounds(p: &VectorialDerivativeProfile) -> FsqBounds {
    let global_expected = apn_fsq_value(p.n);
    let global = PredicateOutcome::new("apn-fsq", global_expected, p.fsq, p.fsq == global_expected);

    let dir_expected = apn_per_direction_fsq_value(p.n);
    let worst = p.per_direction_fsq[1..]
        .iter()
        .copied()
        .max()
        .expect("n >= 1 gives at least one direction");
    debug_assert!(p.per_direction_fsq[1..].iter().all(|&v| v >= dir_expected));
    let per_direction = PredicateOutcome::new(
        "apn-per-direction-fsq",
        dir_expected,
        worst,
        worst == dir_expected,
    );
    FsqBounds {
        global,
        per_direction,
    }
}

/// Structural tally of the nonzero components of a vectorial function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentCensus {
    pub bent: u64,
    pub semi_bent_unbalanced: u64,
    pub other: u64,
    /// True when every unbalanced semi-bent component had a linear space of
    /// dimension exactly 2.
    pub semi_bent_dim2_ok: bool,
}

/// Classify every nonzero component.
pub fn component_census(f: &VectorialFunction) -> ComponentCensus {
    let mut census = ComponentCensus {
        bent: 0,
        semi_bent_unbalanced: 0,
        other: 0,
        semi_bent_dim2_ok: true,
    };
    for mask in 1..f.size() {
        let g = f.component(mask).expect("component masks stay in range");
        let class = g.classify();
        if class.is_bent {
            census.bent += 1;
        } else if class.is_semi_bent && !class.is_balanced {
            census.semi_bent_unbalanced += 1;
            if g.linear_space().dim() != 2 {
                census.semi_bent_dim2_ok = false;
            }
        } else {
            census.other += 1;
        }
    }
    census
}

/// Combined verdict for the quadratic uniformity-2 first-order value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticApnCheck {
    pub outcome: PredicateOutcome,
    pub census: ComponentCensus,
    /// n even, degree 2, differential uniformity 2, all measured directly.
    pub hypotheses_hold: bool,
    /// Components split 2/3 bent, 1/3 unbalanced semi-bent with dimension-2
    /// linear spaces, and nothing else.
    pub census_matches_split: bool,
}

/// On even n, a quadratic function of differential uniformity 2 has
/// vs1 = 2^(n-1) (2^n - 1)(2^n - 2), with two thirds of the nonzero
/// components bent and one third unbalanced semi-bent. The hypotheses are
/// measured, not assumed, so a caller learns which side failed.
pub fn check_quadratic_apn_s1(
    f: &VectorialFunction,
    p: &VectorialDerivativeProfile,
) -> QuadraticApnCheck {
    debug_assert_eq!(f.n(), p.n);
    let n = f.n();
    let expected = quadratic_apn_s1_value(n);
    let outcome = PredicateOutcome::new("quad-apn-s1", expected, p.vs1, p.vs1 == expected);

    let hypotheses_hold = n.is_multiple_of(2) && f.degree() == 2 && f.differential_uniformity() == 2;

    let census = component_census(f);
    let nonzero = f.size() - 1;
    let census_matches_split = nonzero.is_multiple_of(3)
        && census.bent == 2 * nonzero / 3
        && census.semi_bent_unbalanced == nonzero / 3
        && census.other == 0
        && census.semi_bent_dim2_ok;

    QuadraticApnCheck {
        outcome,
        census,
        hypotheses_hold,
        census_matches_split,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2n::FieldContext;

    fn and2() -> BooleanFunction {
        BooleanFunction::parse_table("0001").unwrap()
    }

    fn x1x2_plus_x3() -> BooleanFunction {
        BooleanFunction::from_monomials(3, &[0b011, 0b100]).unwrap()
    }

    #[test]
    fn and2_profile() {
        let p = ScalarDerivativeProfile::compute(&and2());
        assert_eq!(
            p,
            ScalarDerivativeProfile {
                n: 2,
                weight: 1,
                s1: 6,
                s1_sq: 12,
                s2: 24,
                ell: 1,
                walsh4: 64,
            }
        );
    }

    #[test]
    fn quadratic_balanced_profile() {
        let p = ScalarDerivativeProfile::compute(&x1x2_plus_x3());
        assert_eq!(p.weight, 4);
        assert_eq!(p.s1, 32);
        assert_eq!(p.s1_sq, 160);
        assert_eq!(p.s2, 192);
        assert_eq!(p.ell, 0);
        assert_eq!(p.walsh4, 1024);
    }

    #[test]
    fn totals_agree_with_free_functions() {
        let ones = BooleanFunction::constant(4, true).unwrap();
        for f in [and2(), x1x2_plus_x3(), ones] {
            let p = ScalarDerivativeProfile::compute(&f);
            assert_eq!(p.s1, s1_total(&f));
            assert_eq!(p.s1, s1_via_fourier(&f));
            assert_eq!(p.s1_sq, s1_sq_total(&f));
            assert_eq!(p.s2, s2_total(&f));
            assert_eq!(p.s2, s2_via_walsh_moment(&f));
            assert_eq!(p.ell, ell_parameter(&f));
        }
    }

    #[test]
    fn weight_recovery() {
        assert_eq!(weight_from_s1(2, 6, WeightBranch::Minus), Ok(1));
        assert_eq!(weight_from_s1(2, 6, WeightBranch::Plus), Ok(3));
        assert_eq!(weight_from_s1(2, 8, WeightBranch::Minus), Ok(2));
        assert_eq!(weight_from_s1(2, 8, WeightBranch::Plus), Ok(2));
        assert_eq!(weight_from_s1(3, 0, WeightBranch::Minus), Ok(0));
        assert_eq!(weight_from_s1(3, 0, WeightBranch::Plus), Ok(8));
    }

    #[test]
    fn weight_recovery_rejects_unrealizable_totals() {
        assert!(matches!(
            weight_from_s1(2, 9, WeightBranch::Minus),
            Err(Error::UnrealizableS1 { .. })
        ));
        assert!(matches!(
            weight_from_s1(2, 7, WeightBranch::Minus),
            Err(Error::UnrealizableS1 { .. })
        ));
    }

    #[test]
    fn closed_forms_match_computed_totals() {
        // One source, three closed-form routes to 24: x1 x2 viewed on three
        // variables is unbalanced, quadratic with dim V = 1, partially bent
        // with h = 1, and plateaued of order 2.
        let f = BooleanFunction::from_monomials(3, &[0b011]).unwrap();
        assert_eq!(s1_total(&f), 24);
        assert_eq!(
            closed_form_s1(3, S1Class::QuadraticUnbalanced { linear_dim: 1 }),
            Ok(24)
        );
        assert_eq!(
            closed_form_s1(3, S1Class::PartiallyBentUnbalanced { h: 1 }),
            Ok(24)
        );
        assert_eq!(
            closed_form_s1(3, S1Class::PlateauedUnbalanced { order: 2 }),
            Ok(24)
        );

        assert_eq!(closed_form_s1(3, S1Class::Balanced), Ok(32));
        assert_eq!(closed_form_s1(2, S1Class::Bent), Ok(6));
        assert_eq!(closed_form_s2(2, S2Class::Bent), Ok(24));
        assert_eq!(closed_form_s2(3, S2Class::PartiallyBent { h: 1 }), Ok(192));
        assert_eq!(closed_form_s2(5, S2Class::Affine), Ok(0));
    }

    #[test]
    fn closed_forms_reject_bad_parameters() {
        assert!(matches!(
            closed_form_s1(3, S1Class::Bent),
            Err(Error::OddDimension { .. })
        ));
        assert!(matches!(
            closed_form_s1(4, S1Class::PlateauedUnbalanced { order: 3 }),
            Err(Error::NoClosedForm { .. })
        ));
        assert!(matches!(
            closed_form_s1(4, S1Class::PlateauedUnbalanced { order: 6 }),
            Err(Error::KOutOfRange { .. })
        ));
        assert!(matches!(
            closed_form_s2(5, S2Class::PartiallyBent { h: 3 }),
            Err(Error::KOutOfRange { .. })
        ));
        assert!(matches!(
            closed_form_s2(5, S2Class::Bent),
            Err(Error::OddDimension { .. })
        ));
    }

    #[test]
    fn identity_profile() {
        let id = VectorialFunction::identity(2).unwrap();
        let p = VectorialDerivativeProfile::compute(&id).unwrap();
        assert_eq!(p.vs1, 24);
        assert_eq!(p.vs1_sq, 96);
        assert_eq!(p.vs2, 0);
        assert_eq!(p.fsq, 192);
        assert_eq!(p.per_direction_s2, vec![0, 0, 0, 0]);
        assert_eq!(p.per_direction_fsq, vec![64, 64, 64, 64]);

        // A linear permutation attains the bijectivity extreme but sits at
        // the bottom of the second-order scale.
        assert!(check_permutation_by_s1(&p).verdict);
        let apn = check_apn_by_s2(&p);
        assert!(!apn.verdict);
        assert_eq!(apn.relation, Relation::BelowBound);
        assert_eq!(apn.gap(), -48);
        assert!(!check_apn_permutation_by_s1sq(&p).verdict);
        assert_eq!(p.directions_below_apn_s2(), vec![1, 2, 3]);
    }

    #[test]
    fn cube_map_attains_every_extreme_on_three_variables() {
        let ctx = FieldContext::new(3).unwrap();
        let cube = VectorialFunction::from_power(&ctx, 3).unwrap();
        let p = VectorialDerivativeProfile::compute(&cube).unwrap();

        assert_eq!(p.vs1, 224);
        assert_eq!(p.vs1_sq, 1120);
        assert_eq!(p.vs2, 1344);
        assert_eq!(p.fsq, 896);

        assert!(check_permutation_by_s1(&p).verdict);
        assert!(check_apn_permutation_by_s1sq(&p).verdict);
        assert!(check_apn_by_s2(&p).verdict);
        assert!(check_apn_per_direction(&p).verdict);
        let fsq = check_fsq_bounds(&p);
        assert!(fsq.global.verdict);
        assert!(fsq.per_direction.verdict);
        assert!(p.directions_below_apn_s2().is_empty());
    }

    #[test]
    fn quadratic_uniformity_two_census_on_four_variables() {
        let ctx = FieldContext::new(4).unwrap();
        let gold = VectorialFunction::from_power(&ctx, 3).unwrap();
        let p = VectorialDerivativeProfile::compute(&gold).unwrap();

        // Not a permutation on even n, so the bijectivity extreme is missed
        // while the quadratic value is hit.
        assert!(!check_permutation_by_s1(&p).verdict);
        assert_eq!(p.vs1, 1680);

        let check = check_quadratic_apn_s1(&gold, &p);
        assert!(check.outcome.verdict);
        assert!(check.hypotheses_hold);
        assert!(check.census_matches_split);
        assert_eq!(check.census.bent, 10);
        assert_eq!(check.census.semi_bent_unbalanced, 5);
        assert_eq!(check.census.other, 0);
    }

    #[test]
    fn profile_respects_size_cap() {
        let f = VectorialFunction::identity(VECTORIAL_PROFILE_MAX_N + 1).unwrap();
        assert!(matches!(
            VectorialDerivativeProfile::compute(&f),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn extreme_values_are_consistent() {
        for n in 1..=8 {
            assert_eq!(
                apn_s2_value(n),
                apn_per_direction_s2_value(n) * (pow2(n) - 1)
            );
            assert_eq!(
                apn_fsq_value(n),
                pow2(3 * n) * (pow2(n) - 1) - 2 * apn_s2_value(n)
            );
            assert_eq!(
                apn_per_direction_fsq_value(n),
                pow2(3 * n) - 2 * apn_per_direction_s2_value(n)
            );
        }
    }
}
