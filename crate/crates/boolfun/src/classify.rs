//! Spectral classification and linear structures.
//!
//! All predicates here are decided from exact spectra:
//! - bent: n even and every |W(a)| equals 2^(n/2);
//! - semi-bent: nonlinearity 2^(n-1) - 2^((n-1)/2) for odd n, and
//!   2^(n-1) - 2^(n/2) for even n;
//! - plateaued of order r: the nonzero W(a)^2 take the single value
//!   2^(2n-r), with r even (affine functions get order 0, bent get n);
//! - partially bent: every nonzero-direction derivative is balanced or
//!   constant;
//! - quadratic: algebraic degree exactly 2.
//!
//! The flags are reported independently; overlaps (for example plateaued
//! functions that also meet the even-n semi-bent value) are intentional.

use crate::bf::BooleanFunction;

/// Outcome of [`BooleanFunction::classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub is_balanced: bool,
    pub is_bent: bool,
    pub is_semi_bent: bool,
    /// `Some(r)` when the nonzero squared Walsh values are the single
    /// value 2^(2n - r) with r even.
    pub plateaued_order: Option<u32>,
    pub is_partially_bent: bool,
    pub is_quadratic: bool,
}

/// The set of directions whose derivative is constant, with the constants.
///
/// This set is always an F_2-linear subspace containing 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSpace {
    n: u32,
    dim: u32,
    basis: Vec<u64>,
    members: Vec<(u64, bool)>,
}

impl LinearSpace {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// A basis of the space (empty when only 0 is a linear structure).
    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    /// Every member a paired with the constant value of the derivative in
    /// direction a, ascending by a. Always contains (0, false).
    pub fn members(&self) -> &[(u64, bool)] {
        &self.members
    }

    pub fn contains(&self, a: u64) -> bool {
        self.members.binary_search_by_key(&a, |&(m, _)| m).is_ok()
    }
}

/// Reduce a vector by a GF(2) row-echelon basis; returns the remainder.
fn reduce(mut v: u64, basis: &[u64]) -> u64 {
    for &b in basis {
        if v & (1 << (63 - b.leading_zeros())) != 0 {
            v ^= b;
        }
    }
    v
}

impl BooleanFunction {
    /// The linear structures of f: directions a with D_a f constant.
    pub fn linear_space(&self) -> LinearSpace {
        let size = self.size() as i64;
        let ac = self.autocorrelation();
        let mut members = Vec::new();
        let mut basis: Vec<u64> = Vec::new();
        for (a, &v) in ac.iter().enumerate() {
            if v == size || v == -size {
                let a = a as u64;
                members.push((a, v < 0));
                if a != 0 && reduce(a, &basis) != 0 {
                    basis.push(reduce(a, &basis));
                    basis.sort_unstable_by_key(|b| std::cmp::Reverse(*b));
                }
            }
        }
        // A subspace check: the member count must be a power of two matching
        // the basis size.
        debug_assert_eq!(members.len(), 1usize << basis.len());
        LinearSpace {
            n: self.n(),
            dim: basis.len() as u32,
            basis,
            members,
        }
    }

    /// Classify this function from its spectrum, autocorrelation, and ANF.
    pub fn classify(&self) -> Classification {
        let n = self.n();
        let size = self.size();
        let spectrum = self.walsh();

        let is_bent = n.is_multiple_of(2)
            && spectrum
                .values()
                .iter()
                .all(|&w| w.unsigned_abs() * w.unsigned_abs() == size);

        let semi_bent_target = if n % 2 == 1 {
            (1u64 << (n - 1)) - (1u64 << ((n - 1) / 2))
        } else {
            (1u64 << (n - 1)).saturating_sub(1u64 << (n / 2))
        };
        let is_semi_bent = spectrum.nonlinearity() == semi_bent_target;

        let plateaued_order = plateaued_order(n, spectrum.values());

        let ac = self.autocorrelation();
        let is_partially_bent = ac
            .iter()
            .skip(1)
            .all(|&v| v == 0 || v.unsigned_abs() == size);

        Classification {
            is_balanced: self.is_balanced(),
            is_bent,
            is_semi_bent,
            plateaued_order,
            is_partially_bent,
            is_quadratic: self.degree() == 2,
        }
    }
}

fn plateaued_order(n: u32, walsh: &[i64]) -> Option<u32> {
    let mut level: Option<u64> = None;
    for &w in walsh {
        if w == 0 {
            continue;
        }
        let sq = w.unsigned_abs() * w.unsigned_abs();
        match level {
            None => level = Some(sq),
            Some(v) if v == sq => {}
            Some(_) => return None,
        }
    }
    // An all-zero spectrum cannot occur (the squares sum to 2^(2n)).
    let v = level.expect("spectrum cannot be all zero");
    if !v.is_power_of_two() {
        return None;
    }
    let r = 2 * n - v.trailing_zeros();
    (r.is_multiple_of(2) && r <= n).then_some(r)
}
