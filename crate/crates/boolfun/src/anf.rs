//! Algebraic normal form via the binary Moebius transform.
//!
//! The ANF writes f as an XOR of monomials; monomial masks use the same
//! encoding as inputs (bit j set means variable x_{j+1} occurs). The Moebius
//! transform is an involution, so the same pass converts truth table to
//! coefficients and back.

use crate::bf::BooleanFunction;
use crate::error::Result;

/// ANF coefficients of a Boolean function, one bit per monomial mask.
#[derive(Clone, PartialEq, Eq)]
pub struct AnfPolynomial {
    n: u32,
    coeffs: BooleanFunction,
}

/// In-place binary Moebius transform on a packed table.
fn moebius(f: &BooleanFunction) -> BooleanFunction {
    let n = f.n();
    let mut out = f.clone();
    for j in 0..n {
        // XOR the value at x ^ 2^j into x for every x with bit j set.
        out = out
            .xor(&mask_shift(&out, j))
            .expect("same dimension");
    }
    out
}

/// Helper: the function x -> g(x ^ 2^j) restricted to inputs with bit j set,
/// zero elsewhere. XOR-ing it into g performs one Moebius level.
fn mask_shift(g: &BooleanFunction, j: u32) -> BooleanFunction {
    let n = g.n();
    BooleanFunction::from_fn(n, |x| (x >> j) & 1 == 1 && g.get(x ^ (1 << j)))
        .expect("dimension already validated")
}

impl AnfPolynomial {
    /// Coefficients of f, computed by the Moebius transform.
    pub fn from_function(f: &BooleanFunction) -> Self {
        Self {
            n: f.n(),
            coeffs: moebius(f),
        }
    }

    /// Rebuild the truth table; inverse of [`Self::from_function`].
    pub fn to_function(&self) -> BooleanFunction {
        moebius(&self.coeffs)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Whether the monomial with the given mask occurs.
    pub fn coefficient(&self, mask: u64) -> bool {
        self.coeffs.get(mask)
    }

    /// Masks of the monomials present, ascending.
    pub fn monomials(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.coeffs.size()).filter(move |&m| self.coeffs.get(m))
    }

    /// Algebraic degree: largest variable count of any monomial present.
    /// The zero function has degree 0.
    pub fn degree(&self) -> u32 {
        self.monomials()
            .map(|m| m.count_ones())
            .max()
            .unwrap_or(0)
    }
}

impl std::fmt::Display for AnfPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for m in self.monomials() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m == 0 {
                write!(f, "1")?;
            } else {
                for j in 0..self.n {
                    if (m >> j) & 1 == 1 {
                        write!(f, "x{}", j + 1)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for AnfPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AnfPolynomial(n={}, {})", self.n, self)
    }
}

impl BooleanFunction {
    /// The algebraic normal form of this function.
    pub fn anf(&self) -> AnfPolynomial {
        AnfPolynomial::from_function(self)
    }

    /// Algebraic degree (0 for the constant functions).
    pub fn degree(&self) -> u32 {
        self.anf().degree()
    }

    /// Build a function directly from ANF monomial masks.
    pub fn from_monomials(n: u32, masks: &[u64]) -> Result<Self> {
        let mut coeffs = BooleanFunction::zero(n)?;
        for &m in masks {
            if m >= coeffs.size() {
                return Err(crate::error::Error::MaskOutOfRange { mask: m, n });
            }
            let single = BooleanFunction::from_fn(n, |x| x == m)?;
            coeffs = coeffs.xor(&single)?;
        }
        Ok(AnfPolynomial { n, coeffs }.to_function())
    }
}
