//! Vectorial functions F: F_2^n -> F_2^n stored as look-up tables.
//!
//! Components are cut out with the integer inner product: the component for
//! mask m is x -> popcount(m & F(x)) mod 2. Masks range over all of F_2^n;
//! the nonzero ones give the classical component functions. Difference
//! tables count, for each input difference a and output difference b, the
//! solutions of F(x + a) + F(x) = b.

use rayon::prelude::*;

use crate::bf::{check_dimension, dot, BooleanFunction};
use crate::error::{Error, Result};
use crate::gf2n::FieldContext;

/// Largest n for which a full 2^n x 2^n difference table is materialized.
pub const DDT_TABLE_MAX_N: u32 = 12;

/// How a vectorial function was constructed; carried as metadata and
/// ignored by equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Lut,
    Power { d: u64, modulus: u64 },
    Univariate { coeffs: Vec<u64>, modulus: u64 },
    Catalog { name: String, modulus: Option<u64> },
}

/// A function F: F_2^n -> F_2^n as a table of 2^n output words.
#[derive(Clone)]
pub struct VectorialFunction {
    n: u32,
    lut: Vec<u64>,
    provenance: Provenance,
}

impl PartialEq for VectorialFunction {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.lut == other.lut
    }
}

impl Eq for VectorialFunction {}

impl VectorialFunction {
    /// Build from an explicit look-up table of length 2^n.
    pub fn from_lut(n: u32, lut: Vec<u64>) -> Result<Self> {
        Self::with_provenance(n, lut, Provenance::Lut)
    }

    pub(crate) fn with_provenance(n: u32, lut: Vec<u64>, provenance: Provenance) -> Result<Self> {
        check_dimension(n)?;
        if lut.len() != 1usize << n {
            return Err(Error::TableLength { n, len: lut.len() });
        }
        if let Some((index, &value)) = lut.iter().enumerate().find(|(_, &v)| v >= 1u64 << n) {
            return Err(Error::LutValueOutOfRange { index, value, n });
        }
        Ok(Self { n, lut, provenance })
    }

    /// The identity permutation on n bits.
    pub fn identity(n: u32) -> Result<Self> {
        check_dimension(n)?;
        Ok(Self {
            n,
            lut: (0..1u64 << n).collect(),
            provenance: Provenance::Lut,
        })
    }

    /// The monomial map x -> x^d in the given field, 0 <= d <= 2^n - 1.
    pub fn from_power(ctx: &FieldContext, d: u64) -> Result<Self> {
        let n = ctx.n();
        if d >= ctx.order() {
            return Err(Error::ExponentOutOfRange { d, n });
        }
        let lut = (0..ctx.order()).map(|x| ctx.pow(x, d)).collect();
        Self::with_provenance(
            n,
            lut,
            Provenance::Power {
                d,
                modulus: ctx.modulus(),
            },
        )
    }

    /// The polynomial map x -> sum of coeffs[i] * x^i, evaluated by Horner's
    /// rule in the given field. At most 2^n coefficients (degrees 0..2^n-1).
    pub fn from_univariate(ctx: &FieldContext, coeffs: &[u64]) -> Result<Self> {
        let n = ctx.n();
        if coeffs.len() > ctx.order() as usize {
            return Err(Error::CoefficientCount {
                len: coeffs.len(),
                n,
            });
        }
        if let Some((index, &value)) = coeffs.iter().enumerate().find(|&(_, &c)| !ctx.contains(c)) {
            return Err(Error::LutValueOutOfRange { index, value, n });
        }
        let lut = (0..ctx.order())
            .map(|x| {
                coeffs
                    .iter()
                    .rev()
                    .fold(0u64, |acc, &c| ctx.mul(acc, x) ^ c)
            })
            .collect();
        Self::with_provenance(
            n,
            lut,
            Provenance::Univariate {
                coeffs: coeffs.to_vec(),
                modulus: ctx.modulus(),
            },
        )
    }

    /// Parse the LUT text format: 2^n whitespace-separated integers
    /// (decimal or 0x-hex), optionally preceded by `n=<k>`.
    pub fn parse_lut(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace().peekable();
        let declared = match tokens.peek() {
            Some(t) if t.starts_with("n=") => {
                let n: u32 = t[2..]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad dimension header `{t}`")))?;
                tokens.next();
                Some(n)
            }
            _ => None,
        };
        let values: Vec<u64> = tokens
            .map(|t| {
                if let Some(hex) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
                    u64::from_str_radix(hex, 16)
                } else {
                    t.parse()
                }
                .map_err(|_| Error::Parse(format!("bad look-up table entry `{t}`")))
            })
            .collect::<Result<_>>()?;
        let n = match declared {
            Some(n) => n,
            None => {
                let len = values.len();
                if !len.is_power_of_two() || len < 2 {
                    return Err(Error::Parse(format!(
                        "look-up table length {len} is not a power of two >= 2"
                    )));
                }
                len.trailing_zeros()
            }
        };
        check_dimension(n)?;
        if values.len() != 1usize << n {
            return Err(Error::TableLength {
                n,
                len: values.len(),
            });
        }
        Self::from_lut(n, values)
    }

    /// Render in the LUT text format with a dimension header.
    pub fn to_lut_string(&self) -> String {
        let body: Vec<String> = self.lut.iter().map(u64::to_string).collect();
        format!("n={}\n{}", self.n, body.join(" "))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Domain size 2^n.
    pub fn size(&self) -> u64 {
        1u64 << self.n
    }

    /// F(x). Panics if x is out of range.
    #[inline]
    pub fn get(&self, x: u64) -> u64 {
        self.lut[x as usize]
    }

    pub fn lut(&self) -> &[u64] {
        &self.lut
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub(crate) fn set_provenance(&mut self, provenance: Provenance) {
        self.provenance = provenance;
    }

    /// Component function x -> mask . F(x) under the integer inner product.
    /// Mask 0 yields the zero function.
    pub fn component(&self, mask: u64) -> Result<BooleanFunction> {
        if mask >= self.size() {
            return Err(Error::MaskOutOfRange { mask, n: self.n });
        }
        BooleanFunction::from_fn(self.n, |x| dot(mask, self.lut[x as usize]))
    }

    /// Whether the table is a bijection.
    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![0u64; self.size().div_ceil(64) as usize];
        for &v in &self.lut {
            let slot = &mut seen[(v >> 6) as usize];
            let bit = 1u64 << (v & 63);
            if *slot & bit != 0 {
                return false;
            }
            *slot |= bit;
        }
        true
    }

    /// Row a of the difference table: counts of F(x + a) + F(x) = b over b.
    fn difference_row(&self, a: u64) -> Vec<u32> {
        let mut row = vec![0u32; self.size() as usize];
        for x in 0..self.size() {
            row[(self.get(x ^ a) ^ self.get(x)) as usize] += 1;
        }
        row
    }

    /// Differential uniformity: the largest difference-table entry over
    /// nonzero input differences. Streams row by row; no table is kept.
    pub fn differential_uniformity(&self) -> u64 {
        (1..self.size())
            .into_par_iter()
            .map(|a| {
                self.difference_row(a)
                    .into_iter()
                    .max()
                    .expect("rows are nonempty")
            })
            .max()
            .map_or(0, u64::from)
    }

    /// Whether the differential uniformity equals 2, its minimum.
    pub fn is_apn(&self) -> bool {
        self.differential_uniformity() == 2
    }

    /// Materialize the full difference table (n <= [`DDT_TABLE_MAX_N`]).
    pub fn ddt(&self) -> Result<DifferenceDistributionTable> {
        if self.n > DDT_TABLE_MAX_N {
            return Err(Error::SizeCap {
                what: "difference distribution table",
                n: self.n,
                cap: DDT_TABLE_MAX_N,
            });
        }
        let size = self.size() as usize;
        let rows: Vec<Vec<u32>> = (0..self.size())
            .into_par_iter()
            .map(|a| self.difference_row(a))
            .collect();
        let mut counts = Vec::with_capacity(size * size);
        for row in rows {
            counts.extend_from_slice(&row);
        }
        Ok(DifferenceDistributionTable {
            n: self.n,
            counts,
        })
    }

    /// Algebraic degree: the largest coordinate ANF degree, which equals the
    /// largest degree over all nonzero components.
    pub fn degree(&self) -> u32 {
        (0..self.n)
            .map(|i| {
                self.component(1 << i)
                    .expect("coordinate masks are in range")
                    .degree()
            })
            .max()
            .unwrap_or(0)
    }
}

impl std::fmt::Debug for VectorialFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.n <= 6 {
            write!(f, "VectorialFunction(n={}, lut={:?})", self.n, self.lut)
        } else {
            write!(f, "VectorialFunction(n={})", self.n)
        }
    }
}

/// Full difference distribution table, row-major over input differences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceDistributionTable {
    n: u32,
    counts: Vec<u32>,
}

impl DifferenceDistributionTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn entry(&self, a: u64, b: u64) -> u32 {
        self.counts[((a << self.n) | b) as usize]
    }

    pub fn row(&self, a: u64) -> &[u32] {
        let size = 1usize << self.n;
        &self.counts[a as usize * size..(a as usize + 1) * size]
    }

    /// Largest entry over nonzero input differences.
    pub fn uniformity(&self) -> u64 {
        let size = 1usize << self.n;
        self.counts[size..]
            .iter()
            .copied()
            .max()
            .map_or(0, u64::from)
    }

    pub fn is_apn(&self) -> bool {
        self.uniformity() == 2
    }
}
