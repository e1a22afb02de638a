//! Boolean functions f: F_2^n -> F_2 stored as bit-packed truth tables.
//!
//! Input vectors are encoded as integers with variable x1 in bit 0, x2 in
//! bit 1, and so on; truth-table bit i holds f(i). The inner product of two
//! vectors a and x is `popcount(a & x) mod 2`. All derived quantities
//! (weights, spectra, derivative totals) are exact integers.

use crate::error::{Error, Result};

/// Largest supported number of variables. A truth table at this size holds
/// 2^20 bits; everything in the crate stays within exact integer arithmetic
/// up to this bound.
pub const MAX_N: u32 = 20;

/// log2 of the bits in one storage word.
const WORD_SHIFT: u32 = 6;

/// `DELTA_MASK[j]` selects the bit positions whose j-th index bit is clear.
/// Used to permute a packed table by XOR-ing a constant into the index.
const DELTA_MASK: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// Inner product of two n-bit vectors over F_2.
#[inline]
pub fn dot(a: u64, x: u64) -> bool {
    (a & x).count_ones() & 1 == 1
}

pub(crate) fn check_dimension(n: u32) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::DimensionOutOfRange { n, max: MAX_N });
    }
    Ok(())
}

/// A Boolean function on `n` variables, 1 <= n <= [`MAX_N`].
///
/// Unused high bits of the last storage word are kept at zero so that word
/// level operations (weights, XOR) need no masking.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: u32,
    words: Vec<u64>,
}

impl BooleanFunction {
    fn word_count(n: u32) -> usize {
        if n >= WORD_SHIFT {
            1usize << (n - WORD_SHIFT)
        } else {
            1
        }
    }

    /// Mask of valid bits in the single storage word of a small function.
    fn tail_mask(n: u32) -> u64 {
        if n >= WORD_SHIFT {
            !0
        } else {
            (1u64 << (1u32 << n)) - 1
        }
    }

    /// The all-zero function.
    pub fn zero(n: u32) -> Result<Self> {
        check_dimension(n)?;
        Ok(Self {
            n,
            words: vec![0; Self::word_count(n)],
        })
    }

    /// The constant function with the given value.
    pub fn constant(n: u32, value: bool) -> Result<Self> {
        let mut f = Self::zero(n)?;
        if value {
            let last = f.words.len() - 1;
            for w in &mut f.words[..last] {
                *w = !0;
            }
            f.words[last] = Self::tail_mask(n);
        }
        Ok(f)
    }

    /// Build from a predicate evaluated on every input 0..2^n.
    pub fn from_fn(n: u32, f: impl Fn(u64) -> bool) -> Result<Self> {
        let mut out = Self::zero(n)?;
        for x in 0..out.size() {
            if f(x) {
                out.set(x, true);
            }
        }
        Ok(out)
    }

    /// Build from a slice of truth-table values, index ascending.
    pub fn from_bits(n: u32, bits: &[bool]) -> Result<Self> {
        check_dimension(n)?;
        if bits.len() != 1usize << n {
            return Err(Error::TableLength { n, len: bits.len() });
        }
        Self::from_fn(n, |x| bits[x as usize])
    }

    /// Parse the text truth-table format: one line of 2^n characters from
    /// {0,1}, index ascending, optionally preceded by a `n=<k>` header line.
    pub fn parse_table(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let first = lines.next().ok_or_else(|| Error::Parse("empty truth table input".into()))?;
        let (declared, bits_line) = if let Some(rest) = first.strip_prefix("n=") {
            let n: u32 = rest
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad dimension header `{first}`")))?;
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing truth table line after header".into()))?;
            (Some(n), line)
        } else {
            (None, first)
        };
        if lines.next().is_some() {
            return Err(Error::Parse("trailing content after truth table line".into()));
        }
        let len = bits_line.len();
        let n = match declared {
            Some(n) => {
                check_dimension(n)?;
                if len != 1usize << n {
                    return Err(Error::TableLength { n, len });
                }
                n
            }
            None => {
                if !len.is_power_of_two() || len < 2 {
                    return Err(Error::Parse(format!(
                        "truth table length {len} is not a power of two >= 2"
                    )));
                }
                let n = len.trailing_zeros();
                check_dimension(n)?;
                n
            }
        };
        let mut f = Self::zero(n)?;
        for (i, c) in bits_line.chars().enumerate() {
            match c {
                '0' => {}
                '1' => f.set(i as u64, true),
                other => {
                    return Err(Error::Parse(format!(
                        "invalid truth table character `{other}` at index {i}"
                    )))
                }
            }
        }
        Ok(f)
    }

    /// Render the truth table as a line of 2^n characters, index ascending.
    pub fn to_table_string(&self) -> String {
        (0..self.size()).map(|x| if self.get(x) { '1' } else { '0' }).collect()
    }

    /// Decode the packed binary format: little-endian bit order, 2^n / 8
    /// bytes, n >= 3. The dimension is inferred from the length.
    pub fn from_packed_bytes(bytes: &[u8]) -> Result<Self> {
        let len = bytes.len();
        if !len.is_power_of_two() || len == 0 {
            return Err(Error::Parse(format!(
                "packed table length {len} is not a power of two"
            )));
        }
        let n = len.trailing_zeros() + 3;
        check_dimension(n)?;
        let mut words = vec![0u64; Self::word_count(n)];
        for (i, b) in bytes.iter().enumerate() {
            words[i / 8] |= u64::from(*b) << (8 * (i % 8));
        }
        Ok(Self { n, words })
    }

    /// Encode as packed bytes (bit i of the stream is f(i)); requires n >= 3.
    pub fn to_packed_bytes(&self) -> Result<Vec<u8>> {
        if self.n < 3 {
            return Err(Error::PackedFormat { n: self.n });
        }
        let len = 1usize << (self.n - 3);
        let mut out = Vec::with_capacity(len);
        for w in &self.words {
            out.extend_from_slice(&w.to_le_bytes());
        }
        out.truncate(len);
        Ok(out)
    }

    /// Number of variables.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Domain size 2^n.
    pub fn size(&self) -> u64 {
        1u64 << self.n
    }

    /// Value at input x. Panics if x is out of range.
    #[inline]
    pub fn get(&self, x: u64) -> bool {
        assert!(x < self.size(), "input {x} out of range for n = {}", self.n);
        (self.words[(x >> WORD_SHIFT) as usize] >> (x & 63)) & 1 == 1
    }

    #[inline]
    fn set(&mut self, x: u64, value: bool) {
        let w = &mut self.words[(x >> WORD_SHIFT) as usize];
        let bit = 1u64 << (x & 63);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    /// Hamming weight: the number of inputs mapped to 1.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Signed correlation with zero: 2^n - 2 weight, the Walsh value at 0.
    pub fn fourier(&self) -> i64 {
        self.size() as i64 - 2 * self.weight() as i64
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.weight() == self.size()
    }

    fn check_direction(&self, a: u64) -> Result<()> {
        if a >= self.size() {
            return Err(Error::DirectionOutOfRange { a, n: self.n });
        }
        Ok(())
    }

    /// The translate x -> f(x + a), computed by permuting the packed table.
    pub(crate) fn translate(&self, a: u64) -> Self {
        debug_assert!(a < self.size());
        let word_xor = (a >> WORD_SHIFT) as usize;
        let low = (a & 63) as u32;
        let mut words = vec![0u64; self.words.len()];
        for (i, out) in words.iter_mut().enumerate() {
            let mut v = self.words[i ^ word_xor];
            let mut rem = low;
            while rem != 0 {
                let j = rem.trailing_zeros();
                let s = 1u32 << j;
                let m = DELTA_MASK[j as usize];
                v = ((v >> s) & m) | ((v & m) << s);
                rem &= rem - 1;
            }
            *out = v;
        }
        Self { n: self.n, words }
    }

    /// Pointwise XOR with another function on the same variables.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::TableLength {
                n: self.n,
                len: other.size() as usize,
            });
        }
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(Self { n: self.n, words })
    }

    /// Pointwise complement.
    pub fn complement(&self) -> Self {
        let ones = Self::constant(self.n, true).expect("dimension already validated");
        self.xor(&ones).expect("same dimension")
    }

    /// The derivative in direction a: x -> f(x + a) + f(x).
    pub fn derivative(&self, a: u64) -> Result<Self> {
        self.check_direction(a)?;
        self.translate(a).xor(self)
    }

    /// The weight of the derivative in direction a, without keeping the table.
    pub fn derivative_weight(&self, a: u64) -> Result<u64> {
        Ok(self.derivative(a)?.weight())
    }

    /// The second derivative in directions a then b.
    pub fn second_derivative(&self, a: u64, b: u64) -> Result<Self> {
        self.derivative(a)?.derivative(b)
    }

    /// Truth values in index order.
    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.size()).map(move |x| self.get(x))
    }
}

impl std::fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.n <= 8 {
            write!(f, "BooleanFunction(n={}, {})", self.n, self.to_table_string())
        } else {
            write!(f, "BooleanFunction(n={}, weight={})", self.n, self.weight())
        }
    }
}
