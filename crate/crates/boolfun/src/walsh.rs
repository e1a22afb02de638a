//! Walsh spectra and autocorrelation, computed by the in-place butterfly.
//!
//! The Walsh value at a is W(a) = sum over x of (-1)^(f(x) + a.x). The
//! butterfly computes all 2^n values in n passes of paired sums and
//! differences, exactly, in signed 64-bit arithmetic: |W| <= 2^n <= 2^20,
//! and intermediate autocorrelation sums stay below 2^60.

use crate::bf::BooleanFunction;

/// In-place Walsh-Hadamard butterfly over a slice whose length is a power
/// of two: replaces v by the transform with kernel (-1)^(a.x).
pub fn butterfly(values: &mut [i64]) {
    debug_assert!(values.len().is_power_of_two());
    let mut h = 1;
    while h < values.len() {
        for block in (0..values.len()).step_by(2 * h) {
            for i in block..block + h {
                let u = values[i];
                let v = values[i + h];
                values[i] = u + v;
                values[i + h] = u - v;
            }
        }
        h *= 2;
    }
}

/// The full Walsh spectrum of a Boolean function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: u32,
    values: Vec<i64>,
}

impl WalshSpectrum {
    pub(crate) fn from_values(n: u32, values: Vec<i64>) -> Self {
        debug_assert_eq!(values.len(), 1usize << n);
        Self { n, values }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// W(a). Panics if a is out of range.
    pub fn value(&self, a: u64) -> i64 {
        self.values[a as usize]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Largest |W(a)| over all a.
    pub fn max_abs(&self) -> u64 {
        self.values.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0)
    }

    /// Sum of W(a)^2; equals 2^(2n) for every function.
    pub fn power_moment2(&self) -> u128 {
        self.values
            .iter()
            .map(|&v| (v as i128 * v as i128) as u128)
            .sum()
    }

    /// Sum of W(a)^4. Can reach 2^(4n), hence the 128-bit result.
    pub fn power_moment4(&self) -> u128 {
        self.values
            .iter()
            .map(|&v| {
                let sq = (v as i128 * v as i128) as u128;
                sq * sq
            })
            .sum()
    }

    /// Nonlinearity: distance to the closest affine function,
    /// 2^(n-1) - max|W| / 2.
    pub fn nonlinearity(&self) -> u64 {
        (1u64 << (self.n - 1)) - self.max_abs() / 2
    }

    /// Autocorrelation of the underlying function: transforming the squared
    /// spectrum gives 2^n times the autocorrelation.
    pub fn autocorrelation(&self) -> Vec<i64> {
        let mut sq: Vec<i64> = self.values.iter().map(|&w| w * w).collect();
        butterfly(&mut sq);
        let size = 1i64 << self.n;
        for v in &mut sq {
            debug_assert_eq!(*v % size, 0, "autocorrelation must divide exactly");
            *v /= size;
        }
        sq
    }
}

impl BooleanFunction {
    /// Walsh spectrum via the butterfly, O(n 2^n) exact integer operations.
    pub fn walsh(&self) -> WalshSpectrum {
        let mut values: Vec<i64> = self.bits().map(|b| if b { -1 } else { 1 }).collect();
        butterfly(&mut values);
        WalshSpectrum::from_values(self.n(), values)
    }

    /// Nonlinearity computed from the spectrum.
    pub fn nonlinearity(&self) -> u64 {
        self.walsh().nonlinearity()
    }

    /// Autocorrelation: for every a, sum over x of (-1)^(f(x) + f(x + a)).
    ///
    /// Computed spectrally: the transform of the squared spectrum equals
    /// 2^n times the autocorrelation. Entry a relates to the derivative
    /// weight by wt(D_a f) = (2^n - ac[a]) / 2; entry 0 is always 2^n.
    pub fn autocorrelation(&self) -> Vec<i64> {
        self.walsh().autocorrelation()
    }

    /// All derivative weights wt(D_a f) indexed by direction a, from the
    /// autocorrelation; entry 0 is 0.
    pub fn derivative_weights(&self) -> Vec<u64> {
        let size = self.size() as i64;
        self.autocorrelation()
            .iter()
            .map(|&ac| {
                let diff = size - ac;
                debug_assert!(diff >= 0 && diff % 2 == 0);
                (diff / 2) as u64
            })
            .collect()
    }
}
