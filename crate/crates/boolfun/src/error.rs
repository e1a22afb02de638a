use thiserror::Error;

/// Errors produced by constructors and size-guarded operations.
///
/// Mathematical operations on already-validated values do not fail; every
/// fallible path is an input problem (bad dimension, malformed table, a
/// reducible modulus) or a size guard refusing work that would not fit the
/// supported range.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension n = {n} outside supported range 1..={max}")]
    DimensionOutOfRange { n: u32, max: u32 },

    #[error("truth table has {len} entries, expected 2^{n}")]
    TableLength { n: u32, len: usize },

    #[error("direction {a:#x} is not an n = {n} bit vector")]
    DirectionOutOfRange { a: u64, n: u32 },

    #[error("component mask {mask:#x} is not an n = {n} bit vector")]
    MaskOutOfRange { mask: u64, n: u32 },

    #[error("look-up table entry {value:#x} at index {index} exceeds {n} bits")]
    LutValueOutOfRange { index: usize, value: u64, n: u32 },

    #[error("modulus {modulus:#b} does not have degree {n}")]
    ModulusDegree { modulus: u64, n: u32 },

    #[error("modulus {modulus:#b} is reducible over GF(2)")]
    ReducibleModulus { modulus: u64 },

    #[error("exponent {d} exceeds 2^{n} - 1")]
    ExponentOutOfRange { d: u64, n: u32 },

    #[error("{len} coefficients exceed the field size 2^{n}")]
    CoefficientCount { len: usize, n: u32 },

    #[error("k = {k} violates gcd(k, n) = 1 with n = {n}")]
    GcdConstraint { n: u32, k: u32 },

    #[error("k = {k} out of range for {what} at n = {n}")]
    KOutOfRange {
        what: &'static str,
        k: u32,
        n: u32,
    },

    #[error("{what} requires a permutation")]
    NotAPermutation { what: &'static str },

    #[error("{what} supports n <= {cap}, got n = {n}")]
    SizeCap {
        what: &'static str,
        n: u32,
        cap: u32,
    },

    #[error("packed binary truth tables require n >= 3, got n = {n}")]
    PackedFormat { n: u32 },

    #[error("derivative weight total {s1} unrealizable at n = {n}: {reason}")]
    UnrealizableS1 {
        s1: u64,
        n: u32,
        reason: &'static str,
    },

    #[error("no closed form for {what} at n = {n}")]
    NoClosedForm { what: &'static str, n: u32 },

    #[error("{what} requires an even dimension, got n = {n}")]
    OddDimension { what: &'static str, n: u32 },

    #[error("{what} must act on {expected} bits, got {got}")]
    PieceDimension {
        what: &'static str,
        expected: u32,
        got: u32,
    },

    #[error("catalog fixture `{name}` failed its integrity check")]
    FixtureIntegrity { name: &'static str },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
