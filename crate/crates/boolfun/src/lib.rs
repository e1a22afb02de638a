//! Exact-arithmetic analysis of Boolean functions and S-box style vectorial
//! maps: Walsh spectra, algebraic normal forms, derivative weight totals,
//! and the structural verdicts (bijectivity, differential uniformity 2,
//! bent/plateaued classes) those totals decide.
//!
//! All computation is exact integer arithmetic; every total has at least two
//! independent routes and the hot paths are cross-checked against literal
//! definitional counters in `oracle`. Truth tables are bit-packed with
//! x_1 as the least significant index bit, and the inner product a . x is
//! popcount(a & x) mod 2.

pub mod anf;
pub mod bf;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod gf2n;
pub mod metrics;
pub mod oracle;
pub mod vectorial;
pub mod walsh;

pub use anf::AnfPolynomial;
pub use bf::{dot, BooleanFunction, MAX_N};
pub use classify::{Classification, LinearSpace};
pub use error::{Error, Result};
pub use gf2n::FieldContext;
pub use metrics::{
    PredicateOutcome, Relation, ScalarDerivativeProfile, VectorialDerivativeProfile,
    VECTORIAL_PROFILE_MAX_N,
};
pub use vectorial::{
    DifferenceDistributionTable, Provenance, VectorialFunction, DDT_TABLE_MAX_N,
};
pub use walsh::WalshSpectrum;
