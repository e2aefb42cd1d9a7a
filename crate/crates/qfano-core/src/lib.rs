//! Exact computer-algebra engine and verification suite for the affine key
//! varieties Π¹⁵ and H¹³ and the eight prime ℚ-Fano threefold classes cut
//! from them.
//!
//! - [`poly`]: sparse rational polynomials, matrices, substitutions, weights.
//! - [`catalog`]: every defining polynomial, matrix, group action and class
//!   record, built programmatically.
//! - [`sampler`]: seeded exact rational points on the varieties.
//! - [`verifier`]: the named check suite.
//! - [`graded`]: weights, degrees, Hilbert series and adjunction numerics.
//! - [`report`]: run configuration, parallel execution and report output.

pub mod catalog;
pub mod graded;
pub mod linalg;
pub mod poly;
pub mod rat;
pub mod report;
pub mod sampler;
pub mod verifier;

pub use catalog::{universe, FanoClass, HSystem, PiSystem};
pub use poly::{Monomial, PolyError, PolyMatrix, Polynomial, RationalPoint, Substitution, VarTable, WeightVector};
pub use rat::Rat;
pub use report::{run, Format, Report, RunConfig, UsageError};
pub use verifier::{CheckResult, CheckStatus};
