//! Sparse multivariate polynomials over Q(ζ) in named variables.

mod monomial;
mod poly;
mod varset;

pub use monomial::Monomial;
pub use poly::Poly;
pub use varset::VarSet;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultipolyError {
    #[error("variable set is empty")]
    EmptyVarSet,
    #[error("duplicate variable '{0}'")]
    DuplicateVariable(String),
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("variable sets differ: {left} vs {right}")]
    VarSetMismatch { left: String, right: String },
    #[error("expected {expected} images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("substitution denominator is zero")]
    ZeroDenominator,
}
