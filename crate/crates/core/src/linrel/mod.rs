//! Exact rational linear algebra, linear relations and quadratic vector
//! spaces.
//!
//! All subspaces are stored in reduced row echelon form with pivots ordered
//! left to right, so two subspaces are equal iff their stored bases are equal
//! entrywise. Relations follow the `(target, source)` block convention: a
//! relation `R: V1 ⇸ V2` is a subspace of `V2 × V1` with the `V2` block
//! first.

mod matrix;
mod quadratic;
mod rat;
mod relation;
mod subspace;

pub use matrix::RatMatrix;
pub use quadratic::{QuadraticSpace, SubspaceClass};
pub use rat::Rat;
pub use relation::{ComposeInfo, LinearRelation};
pub use subspace::{QuotientData, Subspace};

use thiserror::Error;

/// Errors raised by the relation and subspace calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinRelError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    Singular,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("parse error: {0}")]
    Parse(String),
}
