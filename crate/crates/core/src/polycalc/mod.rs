//! Exact Cartan calculus with polynomial coefficients on `R^n`: polynomial
//! functions, differential forms, multivector fields, and the Lie, Schouten
//! and Koszul brackets.
//!
//! Everything is sparse: a polynomial maps exponent vectors to nonzero
//! rational coefficients, and forms/multivectors map strictly increasing
//! index tuples to nonzero polynomials.

mod cartan;
mod form;
mod multivector;
mod poly;
mod schouten;

pub use cartan::{ext_deriv, interior_product, lie_derivative, lie_derivative_direct};
pub use form::PolyForm;
pub use multivector::PolyMultiVector;
pub use poly::Poly;
pub use schouten::{koszul, lie_bracket, schouten};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyCalcError {
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("degree cap exceeded: {0} > {1}")]
    DegreeCap(u32, u32),
}
