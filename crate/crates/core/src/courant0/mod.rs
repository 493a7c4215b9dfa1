//! Courant algebroids over a point: quadratic Lie algebras, Dirac structures
//! and relations, Manin-pair morphisms, coisotropic reduction, and the
//! over-a-point classification of VB- and LA-Courant algebroids.

mod beta;
mod double;
mod lie;
mod manin;
mod quadlie;
mod reduce;

pub use beta::{check_beta, la_dirac_point, BetaElement};
pub use double::{build_double, tangent_prolong_point, vb_dirac_point};
pub use lie::LieAlgebra;
pub use manin::{manin_morphism_check, ManinPairPoint};
pub use quadlie::{check_quadratic_lie, dirac_check_point, QuadraticLieAlgebra};
pub use reduce::reduce_coisotropic_point;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Courant0Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("structure constants not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiFailure(usize, usize, usize),
    #[error("metric not invariant on basis triple ({0}, {1}, {2})")]
    NotInvariant(usize, usize, usize),
    #[error("{0}")]
    Quadratic(#[from] crate::linrel::LinRelError),
    #[error("not coisotropic")]
    NotCoisotropic,
    #[error("not a subalgebra: bracket of basis vectors {0}, {1} leaves the subspace")]
    NotSubalgebra(usize, usize),
    #[error("bracket does not descend: [c⊥, c] leaves c⊥ at basis pair ({0}, {1})")]
    BracketDoesNotDescend(usize, usize),
    #[error("a metric is required when t != 0")]
    MetricRequired,
    #[error("induced form is degenerate")]
    DegenerateForm,
}
