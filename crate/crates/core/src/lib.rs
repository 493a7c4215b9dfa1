//! Exact-arithmetic kernel for the linear algebra of Courant algebroids.
//!
//! Everything is computed over the rationals with zero tolerance: subspaces
//! are kept in reduced row echelon form so equality is a byte comparison,
//! Lie-theoretic identities are verified by exhaustive basis enumeration, and
//! polynomial-coefficient structures on `R^n` are manipulated symbolically.
//!
//! The crate is organised around six subsystems:
//!
//! - [`linrel`] — rational matrices, canonical subspaces, linear relations
//!   and quadratic vector spaces.
//! - [`courant0`] — Courant algebroids over a point: quadratic Lie algebras,
//!   Dirac structures, Manin-pair morphisms, coisotropic reduction and the
//!   `g ⋉ g*` doubles.
//! - [`polycalc`] — Cartan calculus with polynomial coefficients: exterior
//!   derivative, Lie/Schouten/Koszul brackets.
//! - [`courantpoly`] — Courant algebroids with polynomial data on trivial
//!   bundles: the standard/twisted exact algebroid, action algebroids, the
//!   bracket-extension algorithm, Dirac checks, restriction and pull-back.
//! - [`tanprol`] — decomposed double vector bundles and tangent prolongation.
//! - [`pseudodirac`] — pseudo-connections, the modified bracket, torsion and
//!   Ψ tensors, flat reduction, and backward images.

pub mod courant0;
pub mod courantpoly;
pub mod linrel;
pub mod polycalc;
pub mod pseudodirac;
pub mod report;
pub mod tanprol;

pub use linrel::{LinearRelation, QuadraticSpace, Rat, RatMatrix, Subspace};
pub use report::{Check, CheckStatus, Report};
