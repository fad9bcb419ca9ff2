//! Exact computations around quaternionic Clifford algebras and spin^h geometry.
//!
//! The crate is organised by subsystem:
//!
//! * [`clifford`]: blade arithmetic in `Cl_{r,s}` with exact rational
//!   coefficients, and the matrix-algebra classification of `Cl_n`,
//!   `CCl_n`, `Cl^h_n = Cl_n ⊗ H` and `CCl^h_n`.
//! * [`modules`]: fundamental Z2-graded Clifford modules, their dimensions,
//!   Grothendieck groups, scalar changes and graded tensor identities.
//! * [`series`]: truncated power series over Q for Â, Â^h, Chern characters,
//!   4-manifold genera and the HP^n pairing matrix.
//! * [`steenrod`]: polynomials over F2 in Stiefel–Whitney classes with the
//!   Steenrod action, Wu classes, Adem reduction and the presentation of
//!   `H*(BSpin^h; Z2)`.
//! * [`ktheory`]: KO/KU/KSp coefficient groups with coefficients, Z_k-spheres,
//!   mod-k index arithmetic and Pontryagin duality checks.
//!
//! Batch routines take an [`Execution`] argument. With the default `parallel`
//! feature, [`Execution::Parallel`] fans work out over rayon; without it every
//! batch runs sequentially.

pub mod clifford;
pub mod error;
pub mod exec;
pub mod groups;
pub mod ktheory;
pub mod modules;
pub mod series;
pub mod steenrod;

pub use error::Error;
pub use exec::Execution;
pub use groups::{AbGroupExpr, FGAbelianGroup, Summand};

/// Exact rational numbers used throughout the crate.
pub type Rational = num_rational::BigRational;
