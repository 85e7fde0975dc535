//! Graded centers of triangulated categories attached to serial algebras.
//!
//! The crate computes, by exact linear algebra on finite *window*
//! subcategories, the graded center `Z*(T)` of
//!
//! * the homotopy category of perfect complexes over the dual numbers
//!   `k[x]/(x^2)` ([`kbproj`]),
//! * derived categories of nilpotent representations of cyclic and linear
//!   quivers ([`reps`]),
//! * the stable module category of `k[x]/(x^n)` ([`stable`]).
//!
//! The solver itself ([`window`]) is category-agnostic: any type
//! implementing [`window::GradedCategory`] can be fed to it.

pub mod exec;
pub mod field;
pub mod kbproj;
pub mod linear;
pub mod reps;
pub mod serial;
pub mod stable;
pub mod window;

mod error;

pub use error::Error;
pub use field::{FieldTag, Fp, Rational, Scalar};
pub use linear::{ExactMatrix, RowEchelon, Subspace};
