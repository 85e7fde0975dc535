//! Bounded complexes of free modules over `k[x]/(x^n)` and their homotopy
//! category.

pub mod algebra;
pub mod chain_map;
pub mod complex;
pub mod generators;
pub mod homotopy;

pub use algebra::{AMatrix, SerialAlgebra};
pub use chain_map::ChainMap;
pub use complex::Complex;
pub use generators::{generator_morphism, interval_shift_iso, GeneratorClass};
pub use homotopy::{hom_basis_k, is_null_homotopic, HomSpaceK, Homotopy};
