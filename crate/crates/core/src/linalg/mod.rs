//! Dense exact linear algebra and the subspace lattice.

mod closure;
mod decomposition;
pub mod elim;
mod matrix;
mod subspace;

pub use closure::algebra_closure_dim;
pub use decomposition::Decomposition;
pub use matrix::{product, MatrixE};
pub use subspace::{column_space, kernel, sum_of, unit_vector, Subspace};
