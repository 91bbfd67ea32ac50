//! Exact computations for tridiagonal pairs of q-geometric and q-mixed type.
//!
//! The crate verifies tridiagonal-pair axioms over `Q(q)`, computes split
//! decompositions and the operators built from them, decides whether a
//! q-mixed pair carries a q-tetrahedron algebra module, constructs that
//! module, and implements the irreducible-word normal form of the deformed
//! cubic q-Serre algebra.

pub mod boxtimes;
pub mod cli;
pub mod criterion;
pub mod error;
pub mod generate;
pub mod linalg;
pub mod operators;
pub mod pairfile;
pub mod pipeline;
pub mod scalar;
pub mod split;
pub mod tdp;
pub mod words;

pub use error::{Error, Result};
pub use scalar::{FieldSpec, Scalar};
