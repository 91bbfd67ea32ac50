//! Tridiagonal pairs: axiom checks, standard orderings and eigenvalue classes.

mod axioms;
mod classify;
mod pair;
mod profile;

pub use axioms::{verify_axioms, AxiomCheck, AxiomReport};
pub use classify::{classify, lowering_pattern, mixed_pattern, raising_pattern, PairClass};
pub use pair::TriPair;
pub use profile::{eigenspaces, standard_orderings, ProfileSummary, TdProfile};
