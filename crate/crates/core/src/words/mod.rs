//! Words in `x, y`, their reducibility, the graded splitting of the free
//! algebra, and normal forms in the algebra with a `z^{±1}` twist.
//!
//! Element literals:
//!
//! ```text
//! element := term ('+' term)*
//! term    := coeff '*' word | word | coeff
//! word    := (('x'|'y'|'z'|'Z') ('^' signed-integer)?)*
//! ```
//!
//! `Z` is `z^{-1}`, exponents apply to the preceding letter, and `coeff` is
//! a scalar literal. Words contain no spaces.

mod element;
mod graded;
mod reduce;
mod rho;
mod word;

pub use element::{commutation_exponent, AlgebraElement, Term};
pub use graded::{graded_split, lambda_spanning_set, GeneratorUse, GradedSplit, LambdaRow, Quartic};
pub use reduce::{reduce_element, AqAlpha};
pub use rho::{rho_verify, Representation, RhoReport, CORPUS_MAX_LENGTH, CORPUS_Z};
pub use word::{all_words, enumerate_irreducible, Letter, Signature, Word};
