use crate::error::{Error, Result};
use crate::linalg::MatrixE;
use crate::scalar::FieldSpec;

/// An ordered pair of square matrices `(A, A*)` of equal size over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriPair {
    a: MatrixE,
    astar: MatrixE,
    field: FieldSpec,
}

impl TriPair {
    pub fn new(a: MatrixE, astar: MatrixE, field: FieldSpec) -> Result<Self> {
        if !a.is_square() || !astar.is_square() {
            return Err(Error::Domain("A and A* must be square".into()));
        }
        if a.rows() != astar.rows() {
            return Err(Error::Domain(format!(
                "A is {n}x{n} but A* is {m}x{m}",
                n = a.rows(),
                m = astar.rows()
            )));
        }
        if a.rows() == 0 {
            return Err(Error::Domain("the space must be nonzero".into()));
        }
        if !field.is_symbolic() && (a.is_symbolic() || astar.is_symbolic()) {
            return Err(Error::Domain("symbolic entry in a specialized-mode pair".into()));
        }
        Ok(Self { a, astar, field })
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn a(&self) -> &MatrixE {
        &self.a
    }

    pub fn astar(&self) -> &MatrixE {
        &self.astar
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// The pair `(A*, A)`.
    pub fn swapped(&self) -> Self {
        Self {
            a: self.astar.clone(),
            astar: self.a.clone(),
            field: self.field.clone(),
        }
    }
}
