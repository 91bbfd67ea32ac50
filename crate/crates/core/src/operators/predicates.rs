//! Two-sided eigenspace-shift predicates for q-Weyl type relations.

use crate::linalg::{kernel, sum_of, MatrixE, Subspace};
use crate::scalar::{FieldSpec, Scalar};

/// `V_X(theta) = ker(X - theta I)`.
pub fn eigenspace(x: &MatrixE, theta: &Scalar) -> Subspace {
    kernel(&x.shift(&-theta))
}

#[derive(Clone, Debug)]
pub enum PredicateForm {
    /// `qXY - q^{-1}YX - (q-q^{-1})I` vanishes on `V_X(theta)` iff
    /// `(Y - theta^{-1})V_X(theta) ⊆ V_X(q^{-2} theta)`.
    WeylOnX,
    /// `qXY - q^{-1}YX - (q-q^{-1})I` vanishes on `V_Y(theta)` iff
    /// `(X - theta^{-1})V_Y(theta) ⊆ V_Y(q^2 theta)`.
    WeylOnY,
    /// `qXY - q^{-1}YX - (q-q^{-1})(X^2 + cI)` vanishes on `V_X(theta)` iff
    /// `(Y - theta - c theta^{-1})V_X(theta) ⊆ V_X(q^{-2} theta)`.
    QuadraticOnX { c: Scalar },
}

/// Truth values of the two sides at one `theta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PredicateSides {
    pub vanishes: bool,
    pub shifts: bool,
}

impl PredicateSides {
    pub fn agree(&self) -> bool {
        self.vanishes == self.shifts
    }
}

/// Evaluates both sides of the stated equivalence; `theta` must be nonzero.
pub fn shift_predicate(
    x: &MatrixE,
    y: &MatrixE,
    theta: &Scalar,
    form: &PredicateForm,
    field: &FieldSpec,
) -> PredicateSides {
    let n = x.rows();
    let q = field.q();
    let qinv = field.q_pow(-1);
    let theta_inv = theta.inv().expect("theta is nonzero");
    let weyl = (x * y).scale(&q) - (y * x).scale(&qinv);
    let (expr, space, moved, target) = match form {
        PredicateForm::WeylOnX => (
            weyl.shift(&-field.q_minus_qinv()),
            eigenspace(x, theta),
            y.shift(&-&theta_inv),
            eigenspace(x, &(field.q_pow(-2) * theta)),
        ),
        PredicateForm::WeylOnY => (
            weyl.shift(&-field.q_minus_qinv()),
            eigenspace(y, theta),
            x.shift(&-&theta_inv),
            eigenspace(y, &(field.q_pow(2) * theta)),
        ),
        PredicateForm::QuadraticOnX { c } => (
            weyl - (x * x + MatrixE::scalar(n, c.clone())).scale(&field.q_minus_qinv()),
            eigenspace(x, theta),
            y.shift(&-(theta + c * &theta_inv)),
            eigenspace(x, &(field.q_pow(-2) * theta)),
        ),
    };
    PredicateSides {
        vanishes: space.annihilated_by(&expr),
        shifts: space.first_escape(&moved, &target).is_none(),
    }
}

/// `sum_{n=0}^{bound} V_X(q^{-2n} theta) = sum_{n=0}^{bound} V_Y(q^{2n} theta^{-1})`.
///
/// Any `bound` at least the number of distinct eigenvalues of either map
/// reaches the full infinite sums.
pub fn weyl_sum_equality(x: &MatrixE, y: &MatrixE, theta: &Scalar, bound: usize, field: &FieldSpec) -> bool {
    let n = x.rows();
    let theta_inv = theta.inv().expect("theta is nonzero");
    let bound = bound as i64;
    let left: Vec<Subspace> = (0..=bound).map(|k| eigenspace(x, &(field.q_pow(-2 * k) * theta))).collect();
    let right: Vec<Subspace> = (0..=bound).map(|k| eigenspace(y, &(field.q_pow(2 * k) * &theta_inv))).collect();
    sum_of(n, &left.iter().collect::<Vec<_>>()) == sum_of(n, &right.iter().collect::<Vec<_>>())
}
