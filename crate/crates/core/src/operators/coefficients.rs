use crate::error::Result;
use crate::linalg::MatrixE;
use crate::scalar::{q_binomial, q_factorial, FieldSpec, Scalar};

/// Coefficients in the expansion of `(B-K)^j (A-K)^i` as a sum of
/// `f_{h,j} (A-K)^{i-h} (B-K)^{j-h}`.
pub struct SerrePassCoefficients<'a> {
    field: &'a FieldSpec,
    k_squared: MatrixE,
}

impl<'a> SerrePassCoefficients<'a> {
    pub fn new(field: &'a FieldSpec, k: &MatrixE) -> Self {
        Self {
            field,
            k_squared: k * k,
        }
    }

    /// `(h/2)(3h-1) + hj - 3hi + 2ij`; `h(3h-1)` is always even.
    pub fn m(h: i64, i: i64, j: i64) -> i64 {
        h * (3 * h - 1) / 2 + h * j - 3 * h * i + 2 * i * j
    }

    /// `[i h] [h]! (q - q^{-1})^h`.
    pub fn n(&self, h: u32, i: u32) -> Result<Scalar> {
        Ok(q_binomial(i, h.into(), self.field)?
            * q_factorial(h, self.field)
            * self.field.q_minus_qinv().powi(h.into()))
    }

    /// `prod_{s=0}^{mu-1} (K^2 - q^{2i-2s-2nu} I)` for the fixed outer index `i`.
    pub fn f(&self, mu: u32, nu: u32, i: u32) -> MatrixE {
        let (mu, nu, i) = (i64::from(mu), i64::from(nu), i64::from(i));
        let n = self.k_squared.rows();
        (0..mu).fold(MatrixE::identity(n), |acc, s| {
            acc * self.k_squared.shift(&-self.field.q_pow(2 * i - 2 * s - 2 * nu))
        })
    }
}
