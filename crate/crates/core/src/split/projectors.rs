use serde::Serialize;

use super::SplitData;
use crate::error::{Error, Result};
use crate::linalg::{Decomposition, MatrixE};
use crate::scalar::{FieldSpec, Scalar};

/// `prod_{j != i} (x - eig_j) / (eig_i - eig_j)` for each `i`.
pub fn product_projectors(x: &MatrixE, eig: &[Scalar]) -> Vec<MatrixE> {
    let n = x.rows();
    (0..eig.len())
        .map(|i| {
            let mut p = MatrixE::identity(n);
            for (j, t) in eig.iter().enumerate() {
                if j == i {
                    continue;
                }
                let denom = (&eig[i] - t).inv().expect("eigenvalues are distinct");
                p = &p * x.shift(&-t);
                p = p.scale(&denom);
            }
            p
        })
        .collect()
}

/// `E_i` (onto `V_i`) and `Ẽ*_i` (onto `Ṽ*_i`), each built from its
/// decomposition and from the product formula; the two must agree.
pub fn eigen_projectors(
    split: &SplitData,
    a: &MatrixE,
    atilde: &MatrixE,
    vtilde: &Decomposition,
    field: &FieldSpec,
) -> Result<(Vec<MatrixE>, Vec<MatrixE>)> {
    let d = split.d as i64;
    let up: Vec<Scalar> = (0..=d).map(|i| field.q_pow(2 * i - d)).collect();
    let down: Vec<Scalar> = up.iter().rev().cloned().collect();
    let e_prod = product_projectors(a, &up);
    if let Some(i) = (0..e_prod.len()).find(|&i| &e_prod[i] != split.v.projector(i)) {
        return Err(Error::structural(
            "projectors",
            format!("product formula for E_{i} disagrees with the eigenspace projection"),
        ));
    }
    let et_prod = product_projectors(atilde, &down);
    if let Some(i) = (0..et_prod.len()).find(|&i| &et_prod[i] != vtilde.projector(i)) {
        return Err(Error::structural(
            "projectors",
            format!("product formula for the {i}th Ã* projection disagrees with its eigenspace"),
        ));
    }
    Ok((e_prod, et_prod))
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub pass: bool,
    /// Indices `i` at which one of the two compositions fails.
    pub failures: Vec<usize>,
}

/// `G_{d-i} E_i` is the identity on `W_{d-i}` and `E_i G_{d-i}` on `V_i`.
pub fn bijection_check(split: &SplitData) -> BijectionReport {
    let d = split.d;
    let id = MatrixE::identity(split.n);
    let failures: Vec<usize> = (0..=d)
        .filter(|&i| {
            let g = split.g(d - i);
            let e = &split.e[i];
            let on_w = split.w.part(d - i).annihilated_by(&(g * e - &id));
            let on_v = split.v.part(i).annihilated_by(&(e * g - &id));
            let dims = split.w.part(d - i).dim() == split.v.part(i).dim();
            !(on_w && on_v && dims)
        })
        .collect();
    BijectionReport {
        pass: failures.is_empty(),
        failures,
    }
}

/// Whether `E_i` agrees on `W_{d-i}` with
/// `sum_{h=0}^{i} r^h / prod_{k=1}^{h} (q^{2i-d} - q^{2i-d-2k})`.
pub fn ei_on_w_series(split: &SplitData, i: usize, field: &FieldSpec) -> bool {
    let d = split.d as i64;
    let ii = i as i64;
    let n = split.n;
    let top = field.q_pow(2 * ii - d);
    let mut series = MatrixE::zeros(n, n);
    let mut power = MatrixE::identity(n);
    let mut denom = Scalar::one();
    for h in 0..=ii {
        if h > 0 {
            power = &power * &split.raise_w;
            denom = denom * (&top - field.q_pow(2 * ii - d - 2 * h));
        }
        series = series + power.scale(&denom.inv().expect("q is not a root of unity"));
    }
    let diff = &series - &split.e[i];
    split.w.part(split.d - i).annihilated_by(&diff)
}
