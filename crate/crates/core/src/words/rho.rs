use rayon::prelude::*;
use serde::Serialize;

use crate::boxtimes::NamedChecks;
use crate::linalg::MatrixE;
use crate::operators::OperatorSuite;
use crate::scalar::{q_int, FieldSpec, Scalar};
use crate::split::SplitData;

use super::element::AlgebraElement;
use super::reduce::AqAlpha;
use super::word::{all_words, Letter, Word};

/// Largest word length in the consistency corpus.
pub const CORPUS_MAX_LENGTH: usize = 6;
/// `z`-exponents in the consistency corpus.
pub const CORPUS_Z: [i64; 3] = [-2, 0, 2];

/// `x ↦ r`, `y ↦ l`, `z^{±1} ↦ B^{±1}`.
pub struct Representation<'a> {
    r: &'a MatrixE,
    l: &'a MatrixE,
    b: &'a MatrixE,
    binv: &'a MatrixE,
}

impl<'a> Representation<'a> {
    pub fn new(split: &'a SplitData, suite: &'a OperatorSuite) -> Self {
        Self {
            r: &split.raise_w,
            l: &split.lower_w,
            b: &suite.b,
            binv: &suite.binv,
        }
    }

    fn n(&self) -> usize {
        self.b.rows()
    }

    pub fn word(&self, w: &Word) -> MatrixE {
        w.letters().iter().fold(MatrixE::identity(self.n()), |acc, l| match l {
            Letter::X => &acc * self.r,
            Letter::Y => &acc * self.l,
        })
    }

    pub fn z_power(&self, k: i64) -> MatrixE {
        let base = if k >= 0 { self.b } else { self.binv };
        base.pow(k.unsigned_abs() as u32)
    }

    pub fn element(&self, e: &AlgebraElement) -> MatrixE {
        e.terms().fold(MatrixE::zeros(self.n(), self.n()), |acc, ((w, z), c)| {
            acc + (self.word(w) * self.z_power(*z)).scale(c)
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RhoReport {
    pub alpha: Scalar,
    pub relations: NamedChecks,
    pub corpus_size: usize,
    /// Monomials whose image differs from the image of their reduction.
    pub corpus_failures: Vec<String>,
    pub pass: bool,
}

/// Checks the defining relations under `ρ` and that reduction preserves
/// `ρ` on every `w z^j` with `|w| <= 6`, `j ∈ {-2, 0, 2}`.
pub fn rho_verify(split: &SplitData, suite: &OperatorSuite, alpha: &Scalar, field: &FieldSpec) -> RhoReport {
    let rho = Representation::new(split, suite);
    let (r, l, b, binv) = (rho.r, rho.l, rho.b, rho.binv);
    let n = rho.n();
    let id = MatrixE::identity(n);
    let q2 = field.q_pow(2);
    let three = q_int(3, field);
    let binv2 = binv * binv;
    let serre = |x: &MatrixE, y: &MatrixE| {
        let x2 = x * x;
        &x2 * x * y - (&x2 * y * x).scale(&three) + (x * y * &x2).scale(&three) - y * &x2 * x
    };
    let relations = NamedChecks(vec![
        ("z_inverts".into(), b * binv == id && binv * b == id),
        ("z_x_commutation".into(), b * r == (r * b).scale(&q2)),
        ("z_y_commutation".into(), (b * l).scale(&q2) == l * b),
        ("x_serre".into(), serre(r, l) == (r * r * &binv2).scale(alpha)),
        ("y_serre".into(), {
            let lhs = serre(l, r).scale(&-Scalar::one());
            lhs == (&binv2 * l * l).scale(alpha)
        }),
    ]);

    let alg = AqAlpha::new(alpha.clone(), field.clone());
    let corpus: Vec<(Word, i64)> = (0..=CORPUS_MAX_LENGTH)
        .flat_map(all_words)
        .flat_map(|w| CORPUS_Z.into_iter().map(move |z| (w.clone(), z)))
        .collect();
    let mut corpus_failures: Vec<String> = corpus
        .par_iter()
        .filter_map(|(w, z)| {
            let e = AlgebraElement::monomial(w.clone(), *z, Scalar::one());
            (rho.element(&alg.reduce(&e)) != rho.element(&e)).then(|| e.to_string())
        })
        .collect();
    corpus_failures.sort();
    let pass = relations.all_pass() && corpus_failures.is_empty();
    RhoReport {
        alpha: alpha.clone(),
        relations,
        corpus_size: corpus.len(),
        corpus_failures,
        pass,
    }
}
