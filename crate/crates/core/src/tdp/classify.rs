use serde::Serialize;

use crate::scalar::{FieldSpec, Scalar};

/// Eigenvalue class of a tridiagonal pair in a standard ordering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum PairClass {
    /// `theta_i = q^{2i-d}`, `theta*_i = q^{d-2i}`.
    QGeometric,
    /// `theta_i = q^{2i-d}`, `theta*_i = q^{2i-d} + c q^{d-2i}`, `c != 0`.
    QMixed { c: Scalar },
    Other,
}

impl PairClass {
    pub fn name(&self) -> &'static str {
        match self {
            PairClass::QGeometric => "q_geometric",
            PairClass::QMixed { .. } => "q_mixed",
            PairClass::Other => "other",
        }
    }

    pub fn c(&self) -> Option<&Scalar> {
        match self {
            PairClass::QMixed { c } => Some(c),
            _ => None,
        }
    }
}

/// `q^{2i-d}` for `i = 0..=d`.
pub fn raising_pattern(d: usize, field: &FieldSpec) -> Vec<Scalar> {
    let d = d as i64;
    (0..=d).map(|i| field.q_pow(2 * i - d)).collect()
}

/// `q^{d-2i}` for `i = 0..=d`.
pub fn lowering_pattern(d: usize, field: &FieldSpec) -> Vec<Scalar> {
    let mut v = raising_pattern(d, field);
    v.reverse();
    v
}

/// `q^{2i-d} + c q^{d-2i}` for `i = 0..=d`.
pub fn mixed_pattern(d: usize, c: &Scalar, field: &FieldSpec) -> Vec<Scalar> {
    raising_pattern(d, field)
        .into_iter()
        .zip(lowering_pattern(d, field))
        .map(|(up, down)| up + c * down)
        .collect()
}

/// Class of the eigenvalue sequences, trying the given standard orderings
/// and then both reversed. The first match wins.
pub fn classify(theta: &[Scalar], theta_star: &[Scalar], field: &FieldSpec) -> PairClass {
    if theta.is_empty() || theta.len() != theta_star.len() {
        return PairClass::Other;
    }
    let rev = |v: &[Scalar]| v.iter().rev().cloned().collect::<Vec<_>>();
    for (t, ts) in [
        (theta.to_vec(), theta_star.to_vec()),
        (rev(theta), rev(theta_star)),
    ] {
        if let Some(class) = classify_ordered(&t, &ts, field) {
            return class;
        }
    }
    PairClass::Other
}

fn classify_ordered(theta: &[Scalar], theta_star: &[Scalar], field: &FieldSpec) -> Option<PairClass> {
    let d = theta.len() - 1;
    if theta != raising_pattern(d, field).as_slice() {
        return None;
    }
    if theta_star == lowering_pattern(d, field).as_slice() {
        return Some(PairClass::QGeometric);
    }
    let d_i = d as i64;
    let c = (&theta_star[0] - field.q_pow(-d_i)) * field.q_pow(-d_i);
    if c.is_zero() || theta_star != mixed_pattern(d, &c, field).as_slice() {
        return None;
    }
    Some(PairClass::QMixed { c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_scalar;

    fn sym(s: &str) -> Scalar {
        parse_scalar(s, &FieldSpec::Symbolic).unwrap()
    }

    #[test]
    fn geometric_at_diameter_one() {
        let f = FieldSpec::Symbolic;
        let class = classify(&[sym("q^-1"), sym("q")], &[sym("q"), sym("q^-1")], &f);
        assert_eq!(class, PairClass::QGeometric);
    }

    #[test]
    fn mixed_solves_c() {
        let f = FieldSpec::Symbolic;
        let class = classify(
            &[sym("q^-1"), sym("q")],
            &[sym("q^-1 + 2*q"), sym("q + 2*q^-1")],
            &f,
        );
        assert_eq!(class, PairClass::QMixed { c: Scalar::from_int(2) });
    }

    #[test]
    fn non_powers_are_other() {
        let f = FieldSpec::Symbolic;
        let class = classify(&[sym("1"), sym("2")], &[sym("1"), sym("2")], &f);
        assert_eq!(class, PairClass::Other);
    }

    #[test]
    fn simultaneous_reversal_keeps_class() {
        let f = FieldSpec::Symbolic;
        for d in 0..5 {
            let c = sym("q^3 + 5");
            let theta = raising_pattern(d, &f);
            let ts = mixed_pattern(d, &c, &f);
            let fwd = classify(&theta, &ts, &f);
            let rev: Vec<_> = theta.iter().rev().cloned().collect();
            let rev_s: Vec<_> = ts.iter().rev().cloned().collect();
            assert_eq!(fwd.name(), classify(&rev, &rev_s, &f).name());
            assert_eq!(fwd, PairClass::QMixed { c: c.clone() });
            for (i, (a, b)) in ts.iter().zip(&theta).enumerate() {
                assert_eq!(a - b, &c * f.q_pow(d as i64 - 2 * i as i64));
            }
        }
    }
}
