//! `B`, `K`, `Ã*` and the identities they satisfy.

mod coefficients;
mod predicates;
mod relations;

pub use coefficients::SerrePassCoefficients;
pub use predicates::{eigenspace, shift_predicate, weyl_sum_equality, PredicateForm, PredicateSides};
pub use relations::{relation_report, serre_alpha, CheckOutcome, RelationReport};

use crate::error::{Error, Result};
use crate::linalg::{kernel, Decomposition, MatrixE};
use crate::split::{eigen_projectors, SplitData};
use crate::tdp::{lowering_pattern, raising_pattern, PairClass, TdProfile, TriPair};
use crate::scalar::Scalar;

const STAGE: &str = "operators";

/// Parts needing `c != 0`; absent for q-geometric pairs.
#[derive(Clone, Debug)]
pub struct MixedOperators {
    pub c: Scalar,
    /// `c^{-1}(A* - B)`.
    pub atilde: MatrixE,
    /// `Ṽ*_i = ker(Ã* - q^{d-2i})`.
    pub vtilde_star: Decomposition,
}

#[derive(Clone, Debug)]
pub struct OperatorSuite {
    /// Acts as `q^{2i-d}` on `W_i`.
    pub b: MatrixE,
    pub binv: MatrixE,
    /// Acts as `q^{2i-d}` on `U_i`.
    pub k: MatrixE,
    pub kinv: MatrixE,
    pub mixed: Option<MixedOperators>,
}

impl OperatorSuite {
    /// `c`, zero for q-geometric pairs.
    pub fn c(&self) -> Scalar {
        self.mixed.as_ref().map_or_else(Scalar::zero, |m| m.c.clone())
    }

    pub fn atilde(&self) -> Option<&MatrixE> {
        self.mixed.as_ref().map(|m| &m.atilde)
    }
}

/// Builds the suite and records the `Ẽ*_i` projections in `split`.
pub fn build_suite(pair: &TriPair, profile: &TdProfile, split: &mut SplitData) -> Result<OperatorSuite> {
    let field = pair.field();
    let d = split.d;
    let up = raising_pattern(d, field);
    let down = lowering_pattern(d, field);
    let b = split.w.operator(&up);
    let k = split.u.operator(&up);
    let inverse_of = |p: &[Scalar]| p.iter().map(|x| x.inv().expect("powers of q are nonzero")).collect::<Vec<_>>();
    let binv = split.w.operator(&inverse_of(&up));
    let kinv = split.u.operator(&inverse_of(&up));
    let id = MatrixE::identity(split.n);
    if &b * &binv != id || &k * &kinv != id {
        return Err(Error::structural(STAGE, "B or K fails to invert"));
    }

    let mixed = match &profile.class {
        PairClass::QMixed { c } => {
            let atilde = (pair.astar() - &b).scale(&c.inv().expect("c is nonzero"));
            let parts: Vec<_> = down.iter().map(|t| kernel(&atilde.shift(&-t))).collect();
            for (i, part) in parts.iter().enumerate() {
                if part.dim() != split.w.part(i).dim() {
                    return Err(Error::structural(
                        STAGE,
                        format!(
                            "dim ker(Ã* - q^{{d-2i}}) = {} differs from dim W_i = {} at i = {i}",
                            part.dim(),
                            split.w.part(i).dim()
                        ),
                    ));
                }
            }
            let vtilde_star = Decomposition::with_stage(STAGE, split.n, parts)?;
            if vtilde_star.part(0) != split.w.part(0) {
                return Err(Error::structural(STAGE, "Ṽ*_0 differs from W_0"));
            }
            let (_, estar) = eigen_projectors(split, pair.a(), &atilde, &vtilde_star, field)?;
            split.estar_tilde = estar;
            Some(MixedOperators {
                c: c.clone(),
                atilde,
                vtilde_star,
            })
        }
        PairClass::QGeometric => None,
        PairClass::Other => {
            return Err(Error::precondition(STAGE, "pair is neither q-geometric nor q-mixed"));
        }
    };
    Ok(OperatorSuite {
        b,
        binv,
        k,
        kinv,
        mixed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{derive_qmixed, generate_qgeometric};
    use crate::split::compute_split;
    use crate::scalar::FieldSpec;

    pub(super) fn mixed_instance(d: usize, c: i64) -> (TriPair, TdProfile, SplitData, OperatorSuite) {
        let geo = generate_qgeometric(d, &FieldSpec::Symbolic).unwrap();
        let pair = derive_qmixed(&geo, &Scalar::from_int(c)).unwrap();
        let profile = TdProfile::derive(&pair, None).unwrap();
        let mut split = compute_split(&pair, &profile).unwrap();
        let suite = build_suite(&pair, &profile, &mut split).unwrap();
        (pair, profile, split, suite)
    }

    #[test]
    fn diameter_zero_operators() {
        let pair = TriPair::new(MatrixE::identity(1), MatrixE::from_ints(&[&[3]]), FieldSpec::Symbolic).unwrap();
        let profile = TdProfile::derive(&pair, None).unwrap();
        let mut split = compute_split(&pair, &profile).unwrap();
        let suite = build_suite(&pair, &profile, &mut split).unwrap();
        assert_eq!(suite.b, MatrixE::identity(1));
        assert_eq!(suite.k, MatrixE::identity(1));
        let c = suite.c();
        let expected = (pair.astar() - &MatrixE::identity(1)).scale(&c.inv().unwrap());
        assert_eq!(suite.atilde().unwrap(), &expected);
    }

    #[test]
    fn diameter_one_atilde_eigenvalues() {
        let (_, _, split, suite) = mixed_instance(1, 2);
        let field = FieldSpec::Symbolic;
        let at = suite.atilde().unwrap();
        let dims: Vec<usize> = lowering_pattern(1, &field)
            .iter()
            .map(|t| kernel(&at.shift(&-t)).dim())
            .collect();
        assert_eq!(dims, vec![1, 1]);
        assert_eq!(split.estar_tilde.len(), 2);
    }

    #[test]
    fn b_is_scalar_on_each_w() {
        let (_, _, split, suite) = mixed_instance(2, 3);
        let up = raising_pattern(2, &FieldSpec::Symbolic);
        for (i, t) in up.iter().enumerate() {
            assert!(split.w.part(i).annihilated_by(&suite.b.shift(&-t)));
            assert!(split.u.part(i).annihilated_by(&suite.k.shift(&-t)));
        }
        let vt = &suite.mixed.as_ref().unwrap().vtilde_star;
        assert_eq!(vt.part(0), split.w.part(0));
    }

    #[test]
    fn geometric_suite_has_no_mixed_part() {
        let pair = generate_qgeometric(2, &FieldSpec::Symbolic).unwrap();
        let profile = TdProfile::derive(&pair, Some(&Scalar::zero())).unwrap();
        let mut split = compute_split(&pair, &profile).unwrap();
        let suite = build_suite(&pair, &profile, &mut split).unwrap();
        assert!(suite.mixed.is_none());
        assert!(suite.c().is_zero());
        assert!(split.estar_tilde.is_empty());
    }
}
