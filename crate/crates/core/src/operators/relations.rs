//! The named identity checks, each an exact zero-residual test.

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeMap, Serializer};

use super::coefficients::SerrePassCoefficients;
use super::predicates::{shift_predicate, weyl_sum_equality, PredicateForm};
use super::OperatorSuite;
use crate::linalg::{Decomposition, MatrixE, Subspace};
use crate::scalar::{q_binomial, q_factorial, q_int, FieldSpec, Scalar};
use crate::split::SplitData;
use crate::tdp::{lowering_pattern, raising_pattern, TriPair};

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CheckOutcome {
    pub pass: bool,
    /// Family index of the first failing instance, or the flattened entry
    /// index of the first nonzero residual for a single identity.
    pub first_failure_index: Option<usize>,
}

impl CheckOutcome {
    fn ok() -> Self {
        Self {
            pass: true,
            first_failure_index: None,
        }
    }

    fn failed_at(i: usize) -> Self {
        Self {
            pass: false,
            first_failure_index: Some(i),
        }
    }

    fn residual(m: MatrixE) -> Self {
        m.first_nonzero().map_or_else(Self::ok, Self::failed_at)
    }

    fn family(results: impl IntoIterator<Item = bool>) -> Self {
        results
            .into_iter()
            .position(|ok| !ok)
            .map_or_else(Self::ok, Self::failed_at)
    }
}

/// Check outcomes in evaluation order.
#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub checks: Vec<(&'static str, CheckOutcome)>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, o)| o.pass)
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|(n, _)| *n == name).map(|(_, o)| o)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|(_, o)| !o.pass).map(|(n, _)| *n).collect()
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|(n, _)| *n).collect()
    }
}

impl Serialize for RelationReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.checks.len()))?;
        for (name, outcome) in &self.checks {
            map.serialize_entry(name, outcome)?;
        }
        map.end()
    }
}

struct Ctx<'a> {
    field: &'a FieldSpec,
    d: usize,
    n: usize,
    a: &'a MatrixE,
    astar: &'a MatrixE,
    suite: &'a OperatorSuite,
    split: &'a SplitData,
    c: Scalar,
    q: Scalar,
    qinv: Scalar,
    /// `q - q^{-1}`.
    qd: Scalar,
    three: Scalar,
    id: MatrixE,
    /// `(A - K)^j`, `j = 0..=d+1`.
    raise_pows: Vec<MatrixE>,
    /// `(B - K)^j`, `j = 0..=d+1`.
    gamma_pows: Vec<MatrixE>,
    /// `(A* - K - cK^{-1})^j`, `j = 0..=d+1`.
    delta_pows: Vec<MatrixE>,
}

impl Ctx<'_> {
    fn scalar(&self, s: Scalar) -> MatrixE {
        MatrixE::scalar(self.n, s)
    }

    /// `q X Y - q^{-1} Y X`.
    fn weyl(&self, x: &MatrixE, y: &MatrixE) -> MatrixE {
        (x * y).scale(&self.q) - (y * x).scale(&self.qinv)
    }

    /// `x^3 y - [3] x^2 y x + [3] x y x^2 - y x^3`.
    fn serre(&self, x: &MatrixE, y: &MatrixE) -> MatrixE {
        let x2 = x * x;
        let x3 = &x2 * x;
        &x3 * y - (&(&x2 * y) * x).scale(&self.three) + (&(x * y) * &x2).scale(&self.three) - y * &x3
    }

    fn atilde(&self) -> &MatrixE {
        self.suite.atilde().expect("mixed-only check")
    }

    fn vtilde(&self) -> &Decomposition {
        &self.suite.mixed.as_ref().expect("mixed-only check").vtilde_star
    }

    /// `(x - eig(i)) part(i) ⊆ part(i + shift)` for every part; `eig = None`
    /// leaves `x` unshifted.
    fn shifts(&self, dec: &Decomposition, x: &MatrixE, eig: Option<&[Scalar]>, shift: isize) -> CheckOutcome {
        let zero = Subspace::zero(self.n);
        CheckOutcome::family((0..dec.len()).map(|i| {
            let j = i as isize + shift;
            let target = if j < 0 || j as usize >= dec.len() { &zero } else { dec.part(j as usize) };
            let y = match eig {
                Some(e) => x.shift(&-&e[i]),
                None => x.clone(),
            };
            dec.part(i).first_escape(&y, target).is_none()
        }))
    }

    /// `x part(i) ⊆ part(i-1) + part(i) + part(i+1)`.
    fn tridiagonal(&self, dec: &Decomposition, x: &MatrixE) -> CheckOutcome {
        let last = dec.len() - 1;
        CheckOutcome::family((0..dec.len()).map(|i| {
            let lo = i.saturating_sub(1);
            let hi = (i + 1).min(last);
            let band = crate::linalg::sum_of(self.n, &dec.parts()[lo..=hi].iter().collect::<Vec<_>>());
            dec.part(i).first_escape(x, &band).is_none()
        }))
    }

    /// Both sides of the shift predicate agree at every eigenvalue probed.
    fn predicate(&self, x: &MatrixE, y: &MatrixE, form: PredicateForm) -> CheckOutcome {
        let thetas = raising_pattern(self.d, self.field);
        CheckOutcome::family(thetas.iter().map(|t| shift_predicate(x, y, t, &form, self.field).agree()))
    }

    fn up(&self) -> Vec<Scalar> {
        raising_pattern(self.d, self.field)
    }

    fn down(&self) -> Vec<Scalar> {
        lowering_pattern(self.d, self.field)
    }

    fn binom(&self, n: usize, m: usize) -> Scalar {
        q_binomial(n as u32, m as i64, self.field).expect("0 <= m <= n")
    }
}

type Check = (&'static str, fn(&Ctx) -> CheckOutcome);

/// Checks that make no reference to `c`; the whole suite for q-geometric pairs.
const C_FREE: &[Check] = &[
    ("cubic_serre_a_astar", |x| CheckOutcome::residual(x.serre(x.a, x.astar))),
    ("b_weyl_with_a", |x| {
        CheckOutcome::residual(x.weyl(x.a, &x.suite.b) - x.scalar(x.qd.clone()))
    }),
    ("b_inverts", |x| CheckOutcome::residual(&x.suite.b * &x.suite.binv - &x.id)),
    ("k_inverts", |x| CheckOutcome::residual(&x.suite.k * &x.suite.kinv - &x.id)),
    ("b_eigenspaces_are_w", |x| {
        let up = x.up();
        CheckOutcome::family((0..=x.d).map(|i| x.split.w.part(i).annihilated_by(&x.suite.b.shift(&-&up[i]))))
    }),
    ("k_eigenspaces_are_u", |x| {
        let up = x.up();
        CheckOutcome::family((0..=x.d).map(|i| x.split.u.part(i).annihilated_by(&x.suite.k.shift(&-&up[i]))))
    }),
    ("b_lowers_v", |x| x.shifts(&x.split.v, &x.suite.b, Some(&x.down()), -1)),
    ("kinv_weyl_with_a", |x| {
        CheckOutcome::residual(x.weyl(&x.suite.kinv, x.a) - x.scalar(x.qd.clone()))
    }),
    ("a_minus_k_raises_u", |x| x.shifts(&x.split.u, &x.raise_pows[1], None, 1)),
    ("b_minus_k_lowers_u", |x| x.shifts(&x.split.u, &x.gamma_pows[1], None, -1)),
    ("b_weyl_with_kinv", |x| {
        CheckOutcome::residual(x.weyl(&x.suite.b, &x.suite.kinv) - x.scalar(x.qd.clone()))
    }),
    ("a_minus_k_scales_k", |x| {
        let r = &x.raise_pows[1];
        let k = &x.suite.k;
        CheckOutcome::residual(r * k - (k * r).scale(&x.field.q_pow(-2)))
    }),
    ("raise_power_past_b_minus_k", |x| {
        // q^j R^j G - q^{-j} G R^j = -(q^j - q^{-j})(q^{2-2j} K^2 - I) R^{j-1}
        let g = &x.gamma_pows[1];
        let k2 = &x.suite.k * &x.suite.k;
        CheckOutcome::family((1..=x.d).map(|j| {
            let ji = j as i64;
            let qj = x.field.q_pow(ji);
            let qmj = x.field.q_pow(-ji);
            let r = &x.raise_pows[j];
            let lhs = (r * g).scale(&qj) - (g * r).scale(&qmj);
            let k_term = k2.scale(&x.field.q_pow(2 - 2 * ji)) - &x.id;
            lhs == (k_term * &x.raise_pows[j - 1]).scale(&-(&qj - &qmj))
        }))
    }),
    ("b_minus_k_power_past_raise_power", |x| {
        let coeffs = SerrePassCoefficients::new(x.field, &x.suite.k);
        let pairs: Vec<(usize, usize)> = (1..=x.d).flat_map(|i| (1..=i).map(move |j| (i, j))).collect();
        CheckOutcome::family(pairs.into_iter().map(|(i, j)| {
            let lhs = &x.gamma_pows[j] * &x.raise_pows[i];
            let rhs = (0..=j).fold(MatrixE::zeros(x.n, x.n), |acc, h| {
                let m = SerrePassCoefficients::m(h as i64, i as i64, j as i64);
                let coeff = x.field.q_pow(m) * coeffs.n(h as u32, i as u32).expect("h <= i") * x.binom(j, h);
                let term = coeffs.f(h as u32, j as u32, i as u32) * &x.raise_pows[i - h] * &x.gamma_pows[j - h];
                acc + term.scale(&coeff)
            });
            lhs == rhs
        }))
    }),
    ("raise_w_formula", |x| {
        CheckOutcome::residual(&x.split.raise_w - &(x.a - &x.suite.binv))
    }),
    ("b_scales_raise_w", |x| {
        let (b, r) = (&x.suite.b, &x.split.raise_w);
        CheckOutcome::residual(b * r - (r * b).scale(&x.field.q_pow(2)))
    }),
    ("b_scales_lower_w", |x| {
        let (b, l) = (&x.suite.b, &x.split.lower_w);
        CheckOutcome::residual(b * l - (l * b).scale(&x.field.q_pow(-2)))
    }),
    ("shift_predicate_a_b_on_a", |x| x.predicate(x.a, &x.suite.b, PredicateForm::WeylOnX)),
    ("shift_predicate_a_b_on_b", |x| x.predicate(x.a, &x.suite.b, PredicateForm::WeylOnY)),
    ("shift_predicate_kinv_a_on_kinv", |x| x.predicate(&x.suite.kinv, x.a, PredicateForm::WeylOnX)),
    ("shift_predicate_kinv_a_on_a", |x| x.predicate(&x.suite.kinv, x.a, PredicateForm::WeylOnY)),
    ("shift_predicate_b_kinv_on_b", |x| x.predicate(&x.suite.b, &x.suite.kinv, PredicateForm::WeylOnX)),
    ("shift_predicate_b_kinv_on_kinv", |x| x.predicate(&x.suite.b, &x.suite.kinv, PredicateForm::WeylOnY)),
];

/// Checks stated in terms of `c`, run only for q-mixed pairs.
const C_DEPENDENT: &[Check] = &[
    ("cubic_serre_astar_a_deformed", |x| {
        let q2 = x.field.q_pow(2) - x.field.q_pow(-2);
        let deform = (x.astar * x.a - x.a * x.astar).scale(&(&x.c * &q2 * &q2));
        CheckOutcome::residual(x.serre(x.astar, x.a) + deform)
    }),
    ("b_weyl_with_astar", |x| {
        let b = &x.suite.b;
        let rhs = (b * b + x.scalar(x.c.clone())).scale(&x.qd);
        CheckOutcome::residual(x.weyl(b, x.astar) - rhs)
    }),
    ("k_weyl_with_astar", |x| {
        let k = &x.suite.k;
        let rhs = (k * k + x.scalar(x.c.clone())).scale(&x.qd);
        CheckOutcome::residual(x.weyl(k, x.astar) - rhs)
    }),
    ("astar_minus_k_minus_ckinv_lowers_u", |x| x.shifts(&x.split.u, &x.delta_pows[1], None, -1)),
    ("astar_minus_b_minus_ckinv_lowers_u", |x| {
        let m = x.astar - &x.suite.b - x.suite.kinv.scale(&x.c);
        x.shifts(&x.split.u, &m, None, -1)
    }),
    ("b_minus_k_power_past_lowering", |x| {
        // q^j G^j D - q^{-j} D G^j = (q^j - q^{-j}) G^{j+1}
        let delta = &x.delta_pows[1];
        CheckOutcome::family((1..=x.d).map(|j| {
            let qj = x.field.q_pow(j as i64);
            let qmj = x.field.q_pow(-(j as i64));
            let g = &x.gamma_pows[j];
            let lhs = (g * delta).scale(&qj) - (delta * g).scale(&qmj);
            lhs == x.gamma_pows[j + 1].scale(&(&qj - &qmj))
        }))
    }),
    ("lowering_power_expansion", |x| {
        // (A* - B - cK^{-1})^i = sum_j (-1)^j q^{j-ji} [i j] D^{i-j} G^j
        let base = x.astar - &x.suite.b - x.suite.kinv.scale(&x.c);
        let mut power = x.id.clone();
        CheckOutcome::family((0..=x.d).map(|i| {
            if i > 0 {
                power = &power * &base;
            }
            let rhs = (0..=i).fold(MatrixE::zeros(x.n, x.n), |acc, j| {
                let sign = if j % 2 == 0 { Scalar::one() } else { -Scalar::one() };
                let coeff = sign * x.field.q_pow(j as i64 - (j * i) as i64) * x.binom(i, j);
                acc + (&x.delta_pows[i - j] * &x.gamma_pows[j]).scale(&coeff)
            });
            power == rhs
        }))
    }),
    ("lower_w_formula", |x| {
        let rhs = x.astar - &x.suite.b - x.suite.binv.scale(&x.c);
        CheckOutcome::residual(&x.split.lower_w - &rhs)
    }),
    ("raise_w_deformed_serre", |x| {
        // r^3 l - [3] r^2 l r + [3] r l r^2 - l r^3 = c alpha r^2 B^{-2}
        let (r, l, binv) = (&x.split.raise_w, &x.split.lower_w, &x.suite.binv);
        let alpha = &x.c * serre_alpha(x.field);
        CheckOutcome::residual(x.serre(r, l) - (&(r * r) * &(binv * binv)).scale(&alpha))
    }),
    ("lower_w_deformed_serre", |x| {
        // r l^3 - [3] l r l^2 + [3] l^2 r l - l^3 r = c alpha B^{-2} l^2
        let (r, l, binv) = (&x.split.raise_w, &x.split.lower_w, &x.suite.binv);
        let alpha = &x.c * serre_alpha(x.field);
        let l2 = l * l;
        let l3 = &l2 * l;
        let lhs = r * &l3 - (&(l * r) * &l2).scale(&x.three) + (&(&l2 * r) * l).scale(&x.three) - &l3 * r;
        CheckOutcome::residual(lhs - (&(binv * binv) * &l2).scale(&alpha))
    }),
    ("shift_predicate_b_astar_quadratic", |x| {
        x.predicate(&x.suite.b, x.astar, PredicateForm::QuadraticOnX { c: x.c.clone() })
    }),
    ("shift_predicate_k_astar_quadratic", |x| {
        x.predicate(&x.suite.k, x.astar, PredicateForm::QuadraticOnX { c: x.c.clone() })
    }),
];

/// Checks involving `Ã*`, run only for q-mixed pairs.
const MIXED: &[Check] = &[
    ("atilde_weyl_with_b", |x| {
        CheckOutcome::residual(x.weyl(&x.suite.b, x.atilde()) - x.scalar(x.qd.clone()))
    }),
    ("atilde_lowers_w", |x| x.shifts(&x.split.w, x.atilde(), Some(&x.down()), -1)),
    ("atilde_eigenspaces_match_w", |x| {
        let vt = x.vtilde();
        CheckOutcome::family((0..=x.d).map(|i| vt.part(i).dim() == x.split.w.part(i).dim()).chain([vt.part(0) == x.split.w.part(0)]))
    }),
    ("cubic_serre_a_atilde", |x| CheckOutcome::residual(x.serre(x.a, x.atilde()))),
    ("cubic_serre_atilde_a", |x| CheckOutcome::residual(x.serre(x.atilde(), x.a))),
    ("atilde_tridiagonal_on_v", |x| x.tridiagonal(&x.split.v, x.atilde())),
    ("a_tridiagonal_on_vtilde_star", |x| x.tridiagonal(x.vtilde(), x.a)),
    ("shift_predicate_b_atilde_on_b", |x| x.predicate(&x.suite.b, x.atilde(), PredicateForm::WeylOnX)),
    ("shift_predicate_b_atilde_on_atilde", |x| {
        x.predicate(&x.suite.b, x.atilde(), PredicateForm::WeylOnY)
    }),
    ("weyl_sums_b_atilde", |x| {
        let bound = 2 * x.d + 1;
        let thetas = x.up();
        CheckOutcome::family(thetas.iter().map(|t| weyl_sum_equality(&x.suite.b, x.atilde(), t, bound, x.field)))
    }),
];

/// `q^{-4}(q-q^{-1})^3[3]!`.
pub fn serre_alpha(field: &FieldSpec) -> Scalar {
    field.q_pow(-4) * field.q_minus_qinv().powi(3) * q_factorial(3, field)
}

/// Runs every check. `pair` supplies `A` and `A*`; all derived operators come
/// from `split` and `suite`, so a perturbed pair against unperturbed
/// operators acts as a negative control.
pub fn relation_report(pair: &TriPair, split: &SplitData, suite: &OperatorSuite) -> RelationReport {
    let field = pair.field();
    let n = pair.n();
    let d = split.d;
    let c = suite.c();
    let id = MatrixE::identity(n);
    let powers = |m: MatrixE| {
        let mut out = vec![id.clone()];
        for _ in 0..=d {
            let next = out.last().expect("nonempty") * &m;
            out.push(next);
        }
        out
    };
    let raise = pair.a() - &suite.k;
    let gamma = &suite.b - &suite.k;
    let delta = pair.astar() - &suite.k - suite.kinv.scale(&c);
    let ctx = Ctx {
        field,
        d,
        n,
        a: pair.a(),
        astar: pair.astar(),
        suite,
        split,
        c,
        q: field.q(),
        qinv: field.q_pow(-1),
        qd: field.q_minus_qinv(),
        three: q_int(3, field),
        id: id.clone(),
        raise_pows: powers(raise),
        gamma_pows: powers(gamma),
        delta_pows: powers(delta),
    };
    let mut list: Vec<&Check> = C_FREE.iter().collect();
    if suite.mixed.is_some() {
        list.extend(C_DEPENDENT.iter().chain(MIXED));
    }
    let checks = list.par_iter().map(|(name, f)| (*name, f(&ctx))).collect();
    RelationReport { checks }
}
