//! The q-tetrahedron algebra action built from eigenspace data.
//!
//! Each generator `x_ij` acts as `q^{2n-d}` on the `n`th member of a family
//! of subspaces assembled from sums of the `V_i` and the `Ṽ*_i`.

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeMap, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{algebra_closure_dim, Decomposition, MatrixE, Subspace};
use crate::operators::OperatorSuite;
use crate::scalar::{q_int, FieldSpec};
use crate::split::SplitData;
use crate::tdp::{eigenspaces, raising_pattern, TriPair};

const STAGE: &str = "boxtimes";

/// Generator labels `x_ij` with `j - i` in `{1, 2}` mod 4.
pub const GENERATORS: [(u8, u8); 8] = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (2, 0), (1, 3), (3, 1)];

#[derive(Clone, Debug, PartialEq)]
pub struct BoxtimesAction {
    pub d: usize,
    /// Module type; always 1 for constructed actions.
    pub epsilon: i8,
    /// Matrices in the order of [`GENERATORS`].
    pub generators: Vec<MatrixE>,
    /// Multiplicity of `q^{2n-d}` for each generator, same order.
    pub multiplicities: Vec<Vec<usize>>,
}

impl BoxtimesAction {
    pub fn get(&self, i: u8, j: u8) -> &MatrixE {
        let k = GENERATORS
            .iter()
            .position(|&g| g == (i % 4, j % 4))
            .unwrap_or_else(|| panic!("x{i}{j} is not a generator"));
        &self.generators[k]
    }

    pub fn n(&self) -> usize {
        self.generators[0].rows()
    }
}

fn label(i: u8, j: u8) -> String {
    format!("x{i}{j}")
}

impl Serialize for BoxtimesAction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Gens<'a>(&'a BoxtimesAction);
        impl Serialize for Gens<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(8))?;
                for (&(i, j), m) in GENERATORS.iter().zip(&self.0.generators) {
                    map.serialize_entry(&label(i, j), m)?;
                }
                map.end()
            }
        }
        let mut st = s.serialize_struct("BoxtimesAction", 3)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("type", &self.epsilon)?;
        st.serialize_field("generators", &Gens(self))?;
        st.end()
    }
}

/// Builds all eight generators; requires a q-mixed suite.
pub fn construct_action(split: &SplitData, suite: &OperatorSuite, field: &FieldSpec) -> Result<BoxtimesAction> {
    let mixed = suite
        .mixed
        .as_ref()
        .ok_or_else(|| Error::precondition(STAGE, "the action needs the q-mixed operators"))?;
    let d = split.d;
    let n = split.n;
    let v = &split.v;
    let t = &mixed.vtilde_star;
    let pv = |k: usize| v.prefix_sum(k);
    let sv = |k: usize| v.suffix_sum(k);
    let pt = |k: usize| t.prefix_sum(k);
    let st = |k: usize| t.suffix_sum(k);
    let meet = |a: Subspace, b: Subspace| a.intersect(&b);
    let up = raising_pattern(d, field);

    let mut generators = Vec::with_capacity(8);
    let mut multiplicities = Vec::with_capacity(8);
    for &(i, j) in &GENERATORS {
        let parts = (0..=d)
            .map(|k| match (i, j) {
                (0, 1) => Ok(v.part(k).clone()),
                (2, 3) => Ok(t.part(d - k).clone()),
                (3, 0) => meet(pt(k), pv(d - k)),
                (1, 2) => meet(st(k), sv(d - k)),
                (3, 1) => meet(pt(k), sv(k)),
                (1, 3) => meet(pt(d - k), sv(d - k)),
                (2, 0) => meet(st(d - k), pv(d - k)),
                (0, 2) => meet(st(k), pv(k)),
                _ => unreachable!("GENERATORS lists only valid labels"),
            })
            .collect::<Result<Vec<_>>>()?;
        let dec = Decomposition::with_stage(STAGE, n, parts)?;
        multiplicities.push(dec.dims());
        generators.push(dec.operator(&up));
    }
    Ok(BoxtimesAction {
        d,
        epsilon: 1,
        generators,
        multiplicities,
    })
}

/// Named pass/fail results in a fixed order.
#[derive(Clone, Debug, Default)]
pub struct NamedChecks(pub Vec<(String, bool)>);

impl NamedChecks {
    pub fn all_pass(&self) -> bool {
        self.0.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.0.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, ok)| *ok)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Serialize for NamedChecks {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (name, ok) in &self.0 {
            map.serialize_entry(name, ok)?;
        }
        map.end()
    }
}

enum Relation {
    Inverse(u8),
    Weyl { h: u8, i: u8, j: u8 },
    Serre(u8),
}

fn relations() -> Vec<Relation> {
    let mut out: Vec<Relation> = (0..4).map(Relation::Inverse).collect();
    for (a, b) in [(1, 1), (1, 2), (2, 1)] {
        for h in 0..4u8 {
            let i = (h + a) % 4;
            out.push(Relation::Weyl { h, i, j: (i + b) % 4 });
        }
    }
    out.extend((0..4).map(Relation::Serre));
    out
}

/// The four inverse, twelve q-Weyl and four cubic q-Serre relations, plus
/// type-1 eigenvalue data and irreducibility of the generated algebra.
pub fn verify_boxtimes(action: &BoxtimesAction, field: &FieldSpec) -> NamedChecks {
    let n = action.n();
    let id = MatrixE::identity(n);
    let q = field.q();
    let qinv = field.q_pow(-1);
    let qd = MatrixE::scalar(n, field.q_minus_qinv());
    let three = q_int(3, field);
    let mut checks: Vec<(String, bool)> = relations()
        .par_iter()
        .map(|rel| match *rel {
            Relation::Inverse(i) => {
                let (a, b) = (action.get(i, i + 2), action.get(i + 2, i));
                (format!("{}{}=1", label(i, (i + 2) % 4), label((i + 2) % 4, i)), a * b == id)
            }
            Relation::Weyl { h, i, j } => {
                let (xij, xhi) = (action.get(i, j), action.get(h, i));
                let lhs = (xij * xhi).scale(&q) - (xhi * xij).scale(&qinv);
                (format!("weyl({},{})", label(i, j), label(h, i)), lhs == qd)
            }
            Relation::Serre(h) => {
                let (x, y) = (action.get(h, h + 1), action.get(h + 2, h + 3));
                let x2 = x * x;
                let x3 = &x2 * x;
                let res = &x3 * y - (&(&x2 * y) * x).scale(&three) + (&(x * y) * &x2).scale(&three) - y * &x3;
                let name = format!("serre({},{})", label(h, (h + 1) % 4), label((h + 2) % 4, (h + 3) % 4));
                (name, res.is_zero())
            }
        })
        .collect();

    let up = raising_pattern(action.d, field);
    let type_one = action.generators.iter().zip(&action.multiplicities).all(|(m, mult)| {
        let dims: Vec<usize> = eigenspaces(m, &up).iter().map(Subspace::dim).collect();
        &dims == mult && dims.iter().sum::<usize>() == n && dims.iter().all(|&k| k > 0)
    });
    checks.push(("eigenvalues_are_type_one".into(), type_one));
    checks.push((
        "generated_algebra_is_full".into(),
        algebra_closure_dim(n, &action.generators) == n * n,
    ));
    NamedChecks(checks)
}

/// Pins the generators against the operators they should coincide with.
pub fn identify_generators(action: &BoxtimesAction, pair: &TriPair, split: &SplitData, suite: &OperatorSuite) -> NamedChecks {
    let mut checks = Vec::new();
    let Some(mixed) = suite.mixed.as_ref() else {
        return NamedChecks(vec![("q_mixed_suite".into(), false)]);
    };
    let recombined = action.get(3, 0) + action.get(2, 3).scale(&mixed.c);
    checks.push(("x01_is_a".into(), action.get(0, 1) == pair.a()));
    checks.push(("x30_is_b".into(), action.get(3, 0) == &suite.b));
    checks.push(("x23_is_atilde".into(), action.get(2, 3) == &mixed.atilde));
    checks.push(("x31_is_k".into(), action.get(3, 1) == &suite.k));
    checks.push(("x13_is_kinv".into(), action.get(1, 3) == &suite.kinv));
    checks.push(("x30_plus_c_x23_is_astar".into(), &recombined == pair.astar()));
    let prefixes = (0..=split.d).all(|i| split.vstar.prefix_sum(i) == mixed.vtilde_star.prefix_sum(i));
    checks.push(("star_prefix_sums_agree".into(), prefixes));
    NamedChecks(checks)
}
