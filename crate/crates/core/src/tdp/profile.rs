use serde::Serialize;

use super::classify::{classify, lowering_pattern, mixed_pattern, raising_pattern, PairClass};
use super::pair::TriPair;
use crate::error::{Error, Result};
use crate::linalg::{kernel, Decomposition, MatrixE, Subspace};
use crate::scalar::Scalar;

const STAGE: &str = "profile";

/// Eigenvalue data of a pair in a fixed ordering of both eigenspace lists.
#[derive(Clone, Debug)]
pub struct TdProfile {
    pub d: usize,
    pub theta: Vec<Scalar>,
    pub theta_star: Vec<Scalar>,
    /// `V_i = ker(A - theta_i)`.
    pub v: Vec<Subspace>,
    /// `V*_i = ker(A* - theta*_i)`.
    pub vstar: Vec<Subspace>,
    pub class: PairClass,
}

/// Serializable summary of a profile.
#[derive(Serialize)]
pub struct ProfileSummary {
    pub d: usize,
    pub n: usize,
    pub theta: Vec<Scalar>,
    pub theta_star: Vec<Scalar>,
    pub v_dims: Vec<usize>,
    pub vstar_dims: Vec<usize>,
    #[serde(flatten)]
    pub class: PairClass,
}

/// Eigenspaces of `m` for each listed eigenvalue.
pub fn eigenspaces(m: &MatrixE, eigenvalues: &[Scalar]) -> Vec<Subspace> {
    eigenvalues
        .iter()
        .map(|t| kernel(&m.shift(&-t)))
        .collect()
}

/// Whether `spaces` are nonzero and fill the ambient space.
fn fills(n: usize, spaces: &[Subspace]) -> bool {
    spaces.iter().all(|s| !s.is_zero()) && spaces.iter().map(Subspace::dim).sum::<usize>() == n
}

impl TdProfile {
    /// Profile from explicitly given eigenvalue sequences.
    pub fn from_eigenvalues(pair: &TriPair, theta: Vec<Scalar>, theta_star: Vec<Scalar>) -> Result<Self> {
        if theta.is_empty() || theta.len() != theta_star.len() {
            return Err(Error::Domain(
                "A and A* need the same positive number of eigenvalues".into(),
            ));
        }
        let field = pair.field();
        if !field.is_symbolic() && theta.iter().chain(&theta_star).any(Scalar::is_symbolic) {
            return Err(Error::Domain("eigenvalue is not in the specialized field".into()));
        }
        let v = eigenspaces(pair.a(), &theta);
        let vstar = eigenspaces(pair.astar(), &theta_star);
        let class = classify(&theta, &theta_star, field);
        Ok(Self {
            d: theta.len() - 1,
            theta,
            theta_star,
            v,
            vstar,
            class,
        })
    }

    /// Profile with the eigenvalues prescribed by the q-geometric and q-mixed
    /// patterns. `c_hint` fixes `c`; otherwise `c` is recovered from traces,
    /// which is exact because the eigenspace dimensions are palindromic.
    pub fn derive(pair: &TriPair, c_hint: Option<&Scalar>) -> Result<Self> {
        let n = pair.n();
        let field = pair.field();
        let (d, v) = (0..n)
            .find_map(|d| {
                let v = eigenspaces(pair.a(), &raising_pattern(d, field));
                fills(n, &v).then_some((d, v))
            })
            .ok_or_else(|| {
                Error::precondition(
                    STAGE,
                    "A is not diagonalizable with eigenvalues q^{2i-d} for any d",
                )
            })?;
        let c = match c_hint {
            Some(c) => c.clone(),
            None => {
                let tr = pair.a().trace();
                if tr.is_zero() {
                    return Err(Error::precondition(STAGE, "tr A = 0; pass c explicitly"));
                }
                pair.astar().trace() / tr - Scalar::one()
            }
        };
        let theta = raising_pattern(d, field);
        let theta_star = if c.is_zero() {
            lowering_pattern(d, field)
        } else {
            mixed_pattern(d, &c, field)
        };
        let vstar = eigenspaces(pair.astar(), &theta_star);
        if !fills(n, &vstar) {
            return Err(Error::precondition(
                STAGE,
                format!(
                    "A* is not diagonalizable with eigenvalues {} (c = {c})",
                    if c.is_zero() { "q^{d-2i}" } else { "q^{2i-d} + c q^{d-2i}" }
                ),
            ));
        }
        let mut class = classify(&theta, &theta_star, field);
        let standard = |parts: &[Subspace], other: &MatrixE| {
            Decomposition::new(n, parts.to_vec())
                .map(|dec| {
                    let orders = standard_orderings(&dec, other);
                    orders.iter().any(|o| o.iter().copied().eq(0..parts.len()))
                })
                .unwrap_or(false)
        };
        if !standard(&v, pair.astar()) || !standard(&vstar, pair.a()) {
            class = PairClass::Other;
        }
        Ok(Self {
            d,
            theta,
            theta_star,
            v,
            vstar,
            class,
        })
    }

    pub fn v_decomposition(&self) -> Result<Decomposition> {
        let n = self.v.first().map_or(0, Subspace::ambient);
        Decomposition::with_stage(STAGE, n, self.v.clone())
    }

    pub fn vstar_decomposition(&self) -> Result<Decomposition> {
        let n = self.vstar.first().map_or(0, Subspace::ambient);
        Decomposition::with_stage(STAGE, n, self.vstar.clone())
    }

    pub fn summary(&self) -> ProfileSummary {
        ProfileSummary {
            d: self.d,
            n: self.v.first().map_or(0, Subspace::ambient),
            theta: self.theta.clone(),
            theta_star: self.theta_star.clone(),
            v_dims: self.v.iter().map(Subspace::dim).collect(),
            vstar_dims: self.vstar.iter().map(Subspace::dim).collect(),
            class: self.class.clone(),
        }
    }
}

/// Orderings of the parts of `dec` in which `other` acts block-tridiagonally.
///
/// The block-adjacency graph joins `i != j` when `E_i other E_j != 0` or
/// `E_j other E_i != 0`; a
/// standard ordering exists iff this graph is a simple path, and then it is
/// the path and its reversal. With at most two parts every ordering is
/// standard.
pub fn standard_orderings(dec: &Decomposition, other: &MatrixE) -> Vec<Vec<usize>> {
    let k = dec.len();
    match k {
        0 => return Vec::new(),
        1 => return vec![vec![0]],
        2 => return vec![vec![0, 1], vec![1, 0]],
        _ => {}
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    for i in 0..k {
        let left = dec.projector(i) * other;
        for j in 0..k {
            if i != j && !(&left * dec.projector(j)).is_zero() {
                if !adj[i].contains(&j) {
                    adj[i].push(j);
                }
                if !adj[j].contains(&i) {
                    adj[j].push(i);
                }
            }
        }
    }
    if adj.iter().any(|a| a.len() > 2 || a.is_empty()) {
        return Vec::new();
    }
    let ends: Vec<usize> = (0..k).filter(|&i| adj[i].len() == 1).collect();
    if ends.len() != 2 {
        return Vec::new();
    }
    let mut path = vec![ends[0]];
    let mut prev = usize::MAX;
    let mut cur = ends[0];
    while let Some(&next) = adj[cur].iter().find(|&&j| j != prev) {
        if path.len() == k {
            return Vec::new();
        }
        path.push(next);
        prev = cur;
        cur = next;
    }
    if path.len() != k {
        return Vec::new();
    }
    let rev: Vec<usize> = path.iter().rev().copied().collect();
    vec![path, rev]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_scalar, FieldSpec};

    fn sym(s: &str) -> Scalar {
        parse_scalar(s, &FieldSpec::Symbolic).unwrap()
    }

    fn matrix(rows: &[&[&str]]) -> MatrixE {
        MatrixE::from_rows(rows.iter().map(|r| r.iter().map(|s| sym(s)).collect()).collect())
    }

    #[test]
    fn derive_small_geometric() {
        let a = matrix(&[&["q^-1", "0"], &["1", "q"]]);
        let astar = matrix(&[&["q", "1"], &["0", "q^-1"]]);
        let pair = TriPair::new(a, astar, FieldSpec::Symbolic).unwrap();
        let p = TdProfile::derive(&pair, None).unwrap();
        assert_eq!(p.d, 1);
        assert_eq!(p.class, PairClass::QGeometric);
    }

    #[test]
    fn path_recognition_on_tridiagonal_blocks() {
        let astar = MatrixE::from_ints(&[&[0, 1, 0, 0], &[1, 0, 1, 0], &[0, 1, 0, 1], &[0, 0, 1, 0]]);
        // relabel parts in a scrambled order
        let parts: Vec<Subspace> = [2usize, 0, 3, 1]
            .iter()
            .map(|&i| crate::linalg::Subspace::span(4, [crate::linalg::unit_vector(4, i)]))
            .collect();
        let dec = Decomposition::new(4, parts).unwrap();
        let orders = standard_orderings(&dec, &astar);
        // original index i sits at position pos[i]
        assert_eq!(orders, vec![vec![1, 3, 0, 2], vec![2, 0, 3, 1]]);
    }

    #[test]
    fn disconnected_graph_has_no_ordering() {
        let parts: Vec<Subspace> = (0..3)
            .map(|i| Subspace::span(3, [crate::linalg::unit_vector(3, i)]))
            .collect();
        let dec = Decomposition::new(3, parts).unwrap();
        let x = MatrixE::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]);
        assert!(standard_orderings(&dec, &x).is_empty());
    }
}
