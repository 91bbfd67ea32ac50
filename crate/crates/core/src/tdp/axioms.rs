use serde::Serialize;

use super::pair::TriPair;
use super::profile::TdProfile;
use crate::linalg::{algebra_closure_dim, sum_of, MatrixE, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl AxiomCheck {
    fn ok() -> Self {
        Self {
            pass: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> Self {
        Self {
            pass: false,
            witness: Some(witness),
        }
    }
}

/// Outcome of checking the four tridiagonal-pair axioms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    /// Both maps are diagonalizable with the profile eigenvalues.
    pub diagonalizable: AxiomCheck,
    /// `A* V_i` lies in `V_{i-1} + V_i + V_{i+1}`.
    pub astar_tridiagonal: AxiomCheck,
    /// `A V*_i` lies in `V*_{i-1} + V*_i + V*_{i+1}`.
    pub a_tridiagonal: AxiomCheck,
    /// The generated algebra is the full matrix algebra.
    pub irreducible: AxiomCheck,
    pub closure_dim: usize,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|(_, c)| c.pass)
    }

    pub fn checks(&self) -> [(&'static str, &AxiomCheck); 4] {
        [
            ("diagonalizable", &self.diagonalizable),
            ("astar_tridiagonal", &self.astar_tridiagonal),
            ("a_tridiagonal", &self.a_tridiagonal),
            ("irreducible", &self.irreducible),
        ]
    }

    /// Name and witness of the first failing axiom.
    pub fn first_failure(&self) -> Option<(&'static str, String)> {
        self.checks()
            .into_iter()
            .find(|(_, c)| !c.pass)
            .map(|(name, c)| (name, c.witness.clone().unwrap_or_default()))
    }
}

fn eigen_check(label: &str, n: usize, spaces: &[Subspace]) -> Option<String> {
    if let Some(i) = spaces.iter().position(Subspace::is_zero) {
        return Some(format!("{label}_{i} is zero"));
    }
    let total: usize = spaces.iter().map(Subspace::dim).sum();
    (total != n).then(|| format!("sum of dim {label}_i is {total}, expected {n}"))
}

/// First `i` with `x spaces[i]` outside `spaces[i-1] + spaces[i] + spaces[i+1]`.
fn tridiagonal_check(label: &str, map: &str, x: &MatrixE, spaces: &[Subspace]) -> Option<String> {
    let n = x.rows();
    let d = spaces.len().checked_sub(1)?;
    (0..=d).find_map(|i| {
        let lo = i.saturating_sub(1);
        let hi = (i + 1).min(d);
        let target = sum_of(n, &spaces[lo..=hi].iter().collect::<Vec<_>>());
        spaces[i].first_escape(x, &target).map(|b| {
            format!("{map} maps basis vector {b} of {label}_{i} outside {label}_{lo}+...+{label}_{hi}")
        })
    })
}

pub fn verify_axioms(pair: &TriPair, profile: &TdProfile) -> AxiomReport {
    let n = pair.n();
    let diagonalizable = match eigen_check("V", n, &profile.v)
        .or_else(|| eigen_check("V*", n, &profile.vstar))
    {
        None => AxiomCheck::ok(),
        Some(w) => AxiomCheck::fail(w),
    };
    let tri = |w: Option<String>| w.map_or_else(AxiomCheck::ok, AxiomCheck::fail);
    let astar_tridiagonal = tri(tridiagonal_check("V", "A*", pair.astar(), &profile.v));
    let a_tridiagonal = tri(tridiagonal_check("V*", "A", pair.a(), &profile.vstar));
    let closure_dim = algebra_closure_dim(n, &[pair.a().clone(), pair.astar().clone()]);
    let irreducible = if closure_dim == n * n {
        AxiomCheck::ok()
    } else {
        AxiomCheck::fail(format!("closure dimension {closure_dim} < {}", n * n))
    };
    AxiomReport {
        diagonalizable,
        astar_tridiagonal,
        a_tridiagonal,
        irreducible,
        closure_dim,
    }
}
