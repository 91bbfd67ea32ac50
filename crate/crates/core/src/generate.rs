//! Verification-gated construction of q-geometric and q-mixed pairs.
//!
//! A q-geometric pair is sought in split form: `A` lower bidiagonal with
//! diagonal `q^{2i-d}` and subdiagonal 1, `A*` upper bidiagonal with diagonal
//! `q^{d-2i}` and unknown superdiagonal `phi`. With `A` fixed, block
//! tridiagonality of `A*` on the eigenspaces of `A` is linear in `phi`.

use crate::error::{Error, Result};
use crate::linalg::{elim, MatrixE};
use crate::scalar::{FieldSpec, Scalar};
use crate::split::compute_split;
use crate::tdp::{
    eigenspaces, mixed_pattern, raising_pattern, verify_axioms, PairClass, TdProfile, TriPair,
};

pub const DEFAULT_MAX_D: usize = 6;

/// Diameter cap, overridable through `QTET_MAX_D`.
pub fn max_diameter() -> usize {
    std::env::var("QTET_MAX_D")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_D)
}

fn check_cap(d: usize) -> Result<()> {
    let cap = max_diameter();
    if d > cap {
        return Err(Error::Generation(format!(
            "d = {d} exceeds the diameter cap {cap} (set QTET_MAX_D to raise it)"
        )));
    }
    Ok(())
}

/// Free superdiagonal values tried, in order, until the axioms pass.
const SEEDS: [i64; 8] = [1, 2, 3, 4, 5, 6, 7, 8];

pub fn generate_qgeometric(d: usize, field: &FieldSpec) -> Result<TriPair> {
    check_cap(d)?;
    let n = d + 1;
    let up = raising_pattern(d, field);
    let mut a = MatrixE::diagonal(&up);
    for i in 0..d {
        a.set(i + 1, i, Scalar::one());
    }
    let down: Vec<Scalar> = up.iter().rev().cloned().collect();
    let base = MatrixE::diagonal(&down);
    if d == 0 {
        return gate_geometric(a, base, field);
    }

    let proj = crate::linalg::Decomposition::new(n, eigenspaces(&a, &up))
        .map_err(|e| Error::Generation(format!("A is not diagonalizable: {e}")))?;
    let e = proj.projectors();
    // rows: [coefficient of phi_0 .. phi_{d-1} | constant]
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i.abs_diff(j) < 2 {
                continue;
            }
            let constant = &(&e[i] * &base) * &e[j];
            for r in 0..n {
                for s in 0..n {
                    let mut row: Vec<Scalar> = (0..d)
                        .map(|k| e[i].get(r, k) * e[j].get(k + 1, s))
                        .collect();
                    row.push(constant.get(r, s).clone());
                    if row.iter().any(|x| !x.is_zero()) && !rows.contains(&row) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let pivots = elim::rref_with_pivot_limit(&mut rows, d);
    if rows.len() > pivots.len() {
        return Err(Error::Generation(format!(
            "no superdiagonal makes A* block tridiagonal at d = {d}"
        )));
    }
    let free: Vec<usize> = (0..d).filter(|k| !pivots.contains(k)).collect();
    let mut last_err = None;
    for seed in SEEDS {
        let mut phi = vec![Scalar::zero(); d];
        for &f in &free {
            phi[f] = Scalar::from_int(seed);
        }
        for (row, &p) in rows.iter().zip(&pivots) {
            let mut value = -&row[d];
            for &f in &free {
                value = value - &row[f] * &phi[f];
            }
            phi[p] = value;
        }
        if phi.iter().any(Scalar::is_zero) {
            continue;
        }
        let mut astar = base.clone();
        for (k, x) in phi.into_iter().enumerate() {
            astar.set(k, k + 1, x);
        }
        match gate_geometric(a.clone(), astar, field) {
            Ok(pair) => return Ok(pair),
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or_else(|| {
        Error::Generation(format!("every seeded superdiagonal has a zero entry at d = {d}"))
    }))
}

fn gate_geometric(a: MatrixE, astar: MatrixE, field: &FieldSpec) -> Result<TriPair> {
    let pair = TriPair::new(a, astar, field.clone())?;
    let profile = TdProfile::derive(&pair, Some(&Scalar::zero()))
        .map_err(|e| Error::Generation(format!("generated pair has no profile: {e}")))?;
    if profile.class != PairClass::QGeometric {
        return Err(Error::Generation("generated pair is not q-geometric".into()));
    }
    let report = verify_axioms(&pair, &profile);
    if let Some((name, witness)) = report.first_failure() {
        return Err(Error::Generation(format!(
            "generated pair fails axiom {name}: {witness}"
        )));
    }
    Ok(pair)
}

/// `(A, B + c A*)` where `B` acts as `q^{2i-d}` on the `W_i` of the
/// q-geometric pair `(A, A*)`.
pub fn derive_qmixed(geo: &TriPair, c: &Scalar) -> Result<TriPair> {
    if c.is_zero() {
        return Err(Error::precondition("derive_qmixed", "c must be nonzero"));
    }
    let field = geo.field();
    if !field.is_symbolic() && c.is_symbolic() {
        return Err(Error::Domain("symbolic c in a specialized-mode pair".into()));
    }
    let profile = TdProfile::derive(geo, Some(&Scalar::zero()))?;
    if profile.class != PairClass::QGeometric {
        return Err(Error::precondition("derive_qmixed", "input pair is not q-geometric"));
    }
    let d = profile.d;
    let target = mixed_pattern(d, c, field);
    for i in 0..=d {
        for j in i + 1..=d {
            if target[i] == target[j] {
                return Err(Error::Generation(format!(
                    "eigenvalue collision: theta*_{i} = theta*_{j} = {} for c = {c} at d = {d}",
                    target[i]
                )));
            }
        }
    }
    let split = compute_split(geo, &profile)?;
    let b = split.w.operator(&raising_pattern(d, field));
    let astar = &b + &geo.astar().scale(c);
    let pair = TriPair::new(geo.a().clone(), astar, field.clone())?;
    let mixed = TdProfile::derive(&pair, None)
        .map_err(|e| Error::Generation(format!("derived pair has no profile: {e}")))?;
    if mixed.class != (PairClass::QMixed { c: c.clone() }) {
        return Err(Error::Generation(format!(
            "derived pair classifies as {} instead of q-mixed with c = {c}",
            mixed.class.name()
        )));
    }
    let report = verify_axioms(&pair, &mixed);
    if let Some((name, witness)) = report.first_failure() {
        return Err(Error::Generation(format!(
            "derived pair fails axiom {name}: {witness}"
        )));
    }
    Ok(pair)
}
