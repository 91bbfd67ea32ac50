//! The two split decompositions `{U_i}`, `{W_i}` and the maps built on them.

mod projectors;

pub use projectors::{
    bijection_check, ei_on_w_series, eigen_projectors, product_projectors, BijectionReport,
};

use crate::error::{Error, Result};
use crate::linalg::{Decomposition, MatrixE, Subspace};
use crate::scalar::Scalar;
use crate::tdp::{PairClass, TdProfile, TriPair};

const STAGE: &str = "split";

#[derive(Clone, Debug)]
pub struct SplitData {
    pub d: usize,
    pub n: usize,
    pub theta: Vec<Scalar>,
    pub theta_star: Vec<Scalar>,
    /// Eigenspaces of `A` and `A*` in standard order.
    pub v: Decomposition,
    pub vstar: Decomposition,
    /// `U_i = (V*_0 + ... + V*_i) ∩ (V_i + ... + V_d)`.
    pub u: Decomposition,
    /// `W_i = (V*_0 + ... + V*_i) ∩ (V_0 + ... + V_{d-i})`.
    pub w: Decomposition,
    /// `A - sum theta_h F_h`.
    pub raise_u: MatrixE,
    /// `A* - sum theta*_h F_h`.
    pub lower_u: MatrixE,
    /// `A - sum theta_{d-h} G_h`.
    pub raise_w: MatrixE,
    /// `A* - sum theta*_h G_h`.
    pub lower_w: MatrixE,
    /// `L^i R^i` acts on `U_0` as `zeta[i]`.
    pub zeta: Vec<Scalar>,
    /// Projections onto the `V_i`.
    pub e: Vec<MatrixE>,
    /// Projections onto the eigenspaces of `Ã*`; empty until the operator
    /// suite fills them in.
    pub estar_tilde: Vec<MatrixE>,
}

impl SplitData {
    pub fn f(&self, i: usize) -> &MatrixE {
        self.u.projector(i)
    }

    pub fn g(&self, i: usize) -> &MatrixE {
        self.w.projector(i)
    }

    /// Spanning vector of the one-dimensional `U_0`.
    pub fn u0_vector(&self) -> &[Scalar] {
        &self.u.part(0).basis()[0]
    }
}

/// Check `x part(i) ⊆ part(i + shift)` for every `i`, a part outside the
/// index range being zero.
fn check_shift(
    dec: &Decomposition,
    x: &MatrixE,
    shift: isize,
    label: &str,
) -> Result<()> {
    let zero = Subspace::zero(dec.ambient());
    for i in 0..dec.len() {
        let j = i as isize + shift;
        let target = if j < 0 || j as usize >= dec.len() {
            &zero
        } else {
            dec.part(j as usize)
        };
        if let Some(b) = dec.part(i).first_escape(x, target) {
            return Err(Error::structural(
                STAGE,
                format!("{label}: basis vector {b} of part {i} escapes part {j}"),
            ));
        }
    }
    Ok(())
}

/// `x - theta_i` on part `i` has to shift by `shift`.
fn check_shifted_eigen(
    dec: &Decomposition,
    x: &MatrixE,
    eigen: impl Fn(usize) -> Scalar,
    shift: isize,
    label: &str,
) -> Result<()> {
    let zero = Subspace::zero(dec.ambient());
    for i in 0..dec.len() {
        let y = x.shift(&-eigen(i));
        let j = i as isize + shift;
        let target = if j < 0 || j as usize >= dec.len() {
            &zero
        } else {
            dec.part(j as usize)
        };
        if let Some(b) = dec.part(i).first_escape(&y, target) {
            return Err(Error::structural(
                STAGE,
                format!("{label} fails at index {i} (basis vector {b})"),
            ));
        }
    }
    Ok(())
}

/// Both split decompositions, the raising and lowering maps, `E_i` and `zeta`.
pub fn compute_split(pair: &TriPair, profile: &TdProfile) -> Result<SplitData> {
    if matches!(profile.class, PairClass::Other) {
        return Err(Error::precondition(
            STAGE,
            "pair is neither q-geometric nor q-mixed",
        ));
    }
    let n = pair.n();
    let d = profile.d;
    let v = profile.v_decomposition()?;
    let vstar = profile.vstar_decomposition()?;
    let star_prefix: Vec<Subspace> = (0..=d).map(|i| vstar.prefix_sum(i)).collect();
    let v_prefix: Vec<Subspace> = (0..=d).map(|i| v.prefix_sum(i)).collect();
    let v_suffix: Vec<Subspace> = (0..=d).map(|i| v.suffix_sum(i)).collect();

    let mut u_parts = Vec::with_capacity(d + 1);
    let mut w_parts = Vec::with_capacity(d + 1);
    for i in 0..=d {
        u_parts.push(star_prefix[i].intersect(&v_suffix[i])?);
        w_parts.push(star_prefix[i].intersect(&v_prefix[d - i])?);
    }
    let u = Decomposition::with_stage(STAGE, n, u_parts)?;
    let w = Decomposition::with_stage(STAGE, n, w_parts)?;

    let th = &profile.theta;
    let ths = &profile.theta_star;
    check_shifted_eigen(&u, pair.astar(), |i| ths[i].clone(), -1, "(A* - theta*_i)U_i ⊆ U_{i-1}")?;
    check_shifted_eigen(&u, pair.a(), |i| th[i].clone(), 1, "(A - theta_i)U_i ⊆ U_{i+1}")?;
    check_shifted_eigen(&w, pair.astar(), |i| ths[i].clone(), -1, "(A* - theta*_i)W_i ⊆ W_{i-1}")?;
    check_shifted_eigen(&w, pair.a(), |i| th[d - i].clone(), 1, "(A - theta_{d-i})W_i ⊆ W_{i+1}")?;
    for i in 0..=d {
        if u.prefix_sum(i) != star_prefix[i] || w.prefix_sum(i) != star_prefix[i] {
            return Err(Error::structural(
                STAGE,
                format!("prefix sums of the split differ from V*_0+...+V*_{i}"),
            ));
        }
        if u.suffix_sum(i) != v_suffix[i] {
            return Err(Error::structural(STAGE, format!("U_{i}+...+U_d != V_{i}+...+V_d")));
        }
        if w.suffix_sum(i) != v_prefix[d - i] {
            return Err(Error::structural(
                STAGE,
                format!("W_{i}+...+W_d != V_0+...+V_{}", d - i),
            ));
        }
    }

    let rev: Vec<Scalar> = th.iter().rev().cloned().collect();
    let raise_u = pair.a() - &u.operator(th);
    let lower_u = pair.astar() - &u.operator(ths);
    let raise_w = pair.a() - &w.operator(&rev);
    let lower_w = pair.astar() - &w.operator(ths);
    check_shift(&u, &raise_u, 1, "R U_i ⊆ U_{i+1}")?;
    check_shift(&u, &lower_u, -1, "L U_i ⊆ U_{i-1}")?;
    check_shift(&w, &raise_w, 1, "r W_i ⊆ W_{i+1}")?;
    check_shift(&w, &lower_w, -1, "l W_i ⊆ W_{i-1}")?;

    let e = v.projectors().to_vec();
    let mut split = SplitData {
        d,
        n,
        theta: th.clone(),
        theta_star: ths.clone(),
        v,
        vstar,
        u,
        w,
        raise_u,
        lower_u,
        raise_w,
        lower_w,
        zeta: Vec::new(),
        e,
        estar_tilde: Vec::new(),
    };
    split.zeta = zeta_sequence(&split)?;
    Ok(split)
}

/// `zeta_i` with `L^i R^i u = zeta_i u` for `u` spanning `U_0`.
pub fn zeta_sequence(split: &SplitData) -> Result<Vec<Scalar>> {
    let u0 = split.u.part(0);
    if u0.dim() != 1 {
        return Err(Error::precondition(
            "zeta",
            format!("dim U_0 = {}, expected 1", u0.dim()),
        ));
    }
    let u = &u0.basis()[0];
    let p = u0.pivots()[0];
    let mut raised = u.clone();
    let mut zeta = Vec::with_capacity(split.d + 1);
    for i in 0..=split.d {
        let mut v = raised.clone();
        for _ in 0..i {
            v = split.lower_u.apply(&v);
        }
        // u[p] = 1 in reduced echelon form
        let z = v[p].clone();
        if v.iter().zip(u).any(|(a, b)| a != &(&z * b)) {
            return Err(Error::structural(
                "zeta",
                format!("L^{i} R^{i} u is not a multiple of u"),
            ));
        }
        zeta.push(z);
        raised = split.raise_u.apply(&raised);
    }
    Ok(zeta)
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

    fn small_split() -> (TriPair, SplitData) {
        let pair = TriPair::new(
            matrix(&[&["q^-1", "0"], &["1", "q"]]),
            matrix(&[&["q", "1"], &["0", "q^-1"]]),
            FieldSpec::Symbolic,
        )
        .unwrap();
        let profile = TdProfile::derive(&pair, None).unwrap();
        let split = compute_split(&pair, &profile).unwrap();
        (pair, split)
    }

    #[test]
    fn diameter_one_split_by_hand() {
        let (pair, split) = small_split();
        assert_eq!(split.u.dims(), vec![1, 1]);
        assert_eq!(split.w.dims(), vec![1, 1]);
        // U_0 = V*_0 = ker(A* - q) = span(e_0); U_1 = V_1 = span(e_1)
        assert_eq!(split.u0_vector(), &[Scalar::one(), Scalar::zero()]);
        assert_eq!(split.u.part(0), split.w.part(0));
        // R e_0 = e_1 and L e_1 = e_0, so zeta_1 = 1
        assert_eq!(split.raise_u, matrix(&[&["0", "0"], &["1", "0"]]));
        assert_eq!(split.lower_u, matrix(&[&["0", "1"], &["0", "0"]]));
        let direct = split.lower_u.apply(&pair.a().apply(split.u0_vector()));
        assert_eq!(direct[0], split.zeta[1]);
        assert_eq!(split.zeta, vec![Scalar::one(), Scalar::one()]);
        assert!(split.raise_u.pow(2).is_zero() && split.lower_u.pow(2).is_zero());
    }

    #[test]
    fn one_dimensional_zeta() {
        let pair = TriPair::new(MatrixE::identity(1), MatrixE::identity(1), FieldSpec::Symbolic).unwrap();
        let profile = TdProfile::derive(&pair, None).unwrap();
        let split = compute_split(&pair, &profile).unwrap();
        assert_eq!(split.zeta, vec![Scalar::one()]);
    }
}
