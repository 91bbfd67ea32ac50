use super::matrix::MatrixE;
use super::subspace::Subspace;
use crate::error::{Error, Result, Stage};
use crate::scalar::Scalar;

/// An ordered direct-sum decomposition of the ambient space.
///
/// Invariant: every part is nonzero, the sum is direct and equals `K^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    ambient: usize,
    parts: Vec<Subspace>,
    projectors: Vec<MatrixE>,
}

impl Decomposition {
    pub fn new(ambient: usize, parts: Vec<Subspace>) -> Result<Self> {
        Self::with_stage("decomposition", ambient, parts)
    }

    /// As `new`, with structural errors attributed to `stage`.
    pub fn with_stage(stage: Stage, ambient: usize, parts: Vec<Subspace>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|p| p.ambient() != ambient) {
            return Err(Error::Domain(format!(
                "part {i} lives in dimension {}, expected {ambient}",
                parts[i].ambient()
            )));
        }
        if let Some(i) = parts.iter().position(Subspace::is_zero) {
            return Err(Error::structural(stage, format!("part {i} is the zero subspace")));
        }
        let total: usize = parts.iter().map(Subspace::dim).sum();
        if total != ambient {
            return Err(Error::structural(
                stage,
                format!("part dimensions sum to {total}, ambient dimension is {ambient}"),
            ));
        }
        let columns: Vec<Vec<Scalar>> = parts.iter().flat_map(|p| p.basis().to_vec()).collect();
        let change = MatrixE::from_columns(ambient, &columns);
        let Some(inverse) = change.inverse() else {
            return Err(Error::structural(stage, "sum of parts is not direct"));
        };
        let mut projectors = Vec::with_capacity(parts.len());
        let mut offset = 0;
        for p in &parts {
            let k = p.dim();
            let mut proj = MatrixE::zeros(ambient, ambient);
            for i in 0..ambient {
                for j in 0..ambient {
                    let v: Scalar = (offset..offset + k)
                        .map(|t| change.get(i, t) * inverse.get(t, j))
                        .sum();
                    proj.set(i, j, v);
                }
            }
            projectors.push(proj);
            offset += k;
        }
        Ok(Self {
            ambient,
            parts,
            projectors,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[Subspace] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &Subspace {
        &self.parts[i]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.parts.iter().map(Subspace::dim).collect()
    }

    /// Projection onto part `i` along the others.
    pub fn projector(&self, i: usize) -> &MatrixE {
        &self.projectors[i]
    }

    pub fn projectors(&self) -> &[MatrixE] {
        &self.projectors
    }

    /// The operator acting as `eigenvalues[i]` on part `i`.
    pub fn operator(&self, eigenvalues: &[Scalar]) -> MatrixE {
        assert_eq!(eigenvalues.len(), self.len(), "one eigenvalue per part");
        self.projectors
            .iter()
            .zip(eigenvalues)
            .fold(MatrixE::zeros(self.ambient, self.ambient), |acc, (p, e)| {
                acc + p.scale(e)
            })
    }

    /// `parts[0] + ... + parts[i]`.
    pub fn prefix_sum(&self, i: usize) -> Subspace {
        super::subspace::sum_of(self.ambient, &self.parts[..=i].iter().collect::<Vec<_>>())
    }

    /// `parts[i] + ... + parts[last]`.
    pub fn suffix_sum(&self, i: usize) -> Subspace {
        super::subspace::sum_of(self.ambient, &self.parts[i..].iter().collect::<Vec<_>>())
    }

    pub fn reversed(&self) -> Self {
        Self {
            ambient: self.ambient,
            parts: self.parts.iter().rev().cloned().collect(),
            projectors: self.projectors.iter().rev().cloned().collect(),
        }
    }
}
