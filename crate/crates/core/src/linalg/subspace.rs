use super::elim;
use super::matrix::MatrixE;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A subspace of `K^n`, stored as the nonzero rows of its RREF basis.
///
/// The basis is canonical, so `==` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit_vector(ambient, i)).collect();
        Self {
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    /// Panics if a vector has the wrong length.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<Scalar>>) -> Self {
        let mut rows: Vec<Vec<Scalar>> = vectors.into_iter().collect();
        assert!(
            rows.iter().all(|v| v.len() == ambient),
            "spanning vector of wrong length"
        );
        let pivots = elim::rref(&mut rows);
        Self {
            ambient,
            basis: rows,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The remainder of `v` after reduction against the basis.
    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let f = v[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = &*x - &f * b;
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector of wrong length");
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coefficients of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains_vector(b))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Domain(format!(
                "ambient dimensions differ: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::span(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        ))
    }

    /// Zassenhaus: reduce `[s | s]` stacked on `[t | 0]`; the rows whose left
    /// half vanishes carry a basis of the intersection in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        if self.contains(other) {
            return Ok(other.clone());
        }
        if other.contains(self) {
            return Ok(self.clone());
        }
        let n = self.ambient;
        let mut rows: Vec<Vec<Scalar>> = self
            .basis
            .iter()
            .map(|b| b.iter().chain(b).cloned().collect())
            .chain(other.basis.iter().map(|b| {
                b.iter()
                    .cloned()
                    .chain(std::iter::repeat_n(Scalar::zero(), n))
                    .collect()
            }))
            .collect();
        let pivots = elim::rref_with_pivot_limit(&mut rows, n);
        Ok(Subspace::span(
            n,
            rows.into_iter().skip(pivots.len()).map(|r| r[n..].to_vec()),
        ))
    }

    /// `M * self`.
    pub fn image(&self, m: &MatrixE) -> Subspace {
        Subspace::span(m.rows(), self.basis.iter().map(|b| m.apply(b)))
    }

    /// Index of the first basis vector `b` with `m b` outside `target`.
    pub fn first_escape(&self, m: &MatrixE, target: &Subspace) -> Option<usize> {
        self.basis
            .iter()
            .position(|b| !target.contains_vector(&m.apply(b)))
    }

    /// Whether `m` vanishes on the subspace.
    pub fn annihilated_by(&self, m: &MatrixE) -> bool {
        self.basis
            .iter()
            .all(|b| m.apply(b).iter().all(Scalar::is_zero))
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    (0..n)
        .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
        .collect()
}

/// Null space of `m`.
pub fn kernel(m: &MatrixE) -> Subspace {
    let n = m.cols();
    let mut rows = m.to_rows();
    let pivots = elim::rref(&mut rows);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..n).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v = unit_vector(n, f);
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = -&row[f];
        }
        v
    });
    Subspace::span(n, vectors)
}

/// Column space of `m`.
pub fn column_space(m: &MatrixE) -> Subspace {
    Subspace::span(m.rows(), (0..m.cols()).map(|j| m.column(j)))
}

/// `sum_{k in range} parts[k]`.
pub fn sum_of(ambient: usize, parts: &[&Subspace]) -> Subspace {
    Subspace::span(
        ambient,
        parts.iter().flat_map(|s| s.basis.iter().cloned()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(&MatrixE::identity(3)).is_zero());
        assert!(kernel(&MatrixE::zeros(3, 3)).is_full());
        let k = kernel(&MatrixE::from_ints(&[&[1, 1], &[1, 1]]));
        assert_eq!(k, Subspace::span(2, [ints(&[1, -1])]));
    }

    #[test]
    fn intersection_of_coordinate_planes() {
        let s = Subspace::span(3, [ints(&[1, 0, 0]), ints(&[0, 1, 0])]);
        let t = Subspace::span(3, [ints(&[0, 1, 0]), ints(&[0, 0, 1])]);
        assert_eq!(s.intersect(&t).unwrap(), Subspace::span(3, [ints(&[0, 1, 0])]));
        assert_eq!(s.intersect(&s).unwrap(), s);
        assert!(s.intersect(&Subspace::zero(3)).unwrap().is_zero());
        assert_eq!(s.sum(&Subspace::zero(3)).unwrap(), s);
        assert!(s.sum(&Subspace::zero(2)).is_err());
    }

    #[test]
    fn skew_intersection() {
        let s = Subspace::span(3, [ints(&[1, 1, 0]), ints(&[0, 1, 1])]);
        let t = Subspace::span(3, [ints(&[1, 0, 0]), ints(&[0, 0, 1])]);
        // s ∩ t is spanned by (1,0,-1)
        assert_eq!(s.intersect(&t).unwrap(), Subspace::span(3, [ints(&[1, 0, -1])]));
    }

    fn small_vectors(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        proptest::collection::vec(proptest::collection::vec(-2i64..=2, n), 0..=n)
    }

    proptest! {
        #[test]
        fn dimension_formula(a in small_vectors(4), b in small_vectors(4)) {
            let s = Subspace::span(4, a.iter().map(|v| ints(v)));
            let t = Subspace::span(4, b.iter().map(|v| ints(v)));
            let sum = s.sum(&t).unwrap();
            let meet = s.intersect(&t).unwrap();
            prop_assert_eq!(s.dim() + t.dim(), sum.dim() + meet.dim());
            prop_assert!(s.contains(&meet) && t.contains(&meet));
            prop_assert!(sum.contains(&s) && sum.contains(&t));
        }

        #[test]
        fn kernel_vectors_are_annihilated(rows in proptest::collection::vec(
            proptest::collection::vec(-3i64..=3, 4), 1..=4)) {
            let m = MatrixE::from_rows(rows.iter().map(|r| ints(r)).collect());
            let k = kernel(&m);
            prop_assert!(k.annihilated_by(&m));
            prop_assert_eq!(k.dim() + m.rank(), 4);
        }
    }
}
