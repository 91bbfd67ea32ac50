use super::matrix::MatrixE;
use crate::scalar::{Rational, Scalar};

/// Dimension of the unital algebra generated by `gens`.
///
/// Breadth-first over products `b g` of basis elements with generators, each
/// reduced against the span so far; stops at `n^2` or when nothing new
/// appears. For symbolic inputs the dimension at a rational value of `q` is a
/// lower bound for the generic one, so a full specialized span settles the
/// answer without symbolic elimination.
pub fn algebra_closure_dim(n: usize, gens: &[MatrixE]) -> usize {
    assert!(
        gens.iter().all(|g| g.rows() == n && g.cols() == n),
        "generators must be {n}x{n}"
    );
    if n == 0 {
        return 0;
    }
    if gens.iter().any(MatrixE::is_symbolic) {
        for q in [2i64, 3, 5] {
            let q = Rational::from_integer(q.into());
            if let Some(specialized) = gens.iter().map(|g| specialize(g, &q)).collect::<Option<Vec<_>>>() {
                if closure_exact(n, &specialized) == n * n {
                    return n * n;
                }
            }
        }
    }
    closure_exact(n, gens)
}

fn specialize(m: &MatrixE, q: &Rational) -> Option<MatrixE> {
    let rows = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| x.eval_at(q).map(Scalar::Rational))
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    Some(MatrixE::from_rows(rows))
}

fn closure_exact(n: usize, gens: &[MatrixE]) -> usize {
    let cap = n * n;
    let mut span = Basis::default();
    let mut queue = std::collections::VecDeque::new();
    if let Some(v) = span.insert(MatrixE::identity(n).entries().to_vec()) {
        queue.push_back(v);
    }
    while let Some(b) = queue.pop_front() {
        let m = MatrixE::from_rows(b.chunks(n).map(<[Scalar]>::to_vec).collect());
        for g in gens {
            if let Some(v) = span.insert((&m * g).entries().to_vec()) {
                if span.dim() == cap {
                    return cap;
                }
                queue.push_back(v);
            }
        }
    }
    span.dim()
}

/// Incrementally maintained reduced echelon basis of flattened matrices.
#[derive(Default)]
struct Basis {
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Basis {
    fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if independent and returns its normalized residual.
    fn insert(&mut self, mut v: Vec<Scalar>) -> Option<Vec<Scalar>> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
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
        let p = v.iter().position(|x| !x.is_zero())?;
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, b) in row.iter_mut().zip(&v) {
                if !b.is_zero() {
                    *x = &*x - &f * b;
                }
            }
        }
        self.rows.push(v.clone());
        self.pivots.push(p);
        Some(v)
    }
}
