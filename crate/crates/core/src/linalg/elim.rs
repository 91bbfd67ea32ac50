//! Row reduction to reduced row echelon form.
//!
//! Symbolic inputs go through a fraction-free forward pass (every entry
//! stays a polynomial in `q` once row denominators are cleared); rational
//! inputs use plain Gauss-Jordan.

use crate::scalar::{QPoly, Scalar};

/// Reduce `rows` in place to RREF, dropping zero rows. Returns pivot columns.
pub fn rref(rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let pivots = rref_with_pivot_limit(rows, ncols);
    rows.truncate(pivots.len());
    pivots
}

/// Reduce `rows` so that the leading `limit` columns are in RREF.
///
/// On return the first `pivots.len()` rows carry the pivots (all `< limit`);
/// the remaining rows vanish on the leading `limit` columns and are kept, so
/// augmented columns record the dependencies. Zero rows are dropped.
pub fn rref_with_pivot_limit(rows: &mut Vec<Vec<Scalar>>, limit: usize) -> Vec<usize> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    if rows.is_empty() {
        return Vec::new();
    }
    let symbolic = rows.iter().flatten().any(Scalar::is_symbolic);
    let pivots = if symbolic {
        clear_row_denominators(rows);
        fraction_free_forward(rows, limit)
    } else {
        gauss_forward(rows, limit)
    };
    back_substitute(rows, &pivots);
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    pivots
}

/// Scale each row by the lcm of its entry denominators.
fn clear_row_denominators(rows: &mut [Vec<Scalar>]) {
    for row in rows.iter_mut() {
        let mut lcm = QPoly::one();
        for x in row.iter() {
            if let Scalar::Function(f) = x {
                let den = f.denominator();
                let g = lcm.gcd(den);
                lcm = lcm.mul(&den.exact_div(&g).expect("gcd divides"));
            }
        }
        if !lcm.is_one() {
            let s = Scalar::from_poly(lcm);
            for x in row.iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &s;
                }
            }
        }
    }
}

/// Cost of using `x` as a pivot; smaller is cheaper.
fn pivot_cost(x: &Scalar) -> (usize, usize) {
    let (n, d) = x.parts();
    (
        n.degree().unwrap_or(0) + d.degree().unwrap_or(0),
        n.term_count() + d.term_count(),
    )
}

fn choose_pivot(rows: &[Vec<Scalar>], start: usize, col: usize) -> Option<usize> {
    (start..rows.len())
        .filter(|&i| !rows[i][col].is_zero())
        .min_by_key(|&i| pivot_cost(&rows[i][col]))
}

/// Bareiss elimination. Entries stay in `Q[q]`; each division is exact.
fn fraction_free_forward(rows: &mut [Vec<Scalar>], limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = Scalar::one();
    let mut r = 0;
    for col in 0..limit {
        if r == rows.len() {
            break;
        }
        let Some(p) = choose_pivot(rows, r, col) else {
            continue;
        };
        rows.swap(r, p);
        let piv = rows[r][col].clone();
        let (top, rest) = rows.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in 0..row.len() {
                if j < col {
                    continue;
                }
                let lhs = &piv * &row[j];
                let v = if factor.is_zero() || prow[j].is_zero() {
                    lhs
                } else {
                    lhs - &factor * &prow[j]
                };
                row[j] = if prev.is_one() || v.is_zero() { v } else { v / &prev };
            }
        }
        prev = piv;
        pivots.push(col);
        r += 1;
    }
    pivots
}

fn gauss_forward(rows: &mut [Vec<Scalar>], limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..limit {
        if r == rows.len() {
            break;
        }
        let Some(p) = choose_pivot(rows, r, col) else {
            continue;
        };
        rows.swap(r, p);
        normalize_row(&mut rows[r], col);
        let (top, rest) = rows.split_at_mut(r + 1);
        for row in rest.iter_mut() {
            eliminate(row, &top[r], col);
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Divide `row` by its entry at `col`.
fn normalize_row(row: &mut [Scalar], col: usize) {
    let inv = row[col].inv().expect("pivot is nonzero");
    if inv.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x = &*x * &inv;
        }
    }
}

/// `row -= row[col] * pivot_row`, where `pivot_row[col] = 1`.
fn eliminate(row: &mut [Scalar], pivot_row: &[Scalar], col: usize) {
    let factor = row[col].clone();
    if factor.is_zero() {
        return;
    }
    for (x, p) in row.iter_mut().zip(pivot_row) {
        if !p.is_zero() {
            *x = &*x - &factor * p;
        }
    }
}

/// Rows `0..pivots.len()` are in echelon form; make them reduced.
fn back_substitute(rows: &mut [Vec<Scalar>], pivots: &[usize]) {
    for (k, &col) in pivots.iter().enumerate() {
        normalize_row(&mut rows[k], col);
    }
    for (k, &col) in pivots.iter().enumerate().rev() {
        let (top, rest) = rows.split_at_mut(k);
        let prow = &rest[0];
        for row in top.iter_mut() {
            eliminate(row, prow, col);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_scalar, FieldSpec};

    fn sym(s: &str) -> Scalar {
        parse_scalar(s, &FieldSpec::Symbolic).unwrap()
    }

    #[test]
    fn rational_rref() {
        let mut rows = vec![
            vec![Scalar::from_int(2), Scalar::from_int(4)],
            vec![Scalar::from_int(1), Scalar::from_int(2)],
        ];
        assert_eq!(rref(&mut rows), vec![0]);
        assert_eq!(rows, vec![vec![Scalar::one(), Scalar::from_int(2)]]);
    }

    #[test]
    fn symbolic_rref_is_reduced() {
        let mut rows = vec![
            vec![sym("q"), sym("1"), sym("0")],
            vec![sym("1/q"), sym("q^2"), sym("1")],
            vec![sym("q+1/q"), sym("q^2+1"), sym("1")],
        ];
        let pivots = rref(&mut rows);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rows[0][0], Scalar::one());
        assert!(rows[0][1].is_zero());
        assert_eq!(rows[1][1], Scalar::one());
        // the third row is the sum of the first two
        assert_eq!(rows.len(), 2);
    }

    #[test]
    fn pivot_limit_keeps_dependency_rows() {
        let mut rows = vec![
            vec![Scalar::one(), Scalar::one(), Scalar::zero()],
            vec![Scalar::from_int(2), Scalar::zero(), Scalar::one()],
        ];
        // columns 0..1 only: second row becomes a pure dependency
        let pivots = rref_with_pivot_limit(&mut rows, 1);
        assert_eq!(pivots, vec![0]);
        assert_eq!(rows.len(), 2);
        assert!(rows[1][0].is_zero());
    }
}
