use std::collections::BTreeMap;

use crate::scalar::{q_int, FieldSpec, Scalar};

use super::word::{all_words, Letter, Word};

/// The two quartic generators of the ideal `Λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quartic {
    /// `x^3y - [3]x^2yx + [3]xyx^2 - yx^3`.
    X,
    /// `xy^3 - [3]yxy^2 + [3]y^2xy - y^3x`.
    Y,
}

impl Quartic {
    /// Terms as (word, coefficient).
    pub fn terms(self, field: &FieldSpec) -> Vec<(Word, Scalar)> {
        let three = q_int(3, field);
        let base = [
            ("xxxy", Scalar::one()),
            ("xxyx", -&three),
            ("xyxx", three.clone()),
            ("yxxx", -Scalar::one()),
        ];
        base.into_iter()
            .map(|(s, c)| {
                let w = Word::from_letters(s).expect("literal word");
                match self {
                    Quartic::X => (w, c),
                    // the y-generator is the x-generator swapped and reversed
                    Quartic::Y => (Word::new(w.swapped().letters().iter().rev().copied().collect()), c),
                }
            })
            .collect()
    }

    /// The square the generator reduces to: `x^2` or `y^2`.
    pub fn square(self) -> Letter {
        match self {
            Quartic::X => Letter::X,
            Quartic::Y => Letter::Y,
        }
    }
}

/// One spanning element `u · g · v` of `Λ_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorUse {
    pub left: Word,
    pub generator: Quartic,
    pub right: Word,
}

/// The `Λ_n` element with pivot at a reducible word.
#[derive(Clone, Debug)]
pub struct LambdaRow {
    pub pivot: Word,
    /// `pivot + sum coeff·v` over irreducible `v` lies in `Λ_n`.
    pub residue: Vec<(Word, Scalar)>,
    /// The same element as a combination of generator uses.
    pub combination: Vec<(GeneratorUse, Scalar)>,
}

/// `F_n = Ω_n ⊕ Λ_n` with `Λ_n` indexed by the reducible words.
#[derive(Clone, Debug)]
pub struct GradedSplit {
    pub n: usize,
    /// Irreducible words, spanning `Ω_n`.
    pub omega: Vec<Word>,
    /// One row per reducible word, in lexicographic order.
    pub lambda: Vec<LambdaRow>,
}

impl GradedSplit {
    pub fn omega_dim(&self) -> usize {
        self.omega.len()
    }

    pub fn lambda_dim(&self) -> usize {
        self.lambda.len()
    }

    pub fn row(&self, pivot: &Word) -> Option<&LambdaRow> {
        self.lambda
            .binary_search_by(|r| r.pivot.cmp(pivot))
            .ok()
            .map(|i| &self.lambda[i])
    }
}

/// Spanning set `F_i g F_j`, `i + j = n - 4`.
pub fn lambda_spanning_set(n: usize) -> Vec<GeneratorUse> {
    let mut out = Vec::new();
    if n < 4 {
        return out;
    }
    for generator in [Quartic::X, Quartic::Y] {
        for i in 0..=n - 4 {
            for left in all_words(i) {
                for right in all_words(n - 4 - i) {
                    out.push(GeneratorUse {
                        left: left.clone(),
                        generator,
                        right,
                    });
                }
            }
        }
    }
    out
}

type SparseRow = BTreeMap<usize, Scalar>;

/// Cost of pivoting on `x`; units are cheapest.
fn pivot_cost(x: &Scalar) -> (usize, usize) {
    let (n, d) = x.parts();
    (n.term_count() + d.term_count(), n.degree().unwrap_or(0) + d.degree().unwrap_or(0))
}

/// `row -= factor * pivot` in place, dropping cancelled entries.
fn eliminate(row: &mut SparseRow, pivot: &SparseRow, factor: &Scalar) {
    for (&col, p) in pivot {
        let updated = match row.get(&col) {
            Some(x) => x - &(factor * p),
            None => -(factor * p),
        };
        if updated.is_zero() {
            row.remove(&col);
        } else {
            row.insert(col, updated);
        }
    }
}

/// Row-reduces the spanning set of `Λ_n` with reducible coordinates first,
/// tracking the combination of spanning elements behind each pivot row.
///
/// Columns `< 2^n` are word coordinates, the rest record which spanning
/// elements a row combines. Elimination is sparse Gauss-Jordan since each
/// spanning element has only four nonzero coordinates.
pub fn graded_split(n: usize, field: &FieldSpec) -> GradedSplit {
    let words: Vec<Word> = all_words(n).collect();
    let (reducible, omega): (Vec<Word>, Vec<Word>) = words.iter().cloned().partition(Word::is_reducible);
    let mut column = vec![0usize; words.len()];
    for (c, w) in reducible.iter().chain(&omega).enumerate() {
        column[w.index()] = c;
    }
    let uses = lambda_spanning_set(n);
    let width = words.len();
    let mut rows: Vec<SparseRow> = uses
        .iter()
        .enumerate()
        .map(|(k, u)| {
            let mut row = SparseRow::new();
            for (w, c) in u.generator.terms(field) {
                let full = u.left.concat(&w).concat(&u.right);
                row.insert(column[full.index()], c);
            }
            row.insert(width + k, Scalar::one());
            row
        })
        .collect();

    let mut pivot_rows: Vec<SparseRow> = Vec::new();
    for col in 0..width {
        let Some(best) = (0..rows.len())
            .filter(|&i| rows[i].contains_key(&col))
            .min_by_key(|&i| (pivot_cost(&rows[i][&col]), rows[i].len()))
        else {
            continue;
        };
        let mut pivot = rows.swap_remove(best);
        let inv = pivot[&col].inv().expect("pivot entries are nonzero");
        for x in pivot.values_mut() {
            *x = &*x * &inv;
        }
        for row in rows.iter_mut().chain(pivot_rows.iter_mut()) {
            if let Some(f) = row.get(&col).cloned() {
                eliminate(row, &pivot, &f);
            }
        }
        pivot_rows.push(pivot);
    }
    let pivots: Vec<usize> = pivot_rows
        .iter()
        .map(|r| *r.keys().next().expect("pivot rows are nonzero"))
        .collect();
    assert!(
        pivots.iter().copied().eq(0..reducible.len()),
        "Λ_{n} pivots {pivots:?} are not the {} reducible coordinates",
        reducible.len()
    );
    assert_eq!(omega.len() + pivots.len(), width, "dim Ω_{n} + dim Λ_{n} != 2^{n}");

    let lambda = reducible
        .iter()
        .zip(&pivot_rows)
        .map(|(pivot, row)| LambdaRow {
            pivot: pivot.clone(),
            residue: row
                .range(reducible.len()..width)
                .map(|(&c, x)| (omega[c - reducible.len()].clone(), x.clone()))
                .collect(),
            combination: row.range(width..).map(|(&c, t)| (uses[c - width].clone(), t.clone())).collect(),
        })
        .collect();
    GradedSplit { n, omega, lambda }
}
