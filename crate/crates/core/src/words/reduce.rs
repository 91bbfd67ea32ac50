use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use crate::scalar::{FieldSpec, Scalar};

use super::element::{commutation_exponent, AlgebraElement};
use super::graded::{graded_split, GradedSplit, Quartic};
use super::word::Word;

/// The algebra on `x, y, z^{±1}` with `zx = q^2xz`, `zy = q^{-2}yz` and
/// the quartic generators sent to `α x^2 z^{-2}` and `α z^{-2} y^2`.
#[derive(Debug)]
pub struct AqAlpha {
    pub alpha: Scalar,
    pub field: FieldSpec,
    splits: RwLock<BTreeMap<usize, Arc<GradedSplit>>>,
}

impl AqAlpha {
    pub fn new(alpha: Scalar, field: FieldSpec) -> Self {
        Self {
            alpha,
            field,
            splits: RwLock::new(BTreeMap::new()),
        }
    }

    /// Cached [`graded_split`], computed at most once per length.
    pub fn split(&self, n: usize) -> Arc<GradedSplit> {
        if let Some(s) = self.splits.read().expect("split cache poisoned").get(&n) {
            return Arc::clone(s);
        }
        let computed = Arc::new(graded_split(n, &self.field));
        let mut table = self.splits.write().expect("split cache poisoned");
        Arc::clone(table.entry(n).or_insert(computed))
    }

    /// Image of `u g v z^j`, with `z^{-2}` moved to the right end.
    fn quartic_image(&self, left: &Word, g: Quartic, right: &Word, z: i64) -> (Word, i64, Scalar) {
        let square = Word::power(g.square(), 2);
        let word = left.concat(&square).concat(right);
        let moved = match g {
            Quartic::X => right.clone(),
            Quartic::Y => square.concat(right),
        };
        let e = commutation_exponent(-2, &moved);
        (word, z - 2, &self.alpha * self.field.q_pow(e))
    }

    /// Rewrites every reducible word, longest first, until only irreducible
    /// words remain.
    pub fn reduce(&self, element: &AlgebraElement) -> AlgebraElement {
        let mut pending = element.clone();
        loop {
            let target = pending
                .terms()
                .filter(|((w, _), _)| w.is_reducible())
                .max_by_key(|((w, _), _)| w.len())
                .map(|((w, z), c)| (w.clone(), *z, c.clone()));
            let Some((word, z, coeff)) = target else {
                return pending;
            };
            let split = self.split(word.len());
            let row = split.row(&word).expect("every reducible word has a pivot row");
            let mut next = pending.clone();
            next.add_term(word.clone(), z, -&coeff);
            for (v, r) in &row.residue {
                next.add_term(v.clone(), z, -(&coeff * r));
            }
            for (u, t) in &row.combination {
                let (w, z2, s) = self.quartic_image(&u.left, u.generator, &u.right, z);
                next.add_term(w, z2, &coeff * t * s);
            }
            pending = next;
        }
    }
}

/// [`AqAlpha::reduce`] as a free function.
pub fn reduce_element(element: &AlgebraElement, alg: &AqAlpha) -> AlgebraElement {
    alg.reduce(element)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q_int;
    use proptest::prelude::*;

    fn alg() -> AqAlpha {
        AqAlpha::new(Scalar::q() + Scalar::from_int(3), FieldSpec::Symbolic)
    }

    fn w(s: &str) -> Word {
        Word::from_letters(s).unwrap()
    }

    #[test]
    fn irreducible_input_is_fixed() {
        let a = alg();
        let e = AlgebraElement::parse("xyyx + 2 * x^3yz^4", &a.field).unwrap();
        assert_eq!(a.reduce(&e), e);
    }

    #[test]
    fn reduces_xyx2() {
        let a = alg();
        let f = &a.field;
        let inv3 = q_int(3, f).inv().unwrap();
        let mut expected = AlgebraElement::zero();
        expected.add_term(w("xxxy"), 0, -&inv3);
        expected.add_term(w("yxxx"), 0, inv3.clone());
        expected.add_term(w("xxyx"), 0, Scalar::one());
        expected.add_term(w("xx"), -2, &a.alpha * &inv3);
        assert_eq!(a.reduce(&AlgebraElement::word(w("xyxx"))), expected);
    }

    #[test]
    fn reduces_yxy2() {
        let a = alg();
        let f = &a.field;
        let inv3 = q_int(3, f).inv().unwrap();
        // the y-generator lists yxy^2 with -[3]; z^{-2} y^2 = q^8 y^2 z^{-2}
        let mut expected = AlgebraElement::zero();
        expected.add_term(w("xyyy"), 0, inv3.clone());
        expected.add_term(w("yyyx"), 0, -&inv3);
        expected.add_term(w("yyxy"), 0, Scalar::one());
        expected.add_term(w("yy"), -2, -(&a.alpha * &inv3 * f.q_pow(8)));
        assert_eq!(a.reduce(&AlgebraElement::word(w("yxyy"))), expected);
    }

    #[test]
    fn cache_is_shared() {
        let a = alg();
        let s1 = a.split(5);
        let s2 = a.split(5);
        assert!(Arc::ptr_eq(&s1, &s2));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn reduction_is_idempotent_and_shortens(n in 0usize..=6, seed in any::<usize>(), z in -3i64..=3) {
            let a = alg();
            let word = Word::from_index(n, seed % (1 << n));
            let e = AlgebraElement::monomial(word, z, Scalar::one());
            let r = a.reduce(&e);
            prop_assert!(r.terms().all(|((w, _), _)| w.is_irreducible()));
            prop_assert_eq!(a.reduce(&r), r.clone());
            prop_assert!(r.xy_length() <= e.xy_length());
            prop_assert!(r.terms().all(|((w, _), _)| (n - w.len()) % 2 == 0));
        }

        #[test]
        fn reduction_is_linear(i in 0usize..32, j in 0usize..32, s in -5i64..=5) {
            let a = alg();
            let u = AlgebraElement::word(Word::from_index(5, i));
            let v = AlgebraElement::monomial(Word::from_index(5, j), -1, Scalar::from_int(s));
            let sum = a.reduce(&u.add(&v));
            prop_assert_eq!(sum, a.reduce(&u).add(&a.reduce(&v)));
        }
    }
}
