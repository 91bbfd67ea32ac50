use super::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// The balanced q-integer `[n] = (q^n - q^{-n}) / (q - q^{-1})`.
pub fn q_int(n: u32, field: &FieldSpec) -> Scalar {
    if n == 0 {
        return Scalar::zero();
    }
    // q^{1-n} + q^{3-n} + ... + q^{n-1}, which avoids the division
    let n = i64::from(n);
    (0..n).map(|k| field.q_pow(2 * k - n + 1)).sum()
}

/// `[n]! = [n][n-1]...[1]`, with `[0]! = 1`.
pub fn q_factorial(n: u32, field: &FieldSpec) -> Scalar {
    (1..=n).map(|k| q_int(k, field)).product()
}

/// The Gaussian binomial `[n]! / ([m]! [n-m]!)`.
pub fn q_binomial(n: u32, m: i64, field: &FieldSpec) -> Result<Scalar> {
    if m < 0 || m > i64::from(n) {
        return Err(Error::Domain(format!("q-binomial [{n} {m}] needs 0 <= m <= n")));
    }
    let m = m as u32;
    let m = m.min(n - m);
    let mut acc = Scalar::one();
    for k in 1..=m {
        acc = acc * q_int(n - m + k, field) / q_int(k, field);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_scalar;

    fn sym(s: &str) -> Scalar {
        parse_scalar(s, &FieldSpec::Symbolic).unwrap()
    }

    #[test]
    fn small_q_integers() {
        let f = FieldSpec::Symbolic;
        assert_eq!(q_int(0, &f), Scalar::zero());
        assert_eq!(q_int(1, &f), Scalar::one());
        assert_eq!(q_int(2, &f), sym("(q^2+1)/q"));
        assert_eq!(q_int(3, &f), sym("q^2 + 1 + q^-2"));
    }

    #[test]
    fn matches_defining_quotient() {
        let f = FieldSpec::Symbolic;
        let q = f.q();
        for n in 0..10u32 {
            let n_i = i64::from(n);
            let direct = (q.powi(n_i) - q.powi(-n_i)) / (&q - q.powi(-1));
            assert_eq!(q_int(n, &f), direct, "n = {n}");
        }
    }

    #[test]
    fn binomial_examples() {
        let f = FieldSpec::Symbolic;
        assert_eq!(q_binomial(5, 0, &f).unwrap(), Scalar::one());
        assert_eq!(q_binomial(2, 1, &f).unwrap(), q_int(2, &f));
        assert_eq!(
            q_binomial(4, 2, &f).unwrap(),
            sym("q^4 + q^2 + 2 + q^-2 + q^-4")
        );
        assert!(q_binomial(3, 4, &f).is_err());
        assert!(q_binomial(3, -1, &f).is_err());
    }

    #[test]
    fn binomial_agrees_with_factorials() {
        let f = FieldSpec::Symbolic;
        for n in 0..9u32 {
            for m in 0..=n {
                let via_fact =
                    q_factorial(n, &f) / (q_factorial(m, &f) * q_factorial(n - m, &f));
                assert_eq!(q_binomial(n, i64::from(m), &f).unwrap(), via_fact);
            }
        }
    }

    #[test]
    fn factorial_recursion() {
        let f = FieldSpec::Symbolic;
        assert_eq!(q_factorial(0, &f), Scalar::one());
        for n in 1..=12u32 {
            assert_eq!(q_factorial(n, &f), q_int(n, &f) * q_factorial(n - 1, &f));
        }
    }

    #[test]
    fn q_pascal_identities() {
        let f = FieldSpec::Symbolic;
        let q = f.q();
        for n in 2..=12u32 {
            for m in 1..n {
                let a = q_binomial(n - 1, i64::from(m), &f).unwrap();
                let b = q_binomial(n - 1, i64::from(m) - 1, &f).unwrap();
                let c = q_binomial(n, i64::from(m), &f).unwrap();
                assert_eq!(&a + q.powi(i64::from(n)) * &b, q.powi(i64::from(m)) * &c);
                assert_eq!(&a + q.powi(-i64::from(n)) * &b, q.powi(-i64::from(m)) * &c);
            }
        }
    }
}
