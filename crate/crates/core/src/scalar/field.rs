use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Rational, Scalar};
use crate::error::{Error, Result};

/// The field every scalar of a computation lives in.
///
/// `Symbolic` is `Q(q)` with `q` transcendental, so `q` is provably not a
/// root of unity. `Specialized` substitutes a rational `q` with `|q| != 0, 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum FieldSpec {
    #[default]
    Symbolic,
    #[serde(rename = "numeric")]
    Specialized {
        #[serde(with = "rational_literal")]
        q: Rational,
    },
}

impl FieldSpec {
    pub fn specialized(q: Rational) -> Result<Self> {
        if q.is_zero() || q.abs().is_one() {
            return Err(Error::Domain(format!(
                "q = {q} is a root of unity or zero; specialized mode needs |q| != 0, 1"
            )));
        }
        Ok(FieldSpec::Specialized { q })
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, FieldSpec::Symbolic)
    }

    pub fn q(&self) -> Scalar {
        match self {
            FieldSpec::Symbolic => Scalar::q(),
            FieldSpec::Specialized { q } => Scalar::Rational(q.clone()),
        }
    }

    pub fn q_pow(&self, k: i64) -> Scalar {
        self.q().powi(k)
    }

    /// `q - q^{-1}`.
    pub fn q_minus_qinv(&self) -> Scalar {
        self.q() - self.q_pow(-1)
    }

    /// Map a symbolic value into this field.
    pub fn specialize(&self, s: &Scalar) -> Result<Scalar> {
        match self {
            FieldSpec::Symbolic => Ok(s.clone()),
            FieldSpec::Specialized { q } => s.eval_at(q).map(Scalar::Rational).ok_or_else(|| {
                Error::Domain(format!("{s} has a pole at q = {q}"))
            }),
        }
    }
}

mod rational_literal {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        let value = crate::scalar::parse_scalar(&text, &super::FieldSpec::Symbolic)
            .map_err(serde::de::Error::custom)?;
        value
            .as_rational()
            .cloned()
            .ok_or_else(|| serde::de::Error::custom("q must be a rational literal"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_roots_of_unity() {
        assert!(FieldSpec::specialized(Rational::from_integer(1.into())).is_err());
        assert!(FieldSpec::specialized(Rational::from_integer((-1).into())).is_err());
        assert!(FieldSpec::specialized(Rational::from_integer(0.into())).is_err());
        assert!(FieldSpec::specialized(Rational::new(1.into(), 3.into())).is_ok());
    }

    #[test]
    fn json_descriptor() {
        let f: FieldSpec = serde_json::from_str(r#"{"mode":"numeric","q":"3"}"#).unwrap();
        assert_eq!(f.q(), Scalar::from_int(3));
        let s: FieldSpec = serde_json::from_str(r#"{"mode":"symbolic"}"#).unwrap();
        assert!(s.is_symbolic());
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"mode":"numeric","q":"3"}"#);
    }
}
