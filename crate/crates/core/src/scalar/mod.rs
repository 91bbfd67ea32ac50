//! Exact scalars over `Q` and over the rational-function field `Q(q)`.
//!
//! A [`Scalar`] is either a plain rational or a reduced fraction of two
//! polynomials in `q` with a monic denominator. Constants are always stored
//! as rationals, so every value has exactly one representation and `==` is
//! an exact zero test.

mod field;
mod parse;
mod poly;
mod qint;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use field::FieldSpec;
pub use parse::parse_scalar;
pub use poly::QPoly;
pub use qint::{q_binomial, q_factorial, q_int};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Reduced fraction `num / den` in `Q(q)` with `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Function(RatFunc),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::Rational(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::Rational(r)
    }

    /// The indeterminate `q` of the symbolic field.
    pub fn q() -> Self {
        Scalar::Function(RatFunc {
            num: QPoly::monomial(Rational::one(), 1),
            den: QPoly::one(),
        })
    }

    /// Builds `num / den`, reducing and collapsing constants.
    ///
    /// Panics if `den` is zero.
    pub fn from_polys(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Scalar::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let lead = den.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self::from_reduced(num, den)
    }

    fn from_reduced(num: QPoly, den: QPoly) -> Self {
        if num.is_constant() && den.is_constant() {
            Scalar::Rational(num.constant_term() / den.constant_term())
        } else {
            Scalar::Function(RatFunc { num, den })
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        Self::from_reduced(p, QPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_one())
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Scalar::Function(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Function(_) => None,
        }
    }

    /// Numerator and denominator as polynomials (rationals become constants).
    pub fn parts(&self) -> (QPoly, QPoly) {
        match self {
            Scalar::Rational(r) => (
                QPoly::constant(Rational::from_integer(r.numer().clone())),
                QPoly::constant(Rational::from_integer(r.denom().clone())),
            ),
            Scalar::Function(f) => (f.num.clone(), f.den.clone()),
        }
    }

    /// True when the value is a polynomial in `q` (denominator 1).
    pub fn is_polynomial(&self) -> bool {
        match self {
            Scalar::Rational(_) => true,
            Scalar::Function(f) => f.den.is_one(),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Rational(r) if r.is_zero() => None,
            Scalar::Rational(r) => Some(Scalar::Rational(r.recip())),
            Scalar::Function(f) => Some(Self::from_polys(f.den.clone(), f.num.clone())),
        }
    }

    /// Integer power; negative exponents invert. Panics on `0^k`, `k < 0`.
    pub fn powi(&self, k: i64) -> Self {
        let base = if k < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut out = Scalar::one();
        let mut b = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        out
    }

    /// Substitute a rational value for `q`. `None` if a denominator vanishes.
    pub fn eval_at(&self, q: &Rational) -> Option<Rational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Function(f) => {
                let d = f.den.eval(q);
                if d.is_zero() {
                    None
                } else {
                    Some(f.num.eval(q) / d)
                }
            }
        }
    }

    /// Rendering in the literal grammar accepted by [`parse_scalar`].
    pub fn to_literal(&self) -> String {
        match self {
            Scalar::Rational(r) => r.to_string(),
            Scalar::Function(f) => {
                if f.den.is_one() {
                    return f.num.to_literal();
                }
                let num = if f.num.term_count() > 1 {
                    format!("({})", f.num.to_literal())
                } else {
                    f.num.to_literal()
                };
                let den = if f.den.term_count() > 1 {
                    format!("({})", f.den.to_literal())
                } else {
                    f.den.to_literal()
                };
                format!("{num}/{den}")
            }
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Rational(r), Scalar::Function(f)) | (Scalar::Function(f), Scalar::Rational(r)) => {
                if r.is_zero() {
                    return Scalar::Function(f.clone());
                }
                // gcd(num + r*den, den) = gcd(num, den) = 1
                let num = f.num.add(&f.den.scale(r));
                Self::from_reduced(num, f.den.clone())
            }
            (Scalar::Function(a), Scalar::Function(b)) => {
                if a.den == b.den {
                    let num = a.num.add(&b.num);
                    if num.is_zero() {
                        return Scalar::zero();
                    }
                    if a.den.is_one() {
                        return Self::from_reduced(num, QPoly::one());
                    }
                    return Self::from_polys(num, a.den.clone());
                }
                let g = a.den.gcd(&b.den);
                let bd = b.den.exact_div(&g).unwrap();
                let ad = a.den.exact_div(&g).unwrap();
                let num = a.num.mul(&bd).add(&b.num.mul(&ad));
                Self::from_polys(num, a.den.mul(&bd))
            }
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Rational(r), Scalar::Function(f)) | (Scalar::Function(f), Scalar::Rational(r)) => {
                if r.is_zero() {
                    return Scalar::zero();
                }
                Scalar::Function(RatFunc {
                    num: f.num.scale(r),
                    den: f.den.clone(),
                })
            }
            (Scalar::Function(a), Scalar::Function(b)) => {
                let g1 = a.num.gcd(&b.den);
                let g2 = b.num.gcd(&a.den);
                let an = a.num.exact_div(&g1).unwrap();
                let bd = b.den.exact_div(&g1).unwrap();
                let bn = b.num.exact_div(&g2).unwrap();
                let ad = a.den.exact_div(&g2).unwrap();
                // both dens monic and reduced, so the product is reduced and monic
                Self::from_reduced(an.mul(&bn), ad.mul(&bd)).normalize_lead()
            }
        }
    }

    fn normalize_lead(self) -> Self {
        match self {
            Scalar::Function(f) if !f.den.leading().unwrap().is_one() => {
                Self::from_polys(f.num, f.den)
            }
            other => other,
        }
    }

    fn div_ref(&self, other: &Self) -> Self {
        // exact polynomial quotients are common in fraction-free elimination
        if let (Scalar::Function(a), Scalar::Function(b)) = (self, other) {
            if a.den.is_one() && b.den.is_one() {
                if let Some(q) = a.num.exact_div(&b.num) {
                    return Self::from_reduced(q, QPoly::one());
                }
            }
        }
        let inv = other.inv().expect("division by zero scalar");
        self.mul_ref(&inv)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self.to_literal())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$inner(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$inner(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
    };
}

impl Scalar {
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&-other)
    }
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Function(f) => Scalar::Function(RatFunc {
                num: f.num.neg(),
                den: f.den.clone(),
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_literal())
    }
}

/// Deserializes a literal in symbolic mode; use [`parse_scalar`] directly
/// when a specialized field is in effect.
impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_scalar(&text, &FieldSpec::Symbolic).map_err(serde::de::Error::custom)
    }
}
