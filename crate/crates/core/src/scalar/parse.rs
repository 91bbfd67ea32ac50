//! Recursive-descent parser for scalar literals.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := ['-'] base ('^' signed-integer)?
//! base   := unsigned-integer | 'q' | '(' expr ')'
//! ```
//!
//! A leading `-` binds looser than `^`, so `-q^2` is `-(q^2)`.

use num_bigint::BigInt;

use super::{FieldSpec, Scalar};
use crate::error::{Error, Result};

pub fn parse_scalar(text: &str, field: &FieldSpec) -> Result<Scalar> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        field,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    field: &'a FieldSpec,
}

impl Parser<'_> {
    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(i, _)| i)
            .unwrap_or_else(|| self.chars.last().map(|&(i, c)| i + c.len_utf8()).unwrap_or(0))
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            position: self.offset(),
            message: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.factor()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let at = self.offset();
            let rhs = self.factor()?;
            if c == '*' {
                acc = acc * rhs;
            } else {
                if rhs.is_zero() {
                    return Err(Error::Parse {
                        position: at,
                        message: "division by zero".into(),
                    });
                }
                acc = acc / rhs;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Scalar> {
        let negate = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut value = self.base()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let at = self.offset();
            let k = self.signed_integer()?;
            if k < 0 && value.is_zero() {
                return Err(Error::Parse {
                    position: at,
                    message: "negative power of zero".into(),
                });
            }
            value = value.powi(k);
        }
        Ok(if negate { -value } else { value })
    }

    fn base(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some('q') => {
                self.pos += 1;
                Ok(self.field.q())
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(Scalar::from_rational(n.into()))
            }
            Some(_) => Err(self.error("expected integer, 'q' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(&(_, c)) = self.chars.get(self.pos) {
            if c.is_ascii_digit() {
                s.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        s
    }

    fn signed_integer(&mut self) -> Result<i64> {
        let sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        self.skip_ws();
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected exponent"));
        }
        digits
            .parse::<i64>()
            .map(|k| sign * k)
            .map_err(|_| self.error("exponent out of range"))
    }
}
