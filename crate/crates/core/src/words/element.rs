use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, FieldSpec, Scalar};

use super::word::{Letter, Word};

/// A normal-form monomial `w z^j`.
pub type Term = (Word, i64);

/// Linear combination of monomials `w z^j`; no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Term, Scalar>,
}

/// `q`-power picked up moving `z^k` rightward across `w`:
/// `z^k x = q^{2k} x z^k`, `z^k y = q^{-2k} y z^k`.
pub fn commutation_exponent(k: i64, w: &Word) -> i64 {
    let (a, b) = w.counts();
    2 * k * (a as i64 - b as i64)
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Word::empty(), 0, Scalar::one())
    }

    pub fn monomial(word: Word, z: i64, coeff: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(word, z, coeff);
        e
    }

    pub fn word(word: Word) -> Self {
        Self::monomial(word, 0, Scalar::one())
    }

    pub fn add_term(&mut self, word: Word, z: i64, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let key = (word, z);
        let sum = match self.terms.get(&key) {
            Some(c) => c + &coeff,
            None => coeff,
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &Word, z: i64) -> Scalar {
        self.terms
            .get(&(word.clone(), z))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word length over the terms; 0 for the zero element.
    pub fn xy_length(&self) -> usize {
        self.terms.keys().map(|(w, _)| w.len()).max().unwrap_or(0)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero();
        for ((w, z), c) in &self.terms {
            out.add_term(w.clone(), *z, c * s);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((w, z), c) in &other.terms {
            out.add_term(w.clone(), *z, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// Product with both factors in normal form.
    pub fn mul(&self, other: &Self, field: &FieldSpec) -> Self {
        let mut out = Self::zero();
        for ((w1, z1), c1) in &self.terms {
            for ((w2, z2), c2) in &other.terms {
                let e = commutation_exponent(*z1, w2);
                out.add_term(w1.concat(w2), z1 + z2, field.q_pow(e) * c1 * c2);
            }
        }
        out
    }

    /// Parses `coeff * word + coeff * word + ...`; see the module docs for
    /// the word grammar.
    pub fn parse(text: &str, field: &FieldSpec) -> Result<Self> {
        let mut out = Self::zero();
        for (offset, term) in split_top_level(text, '+') {
            let trimmed = term.trim();
            if trimmed.is_empty() {
                return Err(Error::Parse {
                    position: offset,
                    message: "empty term".into(),
                });
            }
            let lead = offset + term.len() - term.trim_start().len();
            let (coeff, word_text, word_offset) = match split_coefficient(trimmed) {
                Some((c, w, at)) => (parse_scalar(c, field).map_err(|e| shift_error(e, lead))?, w, lead + at),
                None if is_word_text(trimmed) => (Scalar::one(), trimmed, lead),
                None => (parse_scalar(trimmed, field).map_err(|e| shift_error(e, lead))?, "", lead),
            };
            let (w, z, e) = parse_monomial(word_text, word_offset)?;
            out.add_term(w, z, field.q_pow(e) * coeff);
        }
        Ok(out)
    }
}

fn shift_error(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { position, message } => Error::Parse {
            position: position + by,
            message,
        },
        other => other,
    }
}

/// Pieces of `text` separated by `sep` outside parentheses, with offsets.
fn split_top_level(text: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push((start, &text[start..i]));
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push((start, &text[start..]));
    out
}

fn is_word_text(s: &str) -> bool {
    s.chars().any(|c| matches!(c, 'x' | 'y' | 'z' | 'Z'))
        && s.chars().all(|c| matches!(c, 'x' | 'y' | 'z' | 'Z' | '^' | '-' | '0'..='9'))
}

/// Splits `coeff * word` at the last top-level `*` whose right side is a word.
fn split_coefficient(term: &str) -> Option<(&str, &str, usize)> {
    let star = split_top_level(term, '*').last().map(|(at, _)| *at)?;
    if star == 0 {
        return None;
    }
    let word = term[star..].trim();
    is_word_text(word).then(|| {
        let at = star + term[star..].len() - term[star..].trim_start().len();
        (&term[..star - 1], word, at)
    })
}

/// Normalizes a monomial over `x, y, z, Z = z^{-1}` to `q^e w z^j`.
fn parse_monomial(text: &str, offset: usize) -> Result<(Word, i64, i64)> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut letters = Vec::new();
    let mut z = 0i64;
    let mut e = 0i64;
    let mut i = 0;
    let err = |pos: usize, message: &str| Error::Parse {
        position: offset + pos,
        message: message.into(),
    };
    while i < chars.len() {
        let (pos, ch) = chars[i];
        i += 1;
        let mut power = 1i64;
        if i < chars.len() && chars[i].1 == '^' {
            let start = i + 1;
            let mut end = start;
            if end < chars.len() && chars[end].1 == '-' {
                end += 1;
            }
            while end < chars.len() && chars[end].1.is_ascii_digit() {
                end += 1;
            }
            let lit: String = chars[start..end].iter().map(|(_, c)| *c).collect();
            power = lit
                .parse()
                .map_err(|_| err(chars[i].0, "expected a signed integer after '^'"))?;
            i = end;
        }
        match ch {
            'x' | 'y' => {
                let l = if ch == 'x' { Letter::X } else { Letter::Y };
                if power < 0 {
                    return Err(err(pos, "x and y only take nonnegative powers"));
                }
                let sign = if l == Letter::X { 1 } else { -1 };
                e += sign * 2 * z * power;
                letters.extend(std::iter::repeat_n(l, power as usize));
            }
            'z' => z += power,
            'Z' => z -= power,
            _ => return Err(err(pos, "expected one of x, y, z, Z")),
        }
    }
    Ok((Word::new(letters), z, e))
}

fn coefficient_literal(c: &Scalar) -> String {
    let lit = c.to_literal();
    if lit.chars().all(|ch| ch.is_ascii_digit()) {
        lit
    } else {
        format!("({lit})")
    }
}

fn monomial_literal(w: &Word, z: i64) -> String {
    let mut s = if w.is_empty() { String::new() } else { w.to_string() };
    match z {
        0 => {}
        1 => s.push('z'),
        k => s.push_str(&format!("z^{k}")),
    }
    s
}

impl fmt::Display for AlgebraElement {
    /// Terms in key order, e.g. `(-1) * x^3y + 3 * x^2z^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((w, z), c)| {
                let mono = monomial_literal(w, *z);
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => coefficient_literal(c),
                    (false, true) => mono,
                    (false, false) => format!("{} * {mono}", coefficient_literal(c)),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
