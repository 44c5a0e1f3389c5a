//! Noncommutative polynomials in named generators and a small expression
//! parser for relation strings such as `"xyxy-yxyx"` or `"(xy-yx)^3"`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::{Field, FieldElem};

/// A word in the generators, as generator indices read left to right.
pub type Word = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: FieldElem,
    pub word: Word,
}

/// A noncommutative polynomial: a finite linear combination of words.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NcPoly {
    terms: BTreeMap<Word, FieldElem>,
}

impl NcPoly {
    pub fn zero() -> NcPoly {
        NcPoly::default()
    }

    pub fn constant(c: FieldElem) -> NcPoly {
        NcPoly::monomial(c, Vec::new())
    }

    pub fn monomial(c: FieldElem, word: Word) -> NcPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(word, c);
        }
        NcPoly { terms }
    }

    pub fn generator(f: &Field, g: usize) -> NcPoly {
        NcPoly::monomial(f.one(), vec![g])
    }

    pub fn from_terms(f: &Field, terms: impl IntoIterator<Item = Term>) -> NcPoly {
        let mut p = NcPoly::zero();
        for t in terms {
            p.add_term(f, t.coeff, t.word);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, FieldElem)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn to_terms(&self) -> Vec<Term> {
        self.terms.iter().map(|(w, &c)| Term { coeff: c, word: w.clone() }).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.terms.keys().flat_map(|w| w.iter().copied()).max()
    }

    pub fn add_term(&mut self, f: &Field, c: FieldElem, word: Word) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(word).or_insert(FieldElem::ZERO);
        *entry = f.add(*entry, c);
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, f: &Field, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(f, c, w.clone());
        }
        out
    }

    pub fn scale(&self, f: &Field, c: FieldElem) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, d) in self.terms() {
            out.add_term(f, f.mul(c, d), w.clone());
        }
        out
    }

    pub fn sub(&self, f: &Field, other: &NcPoly) -> NcPoly {
        self.add(f, &other.scale(f, f.neg(f.one())))
    }

    pub fn mul(&self, f: &Field, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(f, f.mul(a, b), w);
            }
        }
        out
    }

    pub fn pow(&self, f: &Field, k: u32) -> NcPoly {
        (0..k).fold(NcPoly::constant(f.one()), |acc, _| acc.mul(f, self))
    }

    /// Commutator `[self, other] = self·other − other·self`.
    pub fn commutator(&self, f: &Field, other: &NcPoly) -> NcPoly {
        self.mul(f, other).sub(f, &other.mul(f, self))
    }

    /// All coefficients lie in the prime subfield of `f`.
    pub fn in_prime_subfield(&self, f: &Field) -> bool {
        self.terms.values().all(|&c| f.is_prime_subfield(c))
    }

    pub fn display(&self, f: &Field, generators: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (w, c) in self.terms.iter().rev() {
            let word: String = w.iter().map(|&g| generators[g].as_str()).collect();
            let coeff = f.display(*c);
            parts.push(match (coeff.as_str(), word.is_empty()) {
                (_, true) => coeff,
                ("1", false) => word,
                (_, false) => format!("{coeff}{word}"),
            });
        }
        parts.join(" + ")
    }
}

/// Error from [`parse_poly`], with the byte offset of the problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.offset, self.message)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: &'a Field,
    generators: &'a [String],
}

/// Parses a polynomial expression in the given generators.
///
/// Grammar: sums and differences of products; factors are integers,
/// generator names (longest match), parenthesised expressions, each
/// optionally raised to a nonnegative integer power with `^`. Products may
/// be written by juxtaposition or with `*`. Whitespace is ignored.
pub fn parse_poly(expr: &str, generators: &[String], field: &Field) -> Result<NcPoly, ParseError> {
    let cleaned: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { src: cleaned.as_bytes(), pos: 0, field, generators };
    let poly = p.expr()?;
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError { offset: self.pos, message: msg.to_string() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<NcPoly, ParseError> {
        let f = self.field;
        let mut acc = NcPoly::zero();
        let mut sign = f.one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = f.neg(f.one());
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            let t = self.product()?;
            acc = acc.add(f, &t.scale(f, sign));
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = f.one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = f.neg(f.one());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<NcPoly, ParseError> {
        let f = self.field;
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(f, &self.factor()?);
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() || c == b'_' => {
                    acc = acc.mul(f, &self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<NcPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.integer()?;
            let k = u32::try_from(k).map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(self.field, k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| ParseError { offset: start, message: "integer out of range".into() })
    }

    fn atom(&mut self) -> Result<NcPoly, ParseError> {
        let f = self.field;
        match self.peek() {
            None => Err(self.err("unexpected end of expression")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(NcPoly::constant(f.from_int((v % f.p() as u64) as i64)))
            }
            Some(_) => {
                let rest = &self.src[self.pos..];
                let best = self
                    .generators
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| !g.is_empty() && rest.starts_with(g.as_bytes()))
                    .max_by_key(|(_, g)| g.len());
                match best {
                    Some((i, g)) => {
                        self.pos += g.len();
                        Ok(NcPoly::generator(f, i))
                    }
                    None => Err(self.err("unknown generator")),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn parses_dihedral_relation() {
        let f = Field::prime(2).unwrap();
        let p = parse_poly("xyxy-yxyx", &gens(), &f).unwrap();
        let terms: Vec<_> = p.terms().map(|(w, _)| w.clone()).collect();
        assert_eq!(terms, vec![vec![0, 1, 0, 1], vec![1, 0, 1, 0]]);
    }

    #[test]
    fn parses_powers_and_parentheses() {
        let f = Field::prime(3).unwrap();
        let p = parse_poly("(xy-yx)^2", &gens(), &f).unwrap();
        // xyxy - xyyx - yxxy + yxyx
        assert_eq!(p.terms().count(), 4);
        let q = parse_poly("x^3-(xy-yx)", &gens(), &f).unwrap();
        assert_eq!(q.max_degree(), 3);
        let c = parse_poly("2x*y + 4", &gens(), &f).unwrap();
        assert_eq!(c.terms().count(), 2);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let f = Field::prime(2).unwrap();
        let e = parse_poly("x+z", &gens(), &f).unwrap_err();
        assert_eq!(e.offset, 2);
        assert!(parse_poly("(x+y", &gens(), &f).is_err());
        assert!(parse_poly("x^", &gens(), &f).is_err());
    }
}
