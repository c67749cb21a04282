//! Text form of Hopf elements and tensors.
//!
//! Monomials are `*`-joined factors `b[word]` or `a[word]`, each with an
//! optional power `^k`; `b[e]` is the unit. An element is a signed sum of
//! monomials with optional rational coefficients, e.g.
//! `-a[x0x1] + b[x0x1]*a[e] - 2*b[x0]*b[x1]*a[e]`. A tensor term is
//! `[q*]left ⊗ right` with `1` for a unit leg.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};

use super::algebra::{CoordinateMap, HopfElement, HopfMonomial, Kind, TensorSum};
use crate::coeff::{self, Coeff};
use crate::error::{Error, Result};
use crate::word::Word;

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl fmt::Display for CoordinateMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.kind, self.word)
    }
}

impl fmt::Display for HopfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        for (i, (h, k)) in self.factors().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{h}")?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

fn write_sign(f: &mut fmt::Formatter<'_>, first: bool, negative: bool) -> fmt::Result {
    match (first, negative) {
        (true, true) => f.write_str("-"),
        (true, false) => Ok(()),
        (false, true) => f.write_str(" - "),
        (false, false) => f.write_str(" + "),
    }
}

impl fmt::Display for HopfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, k)) in self.terms().enumerate() {
            write_sign(f, i == 0, k.is_negative())?;
            let mag = k.abs();
            if m.is_unit() {
                f.write_str(&coeff::format(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", coeff::format(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for TensorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (l, r, k)) in self.terms().enumerate() {
            write_sign(f, i == 0, k.is_negative())?;
            let mag = k.abs();
            if !mag.is_one() {
                write!(f, "{}*", coeff::format(&mag))?;
            }
            write!(f, "{l} ⊗ {r}")?;
        }
        Ok(())
    }
}

/// Parses a Hopf element in the text form above.
pub fn parse_element(text: &str) -> Result<HopfElement> {
    if text.trim() == "0" {
        return Ok(HopfElement::zero());
    }
    let mut p = Parser::new(text);
    let mut out = HopfElement::zero();
    p.terms(|p, k| {
        let m = p.monomial_after_coeff()?;
        out.add_term(m, k);
        Ok(())
    })?;
    Ok(out)
}

/// Accepts `a[x0x1]` as well as the flag form `a:x0x1`; `e` is the empty word.
impl FromStr for CoordinateMap {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (kind, rest) = match text.split_at_checked(1) {
            Some(("a", rest)) => (Kind::A, rest),
            Some(("b", rest)) => (Kind::B, rest),
            _ => return Err(Error::parse(0, "expected `a` or `b`")),
        };
        let word_text = rest
            .strip_prefix(':')
            .or_else(|| rest.strip_prefix('[').and_then(|r| r.strip_suffix(']')))
            .ok_or_else(|| Error::parse(1, "expected `:word` or `[word]`"))?;
        let word: Word = word_text
            .trim()
            .parse()
            .map_err(|_| Error::parse(2, format!("bad word `{word_text}`")))?;
        Ok(CoordinateMap::new(kind, word))
    }
}

/// Parses a tensor sum such as `3*b[x1] ⊗ b[x1] + 1 ⊗ a[e]^2`.
pub fn parse_tensor(text: &str) -> Result<TensorSum> {
    if text.trim() == "0" {
        return Ok(TensorSum::zero());
    }
    let mut p = Parser::new(text);
    let mut out = TensorSum::zero();
    p.terms(|p, k| {
        let left = p.monomial_after_coeff()?;
        p.skip_ws();
        if !p.eat_str("⊗") && !p.eat_str("(x)") {
            return Err(Error::parse(p.pos, "expected `⊗`"));
        }
        p.skip_ws();
        let right = p.monomial()?;
        out.add_term(left, right, k);
        Ok(())
    })?;
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    /// Set when the last coefficient was not followed by `*`.
    bare_coeff: bool,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            pos: 0,
            bare_coeff: false,
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn terms(&mut self, mut each: impl FnMut(&mut Self, Coeff) -> Result<()>) -> Result<()> {
        self.skip_ws();
        if self.peek().is_none() {
            return Err(Error::parse(0, "empty expression"));
        }
        let mut first = true;
        while self.peek().is_some() {
            let negative = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                return Err(Error::parse(self.pos, "expected `+` or `-`"));
            };
            first = false;
            self.skip_ws();
            let k = self.coefficient()?;
            each(self, if negative { -k } else { k })?;
            self.skip_ws();
        }
        Ok(())
    }

    /// Optional leading rational. A rational not followed by `*` stands for
    /// itself times the unit.
    fn coefficient(&mut self) -> Result<Coeff> {
        self.bare_coeff = false;
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(Coeff::one());
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '/') {
            self.pos += 1;
        }
        let lit = &self.src[start..self.pos];
        let k = coeff::parse(lit).map_err(|_| Error::parse(start, format!("bad rational `{lit}`")))?;
        self.skip_ws();
        if self.eat('*') {
            self.skip_ws();
        } else {
            self.bare_coeff = true;
        }
        Ok(k)
    }

    fn monomial_after_coeff(&mut self) -> Result<HopfMonomial> {
        if self.bare_coeff {
            return Ok(HopfMonomial::unit());
        }
        self.monomial()
    }

    fn monomial(&mut self) -> Result<HopfMonomial> {
        if self.eat('1') {
            return Ok(HopfMonomial::unit());
        }
        let mut factors = vec![self.factor()?];
        loop {
            let save = self.pos;
            self.skip_ws();
            if self.eat('*') {
                self.skip_ws();
                factors.push(self.factor()?);
            } else {
                self.pos = save;
                break;
            }
        }
        Ok(HopfMonomial::from_factors(factors))
    }

    fn factor(&mut self) -> Result<(CoordinateMap, u32)> {
        let start = self.pos;
        let kind = if self.eat('a') {
            Kind::A
        } else if self.eat('b') {
            Kind::B
        } else {
            return Err(Error::parse(start, "expected `a[..]` or `b[..]`"));
        };
        if !self.eat('[') {
            return Err(Error::parse(self.pos, "expected `[`"));
        }
        let close = self
            .rest()
            .find(']')
            .ok_or_else(|| Error::parse(self.pos, "missing `]`"))?;
        let word_text = &self.rest()[..close];
        let word: Word = word_text
            .trim()
            .parse()
            .map_err(|_| Error::parse(self.pos, format!("bad word `{word_text}`")))?;
        self.pos += close + 1;
        let mut power = 1;
        if self.eat('^') {
            let ds = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            power = self.src[ds..self.pos]
                .parse()
                .map_err(|_| Error::parse(ds, "expected exponent"))?;
        }
        Ok((CoordinateMap::new(kind, word), power))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::int;

    #[test]
    fn element_round_trip() {
        let text = "-a[x0] + b[x0]*a[e] - b[x1]*a[e]^2 + a[e]*a[x1]";
        let e = parse_element(text).unwrap();
        assert_eq!(e.num_terms(), 4);
        assert_eq!(e.to_string(), text);
        let shuffled = parse_element("a[x1]*a[e] - a[e]*a[e]*b[x1] + a[e]*b[x0] - a[x0]").unwrap();
        assert_eq!(shuffled, e);
    }

    #[test]
    fn element_constants_and_units() {
        let e = parse_element("2 - 3*b[e] + 1/2*b[x1]^2").unwrap();
        assert_eq!(e.constant_term(), int(-1));
        assert_eq!(e.to_string(), "-1 + 1/2*b[x1]^2");
        assert_eq!(parse_element("1").unwrap(), HopfElement::one());
        assert_eq!(HopfElement::zero().to_string(), "0");
    }

    #[test]
    fn element_errors() {
        assert!(parse_element("").is_err());
        assert!(parse_element("c[x0]").is_err());
        assert!(parse_element("b[x2]").is_err());
        assert!(parse_element("b[x0] b[x1]").is_err());
        assert!(parse_element("b[x0").is_err());
    }

    #[test]
    fn coordinate_forms() {
        let h: CoordinateMap = "a:x0x1".parse().unwrap();
        assert_eq!(h, "a[x0x1]".parse().unwrap());
        assert_eq!(h.to_string(), "a[x0x1]");
        assert!("b:e".parse::<CoordinateMap>().unwrap().is_unit());
        assert!("c:x0".parse::<CoordinateMap>().is_err());
        assert!("a[x0".parse::<CoordinateMap>().is_err());
    }

    #[test]
    fn tensor_round_trip() {
        let text = "6*b[x1x1] ⊗ b[x1] + 4*b[x1] ⊗ b[x1x1] + 3*b[x1] ⊗ b[x1]^2";
        let t = parse_tensor(text).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(parse_tensor(&t.to_string()).unwrap(), t);
        let u = parse_tensor("1 ⊗ a[e] + a[e] (x) 1 - 2 ⊗ 1").unwrap();
        assert_eq!(u.to_string(), "-2*1 ⊗ 1 + 1 ⊗ a[e] + a[e] ⊗ 1");
        assert!(parse_tensor("b[x1] b[x1]").is_err());
    }
}
