//! Text and JSON forms of [`Series`].
//!
//! Text grammar: a signed sum of terms `[+|-] [q '*'] word`, where `q` is an
//! integer or `p/q` literal and `word` is `e` or a juxtaposition of `x0`/`x1`.
//! A bare rational is a constant term. Example: `1 - x1 + 3*x1x1`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Series;
use crate::coeff::{self, Coeff};
use crate::error::{Error, Result};
use crate::word::Word;

/// Parses the text grammar at truncation degree `trunc`.
pub fn parse_series(text: &str, trunc: usize) -> Result<Series> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut out = Series::zero(trunc);
    p.skip_ws();
    if p.eof() {
        return Err(Error::parse(0, "empty series"));
    }
    let mut first = true;
    while !p.eof() {
        let sign_pos = p.pos;
        let negative = match p.peek() {
            Some(b'+') => {
                p.pos += 1;
                false
            }
            Some(b'-') => {
                p.pos += 1;
                true
            }
            _ if first => false,
            _ => return Err(Error::parse(sign_pos, "expected `+` or `-`")),
        };
        first = false;
        p.skip_ws();
        let (k, w) = p.term()?;
        if w.len() > trunc {
            return Err(Error::WordTooLong {
                word: w.to_string(),
                len: w.len(),
                trunc,
            });
        }
        out.add_term(w, if negative { -k } else { k });
        p.skip_ws();
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn eof(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Coeff, Word)> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let k = self.rational()?;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                    Ok((k, self.word()?))
                } else {
                    Ok((k, Word::empty()))
                }
            }
            Some(b'x' | b'e') => Ok((Coeff::one(), self.word()?)),
            _ => Err(Error::parse(self.pos, "expected coefficient or word")),
        }
    }

    fn rational(&mut self) -> Result<Coeff> {
        let start = self.pos;
        self.digits();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den_start = self.pos;
            self.digits();
            if self.pos == den_start {
                return Err(Error::parse(den_start, "missing denominator"));
            }
        }
        let lit = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        coeff::parse(lit).map_err(|_| Error::parse(start, format!("bad rational `{lit}`")))
    }

    fn digits(&mut self) {
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
    }

    fn word(&mut self) -> Result<Word> {
        let start = self.pos;
        if self.peek() == Some(b'e') {
            self.pos += 1;
            return Ok(Word::empty());
        }
        while self.peek() == Some(b'x') {
            match self.src.get(self.pos + 1) {
                Some(b'0' | b'1') => self.pos += 2,
                _ => return Err(Error::parse(self.pos, "expected `x0` or `x1`")),
            }
        }
        if self.pos == start {
            return Err(Error::parse(start, "expected word"));
        }
        let tok = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii letters");
        tok.parse()
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, k)) in self.terms.iter().enumerate() {
            let negative = k.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = k.abs();
            if w.is_empty() {
                f.write_str(&coeff::format(&mag))?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{}*{w}", coeff::format(&mag))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: String,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct SeriesJson {
    trunc: usize,
    terms: Vec<TermJson>,
}

impl From<&Series> for SeriesJson {
    fn from(s: &Series) -> Self {
        SeriesJson {
            trunc: s.trunc,
            terms: s
                .terms
                .iter()
                .map(|(w, k)| TermJson {
                    word: w.to_string(),
                    coeff: coeff::format_fraction(k),
                })
                .collect(),
        }
    }
}

impl TryFrom<SeriesJson> for Series {
    type Error = Error;

    fn try_from(j: SeriesJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            let k = coeff::parse(&t.coeff)?;
            if !k.is_zero() {
                terms.push((t.word.parse()?, k));
            }
        }
        Series::from_terms(j.trunc, terms)
    }
}

impl Serialize for Series {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SeriesJson::deserialize(d)?;
        Series::try_from(j).map_err(serde::de::Error::custom)
    }
}
