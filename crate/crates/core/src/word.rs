//! Words over the two-letter alphabet `{x0, x1}`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A letter of the SISO alphabet. `X0` is the drift letter, `X1` the input letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X0,
    X1,
}

impl Letter {
    pub const ALL: [Letter; 2] = [Letter::X0, Letter::X1];

    pub fn index(self) -> usize {
        match self {
            Letter::X0 => 0,
            Letter::X1 => 1,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::X0 => f.write_str("x0"),
            Letter::X1 => f.write_str("x1"),
        }
    }
}

/// A finite sequence of letters. The empty word is written `e`.
///
/// Words are ordered length-lexicographically with `x0 < x1`, which is the
/// canonical order for every serialized form in this crate.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Word(letters.into_iter().collect())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    /// `x0^n`
    pub fn x0_pow(n: usize) -> Self {
        Word(vec![Letter::X0; n])
    }

    /// `x1^n`
    pub fn x1_pow(n: usize) -> Self {
        Word(vec![Letter::X1; n])
    }

    /// The linear word `x0^(r-1) x1`.
    pub fn linear(r: usize) -> Self {
        assert!(r >= 1, "relative degree starts at 1");
        let mut w = Self::x0_pow(r - 1);
        w.0.push(Letter::X1);
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, l: Letter) -> usize {
        self.0.iter().filter(|&&x| x == l).count()
    }

    pub fn count_x0(&self) -> usize {
        self.count(Letter::X0)
    }

    pub fn count_x1(&self) -> usize {
        self.count(Letter::X1)
    }

    /// Weight `2|w|_x0 + |w|_x1`, the degree of the coordinate map `b_w`.
    pub fn weight(&self) -> usize {
        2 * self.count_x0() + self.count_x1()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    /// Splits off the first letter.
    pub fn split_first(&self) -> Option<(Letter, Word)> {
        self.0
            .split_first()
            .map(|(&l, rest)| (l, Word(rest.to_vec())))
    }

    /// `l w`
    pub fn prepend(&self, l: Letter) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(l);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Number of leading `x0` letters.
    pub fn leading_x0(&self) -> usize {
        self.0.iter().take_while(|&&l| l == Letter::X0).count()
    }

    /// If `self = prefix · rest`, returns `rest`.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0.strip_prefix(prefix.0.as_slice()).map(|r| Word(r.to_vec()))
    }

    /// True when the word only contains `x0`.
    pub fn is_natural(&self) -> bool {
        self.0.iter().all(|&l| l == Letter::X0)
    }

    /// All words of length at most `max_len`, in canonical order.
    pub fn all_up_to(max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * 2);
            for w in &layer {
                for l in Letter::ALL {
                    let mut v = w.0.clone();
                    v.push(l);
                    next.push(Word(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses `e` or a juxtaposition of `x0` / `x1` tokens.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "e" {
            return Ok(Word::empty());
        }
        let bytes = s.as_bytes();
        if bytes.is_empty() {
            return Err(Error::parse(0, "empty word token"));
        }
        let mut letters = Vec::with_capacity(bytes.len() / 2);
        let mut i = 0;
        while i < bytes.len() {
            match (bytes[i], bytes.get(i + 1)) {
                (b'x', Some(b'0')) => letters.push(Letter::X0),
                (b'x', Some(b'1')) => letters.push(Letter::X1),
                _ => return Err(Error::parse(i, format!("bad letter in word `{s}`"))),
            }
            i += 2;
        }
        Ok(Word(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_length_lex() {
        let words: Vec<Word> = ["x1", "e", "x0x1", "x0", "x1x0", "x0x0"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let mut sorted = words.clone();
        sorted.sort();
        let shown: Vec<String> = sorted.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["e", "x0", "x1", "x0x0", "x0x1", "x1x0"]);
    }

    #[test]
    fn counts_and_weight() {
        let w: Word = "x0x1x1x0x1".parse().unwrap();
        assert_eq!(w.len(), 5);
        assert_eq!(w.count_x0() + w.count_x1(), w.len());
        assert_eq!(w.weight(), 2 * 2 + 3);
        assert_eq!(w.leading_x0(), 1);
    }

    #[test]
    fn enumeration_size() {
        assert_eq!(Word::all_up_to(3).len(), 1 + 2 + 4 + 8);
        assert_eq!(Word::all_up_to(0), vec![Word::empty()]);
    }

    #[test]
    fn rejects_garbage() {
        assert!("x2".parse::<Word>().is_err());
        assert!("x0x".parse::<Word>().is_err());
        assert!("".parse::<Word>().is_err());
    }

    #[test]
    fn linear_word() {
        assert_eq!(Word::linear(1).to_string(), "x1");
        assert_eq!(Word::linear(3).to_string(), "x0x0x1");
    }
}
