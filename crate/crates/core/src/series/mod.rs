//! Truncated noncommutative power series with exact rational coefficients.
//!
//! A [`Series`] stores the coefficients of every word up to its truncation
//! degree `N`. All products in this crate are computed exactly on words of
//! length `<= N`; longer words are discarded, never approximated.

mod shuffle;
mod text;

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

pub use shuffle::{shuffle_coefficient, shuffle_words, unshuffle, WordTensorSum};
pub use text::parse_series;

/// Order of a series: shortest supported word length, or infinity for zero.
///
/// The ultrametric distance between `c` and `d` is `sigma^ord(c - d)`; larger
/// orders mean closer series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(usize),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<usize> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }

    /// Saturating sum, `inf + k = inf`.
    pub fn plus(self, k: Order) -> Order {
        match (self, k) {
            (Order::Finite(a), Order::Finite(b)) => Order::Finite(a + b),
            _ => Order::Infinite,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    trunc: usize,
    terms: BTreeMap<Word, Coeff>,
}

impl Series {
    pub fn zero(trunc: usize) -> Self {
        Series {
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(k: Coeff, trunc: usize) -> Self {
        let mut s = Series::zero(trunc);
        s.add_term(Word::empty(), k);
        s
    }

    pub fn one(trunc: usize) -> Self {
        Series::constant(Coeff::one(), trunc)
    }

    /// `k · w`. Fails when `w` is longer than the truncation degree.
    pub fn monomial(w: Word, k: Coeff, trunc: usize) -> Result<Self> {
        Series::from_terms(trunc, [(w, k)])
    }

    /// Strict constructor: rejects words beyond `trunc`, collects like terms.
    pub fn from_terms(trunc: usize, terms: impl IntoIterator<Item = (Word, Coeff)>) -> Result<Self> {
        let mut s = Series::zero(trunc);
        for (w, k) in terms {
            if w.len() > trunc {
                return Err(Error::WordTooLong {
                    word: w.to_string(),
                    len: w.len(),
                    trunc,
                });
            }
            s.add_term(w, k);
        }
        Ok(s)
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Adds `k · w`, silently dropping words beyond the truncation degree.
    pub fn add_term(&mut self, w: Word, k: Coeff) {
        if w.len() > self.trunc || k.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(k);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += k;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `(c, w)`
    pub fn coeff(&self, w: &Word) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff(&Word::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_proper(&self) -> bool {
        !self.terms.contains_key(&Word::empty())
    }

    /// Terms in canonical word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coeff)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.terms.contains_key(w)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Re-truncates at `n`; raising the degree just relabels the bound.
    pub fn with_trunc(&self, n: usize) -> Series {
        Series {
            trunc: n,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() <= n)
                .map(|(w, k)| (w.clone(), k.clone()))
                .collect(),
        }
    }

    /// Shortest supported word length; [`Order::Infinite`] for the zero series.
    pub fn order(&self) -> Order {
        self.terms
            .keys()
            .map(Word::len)
            .min()
            .map_or(Order::Infinite, Order::Finite)
    }

    /// `c` minus its constant term.
    pub fn proper_part(&self) -> Series {
        let mut s = self.clone();
        s.terms.remove(&Word::empty());
        s
    }

    /// `x_i · c`, truncated.
    pub fn prefixed(&self, l: Letter) -> Series {
        Series {
            trunc: self.trunc,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() < self.trunc)
                .map(|(w, k)| (w.prepend(l), k.clone()))
                .collect(),
        }
    }

    /// `w · c`, truncated.
    pub fn prefixed_by(&self, prefix: &Word) -> Series {
        let mut out = Series::zero(self.trunc);
        for (w, k) in &self.terms {
            out.add_term(prefix.concat(w), k.clone());
        }
        out
    }

    /// The left quotient `x_i^{-1}(c)`: coefficient of `w` is `(c, x_i w)`.
    pub fn left_quotient(&self, l: Letter) -> Series {
        let mut out = Series::zero(self.trunc);
        for (w, k) in &self.terms {
            if let Some((first, rest)) = w.split_first() {
                if first == l {
                    out.terms.insert(rest, k.clone());
                }
            }
        }
        out
    }

    pub fn scale(&self, k: &Coeff) -> Series {
        if k.is_zero() {
            return Series::zero(self.trunc);
        }
        Series {
            trunc: self.trunc,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Series) -> Result<Series> {
        check_trunc(self, other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Series) -> Result<Series> {
        check_trunc(self, other)?;
        Ok(self - other)
    }

    /// `c = c_N + c_F`, with `c_N` the `x0^k` part.
    pub fn natural_forced_split(&self) -> (Series, Series) {
        let mut natural = Series::zero(self.trunc);
        let mut forced = Series::zero(self.trunc);
        for (w, k) in &self.terms {
            let target = if w.is_natural() { &mut natural } else { &mut forced };
            target.terms.insert(w.clone(), k.clone());
        }
        (natural, forced)
    }

    /// Shuffle product, truncated at the common degree.
    pub fn shuffle(&self, other: &Series) -> Result<Series> {
        check_trunc(self, other)?;
        Ok(shuffle::shuffle_series(self, other))
    }

    /// Shuffle inverse `(c,e)^{-1} sum_k (c')^k`, `c' = 1 - c/(c,e)`.
    pub fn shuffle_inverse(&self) -> Result<Series> {
        shuffle::shuffle_inverse(self)
    }
}

/// Exponent of the ultrametric distance: `ord(c - d)`.
pub fn distance_exponent(c: &Series, d: &Series) -> Result<Order> {
    Ok(c.checked_sub(d)?.order())
}

/// Coefficient-wise linear combination. An empty list yields the zero series
/// at degree 0.
pub fn linear_combine<'a>(pairs: impl IntoIterator<Item = (&'a Coeff, &'a Series)>) -> Result<Series> {
    let mut acc: Option<Series> = None;
    for (k, s) in pairs {
        match acc.as_mut() {
            None => acc = Some(s.scale(k)),
            Some(a) => {
                check_trunc(a, s)?;
                for (w, c) in &s.terms {
                    a.add_term(w.clone(), c * k);
                }
            }
        }
    }
    Ok(acc.unwrap_or_else(|| Series::zero(0)))
}

pub(crate) fn check_trunc(a: &Series, b: &Series) -> Result<()> {
    if a.trunc != b.trunc {
        return Err(Error::TruncationMismatch {
            left: a.trunc,
            right: b.trunc,
        });
    }
    Ok(())
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[N={}]({})", self.trunc, self)
    }
}

// Operator impls assume matching truncation degrees; mixing degrees is a bug
// in the caller, so they panic. Use the `checked_*` methods on user input.

impl AddAssign<&Series> for Series {
    fn add_assign(&mut self, rhs: &Series) {
        assert_eq!(self.trunc, rhs.trunc, "truncation mismatch in series addition");
        for (w, k) in &rhs.terms {
            self.add_term(w.clone(), k.clone());
        }
    }
}

impl SubAssign<&Series> for Series {
    fn sub_assign(&mut self, rhs: &Series) {
        assert_eq!(self.trunc, rhs.trunc, "truncation mismatch in series subtraction");
        for (w, k) in &rhs.terms {
            self.add_term(w.clone(), -k.clone());
        }
    }
}

impl Add<&Series> for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Series> for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Series {
    type Output = Series;
    fn add(mut self, rhs: Series) -> Series {
        self += &rhs;
        self
    }
}

impl Sub for Series {
    type Output = Series;
    fn sub(mut self, rhs: Series) -> Series {
        self -= &rhs;
        self
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            trunc: self.trunc,
            terms: self.terms.iter().map(|(w, k)| (w.clone(), -k)).collect(),
        }
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

impl Mul<&Coeff> for &Series {
    type Output = Series;
    fn mul(self, k: &Coeff) -> Series {
        self.scale(k)
    }
}
