use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::Series;
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Shuffle of two words, as `(word, multiplicity)` pairs in canonical order.
///
/// Uses `(x_i u) ш (x_j v) = x_i (u ш x_j v) + x_j (x_i u ш v)` with the empty
/// word as unit.
pub fn shuffle_words(u: &Word, v: &Word) -> Vec<(Word, u64)> {
    let mut acc = BTreeMap::new();
    let mut buf = Vec::with_capacity(u.len() + v.len());
    interleave(u.letters(), v.letters(), &mut buf, &mut acc);
    acc.into_iter().collect()
}

fn interleave(u: &[Letter], v: &[Letter], buf: &mut Vec<Letter>, acc: &mut BTreeMap<Word, u64>) {
    match (u.split_first(), v.split_first()) {
        (None, _) | (_, None) => {
            let mut w = buf.clone();
            w.extend_from_slice(u);
            w.extend_from_slice(v);
            *acc.entry(Word::from(w)).or_insert(0) += 1;
        }
        (Some((&a, u_rest)), Some((&b, v_rest))) => {
            buf.push(a);
            interleave(u_rest, v, buf, acc);
            buf.pop();
            buf.push(b);
            interleave(u, v_rest, buf, acc);
            buf.pop();
        }
    }
}

pub(super) fn shuffle_series(p: &Series, q: &Series) -> Series {
    let n = p.trunc;
    let mut out = Series::zero(n);
    for (u, a) in &p.terms {
        for (v, b) in &q.terms {
            if u.len() + v.len() > n {
                continue;
            }
            let ab = a * b;
            if u.is_empty() || v.is_empty() {
                out.add_term(u.concat(v), ab);
                continue;
            }
            for (w, m) in shuffle_words(u, v) {
                out.add_term(w, &ab * Coeff::from_integer(BigInt::from(m)));
            }
        }
    }
    out
}

pub(super) fn shuffle_inverse(c: &Series) -> Result<Series> {
    let c0 = c.constant_term();
    if c0.is_zero() {
        return Err(Error::NoShuffleInverse);
    }
    let n = c.trunc;
    let one = Series::one(n);
    let inv_c0 = c0.recip();
    // c' = 1 - c / (c,e) is proper, so its k-th shuffle power has order >= k.
    let c_prime = &one - &c.scale(&inv_c0);
    let mut power = one.clone();
    let mut sum = one;
    for _ in 0..n {
        power = shuffle_series(&power, &c_prime);
        if power.is_zero() {
            break;
        }
        sum += &power;
    }
    Ok(sum.scale(&inv_c0))
}

/// A finite sum of word pairs with positive integer multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordTensorSum {
    terms: BTreeMap<(Word, Word), u64>,
}

impl WordTensorSum {
    pub fn multiplicity(&self, left: &Word, right: &Word) -> u64 {
        self.terms
            .get(&(left.clone(), right.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Word, u64)> {
        self.terms.iter().map(|((l, r), &m)| (l, r, m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for WordTensorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, ((l, r), m)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *m != 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "{l} ⊗ {r}")?;
        }
        Ok(())
    }
}

/// The unshuffle coproduct, `sh*(x_i w) = (x_i ⊗ 1 + 1 ⊗ x_i) sh*(w)`.
pub fn unshuffle(w: &Word) -> WordTensorSum {
    let mut terms: BTreeMap<(Word, Word), u64> = BTreeMap::new();
    terms.insert((Word::empty(), Word::empty()), 1);
    for &l in w.letters().iter().rev() {
        let mut next = BTreeMap::new();
        for ((a, b), m) in terms {
            *next.entry((a.prepend(l), b.clone())).or_insert(0) += m;
            *next.entry((a, b.prepend(l))).or_insert(0) += m;
        }
        terms = next;
    }
    WordTensorSum { terms }
}

/// Coefficient of `w` in `u ш v`, computed from the word recursion.
pub fn shuffle_coefficient(u: &Word, v: &Word, w: &Word) -> u64 {
    if u.len() + v.len() != w.len() {
        return 0;
    }
    shuffle_words(u, v)
        .into_iter()
        .find(|(x, _)| x == w)
        .map_or(0, |(_, m)| m)
}
