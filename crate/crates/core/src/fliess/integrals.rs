use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use super::signal::PiecewiseConstantSignal;
use crate::coeff::Coeff;
use crate::error::Result;
use crate::group::SeriesPair;
use crate::series::Series;
use crate::word::{Letter, Word};

/// Running values of `E_η[u](t, t_0)` for a suffix-closed set of words.
///
/// On a segment where `u ≡ v`, `E_{x_i η}(t_a + s) = E_{x_i η}(t_a) + u_i ∫_0^s E_η`
/// with `u_0 = 1` and `u_1 = v`, so every `E_η` is a polynomial in the
/// elapsed time `s` and the update is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IteratedIntegralState {
    time: Coeff,
    /// Shorter words first, so suffixes precede the words built on them.
    words: Vec<Word>,
    values: BTreeMap<Word, Coeff>,
}

impl IteratedIntegralState {
    /// State at `t0` for the given words and all their suffixes.
    pub fn new<'a>(words: impl IntoIterator<Item = &'a Word>, t0: Coeff) -> Self {
        let mut closed = BTreeSet::new();
        closed.insert(Word::empty());
        for w in words {
            let mut rest = w.clone();
            while let Some((_, tail)) = rest.split_first() {
                closed.insert(rest);
                rest = tail;
            }
        }
        // canonical word order is length-lex, so suffixes come first
        let words: Vec<Word> = closed.into_iter().collect();
        let values = words
            .iter()
            .map(|w| (w.clone(), if w.is_empty() { Coeff::one() } else { Coeff::zero() }))
            .collect();
        IteratedIntegralState { time: t0, words, values }
    }

    pub fn time(&self) -> &Coeff {
        &self.time
    }

    /// `E_η` at the current time, if `η` is tracked.
    pub fn value(&self, w: &Word) -> Option<&Coeff> {
        self.values.get(w)
    }

    /// Advances by `h` with the input held at `v`.
    pub fn advance(&mut self, v: &Coeff, h: &Coeff) {
        let mut polys: BTreeMap<&Word, Vec<Coeff>> = BTreeMap::new();
        for w in &self.words {
            let poly = match w.split_first() {
                None => vec![Coeff::one()],
                Some((l, rest)) => {
                    let inner = &polys[&rest];
                    let mut p = Vec::with_capacity(inner.len() + 1);
                    p.push(self.values[w].clone());
                    for (k, a) in inner.iter().enumerate() {
                        let mut c = a / Coeff::from_integer((k as i64 + 1).into());
                        if l == Letter::X1 {
                            c *= v;
                        }
                        p.push(c);
                    }
                    p
                }
            };
            polys.insert(w, poly);
        }
        for (w, p) in polys {
            let mut acc = Coeff::zero();
            for a in p.iter().rev() {
                acc = acc * h + a;
            }
            self.values.insert(w.clone(), acc);
        }
        self.time += h;
    }

    /// Advances along `u` from the current time to `t`.
    pub fn advance_along(&mut self, u: &PiecewiseConstantSignal, t: &Coeff) {
        for (a, b, v) in u.segments() {
            if &self.time >= t {
                break;
            }
            if b <= &self.time {
                continue;
            }
            let lo = if a > &self.time { a.clone() } else { self.time.clone() };
            let hi = if b < t { b.clone() } else { t.clone() };
            if hi > lo {
                self.advance(v, &(hi - lo));
            }
        }
    }

    /// `Σ (c, η) E_η` over the support of `c`.
    pub fn series_value(&self, c: &Series) -> Coeff {
        let mut out = Coeff::zero();
        for (w, k) in c.terms() {
            out += k * self.values.get(w).expect("series support is tracked");
        }
        out
    }
}

/// `E_η[u](t, t_0)`
pub fn eval_word(eta: &Word, u: &PiecewiseConstantSignal, t: &Coeff) -> Result<Coeff> {
    u.check_domain(t)?;
    let mut st = IteratedIntegralState::new([eta], u.start().clone());
    st.advance_along(u, t);
    Ok(st.value(eta).cloned().expect("tracked"))
}

/// `F_c[u](t)`, summed over the truncated support.
pub fn eval_series(c: &Series, u: &PiecewiseConstantSignal, t: &Coeff) -> Result<Coeff> {
    u.check_domain(t)?;
    let mut st = IteratedIntegralState::new(c.support(), u.start().clone());
    st.advance_along(u, t);
    Ok(st.series_value(c))
}

/// `F_{c_δ}[u](t) = u(t) F_{c_L}[u](t) + F_{c_R}[u](t)`
pub fn eval_pair(c: &SeriesPair, u: &PiecewiseConstantSignal, t: &Coeff) -> Result<Coeff> {
    Ok(u.value_at(t)? * eval_series(c.left(), u, t)? + eval_series(c.right(), u, t)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, ratio};
    use crate::group::parse_pair;
    use crate::series::{parse_series, shuffle_words};
    use proptest::prelude::*;

    fn constant(v: Coeff, end: Coeff) -> PiecewiseConstantSignal {
        PiecewiseConstantSignal::constant(v, int(0), end).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn word_examples() {
        let u = constant(int(2), int(1));
        assert_eq!(eval_word(&Word::empty(), &u, &ratio(1, 3)).unwrap(), int(1));
        assert_eq!(eval_word(&w("x0"), &u, &ratio(1, 3)).unwrap(), ratio(1, 3));
        assert_eq!(eval_word(&w("x1"), &u, &int(1)).unwrap(), int(2));
        assert_eq!(eval_word(&w("x1"), &u, &int(2)).unwrap_err().code(), "outside-domain");
        // E_{x1 x0}(t) = ∫ u(τ) τ dτ = t² for u ≡ 2
        assert_eq!(eval_word(&w("x1x0"), &u, &ratio(1, 2)).unwrap(), ratio(1, 4));
    }

    #[test]
    fn series_examples() {
        let t = ratio(3, 4);
        let u = constant(int(1), int(1));
        assert_eq!(eval_series(&Series::one(3), &u, &t).unwrap(), int(1));
        assert_eq!(eval_series(&parse_series("x0 + x1", 3).unwrap(), &u, &t).unwrap(), ratio(3, 2));
        assert_eq!(eval_series(&parse_series("x1x1", 3).unwrap(), &u, &t).unwrap(), ratio(9, 32));
    }

    #[test]
    fn pair_examples() {
        let u = PiecewiseConstantSignal::new(vec![int(0), ratio(1, 2), int(1)], vec![int(3), int(-1)]).unwrap();
        let t = ratio(1, 2);
        assert_eq!(eval_pair(&SeriesPair::identity(3), &u, &t).unwrap(), int(-1));
        let c = parse_series("x1 + x0", 3).unwrap();
        let fc = eval_series(&c, &u, &t).unwrap();
        assert_eq!(eval_pair(&SeriesPair::unit_left(c.clone()), &u, &t).unwrap(), int(-1) + &fc);
        let zero_left = parse_pair("(0, x1 + x0)", 3).unwrap();
        assert_eq!(eval_pair(&zero_left, &u, &t).unwrap(), fc);
    }

    #[test]
    fn piecewise_input() {
        let u = PiecewiseConstantSignal::new(vec![int(0), int(1), int(2)], vec![int(1), int(-1)]).unwrap();
        assert_eq!(eval_word(&w("x1"), &u, &int(2)).unwrap(), int(0));
        // E_{x1x1}(2) = (E_{x1}(2))²/2 = 0
        assert_eq!(eval_word(&w("x1x1"), &u, &int(2)).unwrap(), int(0));
        // E_{x0x1}(2) = ∫_0^2 E_{x1} = 1/2 + 1/2
        assert_eq!(eval_word(&w("x0x1"), &u, &int(2)).unwrap(), int(1));
    }

    fn signal() -> impl Strategy<Value = PiecewiseConstantSignal> {
        proptest::collection::vec((1i64..=4, -4i64..=4), 1..4).prop_map(|segs| {
            let mut bps = vec![int(0)];
            let mut vals = vec![];
            for (len, v) in segs {
                let last = bps.last().unwrap().clone();
                bps.push(last + ratio(len, 4));
                vals.push(ratio(v, 2));
            }
            PiecewiseConstantSignal::new(bps, vals).unwrap()
        })
    }

    fn word(max: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0usize..2, 0..=max)
            .prop_map(|v| Word::from_letters(v.into_iter().map(|i| Letter::ALL[i])))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn shuffle_multiplicativity(u in signal(), a in word(2), b in word(2)) {
            let t = u.end().clone();
            let lhs = eval_word(&a, &u, &t).unwrap() * eval_word(&b, &u, &t).unwrap();
            let mut rhs = Coeff::zero();
            for (x, m) in shuffle_words(&a, &b) {
                rhs += eval_word(&x, &u, &t).unwrap() * Coeff::from_integer((m as i64).into());
            }
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn additive_over_intervals(v in -4i64..=4, eta in word(5), cut in 1i64..8) {
            let v = ratio(v, 2);
            let whole = {
                let mut st = IteratedIntegralState::new([&eta], int(0));
                st.advance(&v, &int(1));
                st
            };
            let split = {
                let mut st = IteratedIntegralState::new([&eta], int(0));
                st.advance(&v, &ratio(cut, 8));
                st.advance(&v, &ratio(8 - cut, 8));
                st
            };
            prop_assert_eq!(whole.value(&eta), split.value(&eta));
            prop_assert_eq!(whole.time(), split.time());
        }
    }
}
