//! Relative degree and feedback linearization through the group action.
//!
//! A series has relative degree `r` when its forced part `c_F` (the words
//! containing `x1`) is supported in `x0^{r-1} X*` for the largest such `r`,
//! and the linear word `x0^{r-1} x1` is in the support. Then
//! `c = c_N + K x0^{r-1} x1 + x0^{r-1} e` with `e` proper and `x1 ∉ supp(e)`,
//! and `c` lies on the orbit of `c_N + x0^{r-1} x1`.
//!
//! On a truncated series these notions describe the truncation, so they are
//! only meaningful when `r <= N`.

use std::fmt;

use serde::Serialize;

use crate::coeff::{self, Coeff};
use crate::error::{Error, Result};
use crate::group::{group_inverse_fixed_point, mixed_compose, SeriesPair};
use crate::series::Series;
use crate::word::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum RelativeDegree {
    Defined { r: usize },
    /// `c_F ⊆ x0^{r-1} X*` at most, but `x0^{r-1} x1` is missing.
    MissingLinearWord { r: usize },
    /// The forced part is zero, so every `r` fits and none is chosen.
    NoForcedPart,
}

impl RelativeDegree {
    pub fn value(self) -> Option<usize> {
        match self {
            RelativeDegree::Defined { r } => Some(r),
            _ => None,
        }
    }

    pub fn diagnostic(self) -> String {
        match self {
            RelativeDegree::Defined { r } => format!("relative degree {r}"),
            RelativeDegree::MissingLinearWord { r } => {
                format!("linear word {} not in support", Word::linear(r))
            }
            RelativeDegree::NoForcedPart => "forced part is zero".to_string(),
        }
    }
}

impl fmt::Display for RelativeDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "undefined ({})", self.diagnostic()),
        }
    }
}

pub fn relative_degree(c: &Series) -> RelativeDegree {
    let (_, forced) = c.natural_forced_split();
    let Some(lead) = forced.support().map(Word::leading_x0).min() else {
        return RelativeDegree::NoForcedPart;
    };
    let r = lead + 1;
    if c.contains(&Word::linear(r)) {
        RelativeDegree::Defined { r }
    } else {
        RelativeDegree::MissingLinearWord { r }
    }
}

/// `c = c_N + K x0^{r-1} x1 + x0^{r-1} e`
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelDegreeDecomposition {
    pub r: usize,
    #[serde(serialize_with = "ser_coeff")]
    pub k: Coeff,
    pub natural: Series,
    pub e: Series,
}

fn ser_coeff<S: serde::Serializer>(k: &Coeff, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&coeff::format_fraction(k))
}

impl RelDegreeDecomposition {
    pub fn reassemble(&self) -> Series {
        let n = self.natural.trunc();
        let prefix = Word::x0_pow(self.r - 1);
        let mut out = self.natural.clone();
        out.add_term(Word::linear(self.r), self.k.clone());
        out += &self.e.prefixed_by(&prefix);
        out.with_trunc(n)
    }

    /// `c_N + x0^{r-1} x1`
    pub fn normal_form(&self) -> Series {
        let mut out = self.natural.clone();
        out.add_term(Word::linear(self.r), num_traits::One::one());
        out
    }

    /// `e = x0 e0 + x1 e1`
    pub fn split_e(&self) -> (Series, Series) {
        (self.e.left_quotient(Letter::X0), self.e.left_quotient(Letter::X1))
    }
}

pub fn decompose(c: &Series) -> Result<RelDegreeDecomposition> {
    let rd = relative_degree(c);
    let r = rd
        .value()
        .ok_or_else(|| Error::UndefinedRelativeDegree(rd.diagnostic()))?;
    let linear = Word::linear(r);
    let prefix = Word::x0_pow(r - 1);
    let (natural, forced) = c.natural_forced_split();
    let mut e = Series::zero(c.trunc());
    for (w, k) in forced.terms() {
        if *w != linear {
            let rest = w.strip_prefix(&prefix).expect("forced words share the x0 prefix");
            e.add_term(rest, k.clone());
        }
    }
    Ok(RelDegreeDecomposition {
        r,
        k: c.coeff(&linear),
        natural,
        e,
    })
}

/// `e_δ = (K + e1, e0)`, with `c ∘̃ e_δ^{-1} = c_N + x0^{r-1} x1`.
pub fn linearizing_element(c: &Series) -> Result<SeriesPair> {
    let d = decompose(c)?;
    let (e0, e1) = d.split_e();
    let mut left = e1;
    left.add_term(Word::empty(), d.k.clone());
    SeriesPair::new(left, e0)
}

/// Whether `c ∘̃ e^{-1}` is the normal form `c_N + x0^{r-1} x1` of `c`.
/// Series without a relative degree are on no such orbit.
pub fn orbit_check(c: &Series, e: &SeriesPair) -> Result<bool> {
    e.require_group()?;
    let Ok(d) = decompose(c) else {
        return Ok(false);
    };
    let inv = group_inverse_fixed_point(e)?;
    Ok(mixed_compose(c, &inv)? == d.normal_form())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, ratio};
    use crate::group::{group_compose, parse_pair};
    use crate::series::parse_series;
    use proptest::prelude::*;

    fn s(text: &str, n: usize) -> Series {
        parse_series(text, n).unwrap()
    }

    #[test]
    fn relative_degree_examples() {
        assert_eq!(relative_degree(&s("x1 + x1x1", 4)).value(), Some(1));
        assert_eq!(relative_degree(&s("x0x1", 4)).value(), Some(2));
        assert_eq!(relative_degree(&s("x1x1", 4)), RelativeDegree::MissingLinearWord { r: 1 });
        assert_eq!(relative_degree(&s("1 + x0", 4)), RelativeDegree::NoForcedPart);
        assert_eq!(relative_degree(&Series::zero(4)), RelativeDegree::NoForcedPart);
        assert_eq!(relative_degree(&s("2*x0x0x1 + x0x0x1x1 - x0", 4)).value(), Some(3));
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&s("x1 + x1x1", 4)).unwrap();
        assert_eq!((d.r, d.k.clone()), (1, int(1)));
        assert!(d.natural.is_zero());
        assert_eq!(d.e, s("x1x1", 4));
        assert_eq!(d.split_e(), (Series::zero(4), s("x1", 4)));

        let d = decompose(&s("3*x0x1", 4)).unwrap();
        assert_eq!((d.r, d.k.clone()), (2, int(3)));
        assert!(d.natural.is_zero() && d.e.is_zero());

        let c = s("1 + x0 + x1 + x1x0", 4);
        let d = decompose(&c).unwrap();
        assert_eq!(d.natural, s("1 + x0", 4));
        assert_eq!(d.e, s("x1x0", 4));
        assert_eq!(d.reassemble(), c);

        assert_eq!(decompose(&s("x1x1", 3)).unwrap_err().code(), "undefined-relative-degree");
    }

    #[test]
    fn linearization_example() {
        let c = s("x1 + x1x1", 6);
        let e = linearizing_element(&c).unwrap();
        assert_eq!(e, parse_pair("(1 + x1, 0)", 6).unwrap());
        let inv = group_inverse_fixed_point(&e).unwrap();
        assert_eq!(mixed_compose(&c, &inv).unwrap(), s("x1", 6));
        assert!(orbit_check(&c, &e).unwrap());
        assert!(orbit_check(&s("x1", 6), &SeriesPair::identity(6)).unwrap());
    }

    #[test]
    fn scalar_rescaling() {
        let c = s("5*x0x0x1", 4);
        let e = linearizing_element(&c).unwrap();
        assert_eq!(e, parse_pair("(5, 0)", 4).unwrap());
        assert_eq!(group_inverse_fixed_point(&e).unwrap(), parse_pair("(1/5, 0)", 4).unwrap());
    }

    #[test]
    fn missing_linear_word_is_off_every_orbit() {
        let c = s("x1x1 + x0", 4);
        for e in ["(1, 0)", "(1 + x1, x0)", "(2 - x0, 1)", "(1 + x1x1, x1)"] {
            assert!(!orbit_check(&c, &parse_pair(e, 4).unwrap()).unwrap(), "{e}");
        }
        assert_eq!(
            orbit_check(&c, &parse_pair("(x1, 0)", 4).unwrap()).unwrap_err(),
            Error::NotInGroup
        );
    }

    fn word(n: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0usize..2, 0..=n)
            .prop_map(|v| Word::from_letters(v.into_iter().map(|i| Letter::ALL[i])))
    }

    fn series(n: usize) -> impl Strategy<Value = Series> {
        proptest::collection::vec((word(n), -3i64..=3, 1i64..=2), 0..4).prop_map(move |ts| {
            let mut c = Series::zero(n);
            for (w, a, b) in ts {
                c.add_term(w, ratio(a, b));
            }
            c
        })
    }

    /// Series of relative degree `r` built from the decomposition.
    fn with_reldeg(n: usize) -> impl Strategy<Value = (usize, Series)> {
        (1usize..=3, 1i64..=3, series(n), series(n)).prop_map(move |(r, k, nat, e)| {
            let mut c = Series::zero(n);
            for (w, a) in nat.terms() {
                c.add_term(Word::x0_pow(w.len()), a.clone());
            }
            c.add_term(Word::linear(r), int(k));
            let prefix = Word::x0_pow(r - 1);
            for (w, a) in e.terms() {
                if !w.is_empty() && *w != Word::letter(Letter::X1) {
                    c.add_term(prefix.concat(w), a.clone());
                }
            }
            (r, c.with_trunc(n))
        })
    }

    fn group_elem(n: usize) -> impl Strategy<Value = SeriesPair> {
        (series(n), series(n), prop_oneof![Just(1i64), Just(2), Just(-1)]).prop_map(
            move |(l, r, k)| {
                let mut l = l.proper_part();
                l.add_term(Word::empty(), int(k));
                SeriesPair::new(l, r).unwrap()
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn reconstruction((r, c) in with_reldeg(5)) {
            let d = decompose(&c).unwrap();
            prop_assert_eq!(d.r, r);
            prop_assert_eq!(d.reassemble(), c);
            prop_assert!(d.e.is_proper());
            prop_assert!(!d.e.contains(&Word::letter(Letter::X1)));
        }

        #[test]
        fn invariant_under_action((r, c) in with_reldeg(5), d in group_elem(5)) {
            prop_assert_eq!(relative_degree(&mixed_compose(&c, &d).unwrap()).value(), Some(r));
        }

        #[test]
        fn linearizes((_r, c) in with_reldeg(5)) {
            let e = linearizing_element(&c).unwrap();
            prop_assert!(orbit_check(&c, &e).unwrap());
        }

        #[test]
        fn orbit_of_normal_form((_r, c) in with_reldeg(5), d in group_elem(5)) {
            // c ∘̃ d returns to the normal form of c through (e_c ∘ d)^{-1}
            let moved = mixed_compose(&c, &d).unwrap();
            let e = group_compose(&linearizing_element(&c).unwrap(), &d).unwrap();
            let back = mixed_compose(&moved, &group_inverse_fixed_point(&e).unwrap()).unwrap();
            prop_assert_eq!(back, decompose(&c).unwrap().normal_form());
        }

        #[test]
        fn acts_freely((r, c) in with_reldeg(5), delta in series(5), right in series(5)) {
            // d = (1 + δ_L, δ_R) differs from the identity at degree <= N - r
            let keep = 5 - r;
            let dl = delta.proper_part().with_trunc(keep).with_trunc(5);
            let dr = right.with_trunc(keep).with_trunc(5);
            prop_assume!(!(dl.is_zero() && dr.is_zero()));
            let d = SeriesPair::new(&Series::one(5) + &dl, dr).unwrap();
            prop_assert_ne!(mixed_compose(&c, &d).unwrap(), c);
        }
    }
}
