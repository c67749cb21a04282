//! The affine feedback transformation group on series pairs.
//!
//! The central product is the mixed composition `c ∘̃ d_δ`, obtained by
//! substituting `x0 ↦ x0·` and `x1 ↦ x1(d_L ш ·) + x0(d_R ш ·)` right-to-left
//! through every word of `c`. It drives the group product, the group action,
//! the cascade product and the feedback product.

mod pair;

pub use pair::{parse_pair, SeriesPair};

use crate::error::{Error, Result};
use crate::series::{check_trunc, Series};
use crate::word::Letter;

/// Mixed composition product `c ∘̃ d_δ`.
///
/// Computed from the prefix identities
/// `(x0 c) ∘̃ d = x0 (c ∘̃ d)` and
/// `(x1 c) ∘̃ d = x1 (d_L ш (c ∘̃ d)) + x0 (d_R ш (c ∘̃ d))`.
/// The coefficient of a length-`n` word only depends on inputs of length
/// `<= n`, so each level of the recursion works one degree lower.
pub fn mixed_compose(c: &Series, d: &SeriesPair) -> Result<Series> {
    check_trunc(c, d.left())?;
    let n = c.trunc();
    // d truncated at every degree 0..=n
    let levels: Vec<(Series, Series)> = (0..=n)
        .map(|k| (d.left().with_trunc(k), d.right().with_trunc(k)))
        .collect();
    Ok(compose_rec(c, &levels))
}

fn compose_rec(c: &Series, d: &[(Series, Series)]) -> Series {
    let n = c.trunc();
    let mut out = Series::constant(c.constant_term(), n);
    if n == 0 {
        return out;
    }
    let c0 = c.left_quotient(Letter::X0).with_trunc(n - 1);
    if !c0.is_zero() {
        out += &compose_rec(&c0, d).with_trunc(n).prefixed(Letter::X0);
    }
    let c1 = c.left_quotient(Letter::X1).with_trunc(n - 1);
    if !c1.is_zero() {
        let inner = compose_rec(&c1, d);
        let (dl, dr) = &d[n - 1];
        let via_l = dl.shuffle(&inner).expect("same degree");
        let via_r = dr.shuffle(&inner).expect("same degree");
        out += &via_l.with_trunc(n).prefixed(Letter::X1);
        out += &via_r.with_trunc(n).prefixed(Letter::X0);
    }
    out
}

/// Group product
/// `c_δ ∘ d_δ = ((c_L ∘̃ d_δ) ш d_L, (c_L ∘̃ d_δ) ш d_R + c_R ∘̃ d_δ)`.
pub fn group_compose(c: &SeriesPair, d: &SeriesPair) -> Result<SeriesPair> {
    check_trunc(c.left(), d.left())?;
    let m = mixed_compose(c.left(), d)?;
    let left = m.shuffle(d.left())?;
    let right = &m.shuffle(d.right())? + &mixed_compose(c.right(), d)?;
    SeriesPair::new(left, right)
}

/// Two-sided group inverse by iterating
/// `e ↦ (g_L, -g_L ш (c_R ∘̃ e))` with `g_L = (c_L ∘̃ e)^{ш-1}`, from
/// `e = (1, 0)`.
///
/// The right update reads the freshly computed left component. With the
/// previous `e_L` instead, a nonzero constant in `c_R` copies the left error
/// into the right component at the same degree and the iteration only gains
/// a degree every other step.
///
/// Each step fixes at least one more degree, so the iterate settles within
/// `N + 1` steps; the loop stops once two successive iterates agree and is
/// capped at `N + 2`. The result is then checked against `c ∘ g = (1, 0)`.
pub fn group_inverse_fixed_point(c: &SeriesPair) -> Result<SeriesPair> {
    c.require_group()?;
    let n = c.trunc();
    let cap = n + 2;
    let mut e = SeriesPair::identity(n);
    for _ in 0..cap {
        let next = inverse_step(c, &e)?;
        if next == e {
            return verified_inverse(c, e, cap);
        }
        e = next;
    }
    verified_inverse(c, e, cap)
}

fn inverse_step(c: &SeriesPair, e: &SeriesPair) -> Result<SeriesPair> {
    let left = mixed_compose(c.left(), e)?.shuffle_inverse()?;
    let right = -left.shuffle(&mixed_compose(c.right(), e)?)?;
    SeriesPair::new(left, right)
}

fn verified_inverse(c: &SeriesPair, g: SeriesPair, iterations: usize) -> Result<SeriesPair> {
    if group_compose(c, &g)?.is_identity() {
        Ok(g)
    } else {
        Err(Error::NoFixedPoint { iterations })
    }
}

/// Modified composition `c ∘̃ (1, d)`, the output-feedback special case.
pub fn modified_compose(c: &Series, d: &Series) -> Result<Series> {
    check_trunc(c, d)?;
    mixed_compose(c, &SeriesPair::unit_left(d.clone()))
}

/// Cascade composition `c ∘ d`, with `F_c ∘ F_d = F_{c∘d}`.
///
/// This is the mixed composition with the pair `(0, d)`: the substitution
/// reduces to `x1 ↦ x0 (d ш ·)`.
pub fn series_compose(c: &Series, d: &Series) -> Result<Series> {
    check_trunc(c, d)?;
    let pair = SeriesPair::new(Series::zero(d.trunc()), d.clone())?;
    mixed_compose(c, &pair)
}

/// Feedback product `c @ d = c ∘̃ (1, -(d ∘ c))^{-1}`: the closed loop
/// `y = F_c[u]`, `u = v + F_d[y]`.
pub fn feedback_product(c: &Series, d: &Series) -> Result<Series> {
    check_trunc(c, d)?;
    let loop_gain = series_compose(d, c)?;
    let pair = SeriesPair::unit_left(-loop_gain);
    let inv = group_inverse_fixed_point(&pair)?;
    mixed_compose(c, &inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, ratio, Coeff};
    use crate::series::{distance_exponent, parse_series, Order};
    use crate::word::Word;
    use proptest::prelude::*;

    fn s(text: &str, n: usize) -> Series {
        parse_series(text, n).unwrap()
    }

    fn p(text: &str, n: usize) -> SeriesPair {
        parse_pair(text, n).unwrap()
    }

    /// Literal definition: apply φ_d letter by letter, right to left.
    fn mixed_compose_wordwise(c: &Series, d: &SeriesPair) -> Series {
        let n = c.trunc();
        let mut out = Series::zero(n);
        for (w, k) in c.terms() {
            let mut e = Series::one(n);
            for &l in w.letters().iter().rev() {
                e = match l {
                    Letter::X0 => e.prefixed(Letter::X0),
                    Letter::X1 => {
                        &d.left().shuffle(&e).unwrap().prefixed(Letter::X1)
                            + &d.right().shuffle(&e).unwrap().prefixed(Letter::X0)
                    }
                };
            }
            out += &e.scale(k);
        }
        out
    }

    #[test]
    fn mixed_compose_examples() {
        let c = s("1 + x0x1", 4);
        assert_eq!(mixed_compose(&c, &SeriesPair::identity(4)).unwrap(), c);
        assert_eq!(
            mixed_compose(&s("x1", 4), &p("(1 + x1, 0)", 4)).unwrap(),
            s("x1 + x1x1", 4)
        );
        assert_eq!(
            mixed_compose(&s("x1x1", 4), &p("(0, x1)", 4)).unwrap(),
            s("x0x1x0x1 + 2*x0x0x1x1", 4)
        );
        assert!(mixed_compose(&c, &SeriesPair::identity(3)).is_err());
    }

    #[test]
    fn group_compose_examples() {
        let c = p("(2 - x1 + x0x1, x1 + 1/2*x0)", 4);
        let id = SeriesPair::identity(4);
        assert_eq!(group_compose(&c, &id).unwrap(), c);
        assert_eq!(group_compose(&id, &c).unwrap(), c);
        let a = p("(1, x1)", 4);
        assert_eq!(group_compose(&a, &a).unwrap(), p("(1, 2*x1 + x0x1)", 4));
    }

    #[test]
    fn inverse_examples() {
        let id = SeriesPair::identity(5);
        assert_eq!(group_inverse_fixed_point(&id).unwrap(), id);

        let inv = group_inverse_fixed_point(&p("(1 + x1, 0)", 5)).unwrap();
        assert!(inv.right().is_zero());
        let expected = [1, -1, 3, -15];
        for (k, e) in expected.iter().enumerate() {
            assert_eq!(inv.left().coeff(&Word::x1_pow(k)), int(*e), "x1^{k}");
        }

        let a = p("(1, x1)", 4);
        let inv = group_inverse_fixed_point(&a).unwrap();
        assert_eq!(inv.left(), &Series::one(4));
        assert_eq!(inv.right().coeff(&"x1".parse().unwrap()), int(-1));
        assert_eq!(inv.right().coeff(&"x0x1".parse().unwrap()), int(1));
        assert_eq!(inv.right().coeff(&"x0x0x1".parse().unwrap()), int(-1));
        assert!(group_compose(&inv, &a).unwrap().is_identity());
        // subgroup law (1, g) = (1, -c_R ∘̃ (1, g))
        let g = inv.right().clone();
        assert_eq!(g, -modified_compose(a.right(), &g).unwrap());

        assert_eq!(
            group_inverse_fixed_point(&p("(x1, 1)", 3)).unwrap_err(),
            Error::NotInGroup
        );
    }

    #[test]
    fn inverse_with_general_constant() {
        let c = p("(3 + x1 - x0, 2 + x1x1)", 4);
        let g = group_inverse_fixed_point(&c).unwrap();
        assert_eq!(g.left().constant_term(), ratio(1, 3));
        assert!(group_compose(&c, &g).unwrap().is_identity());
        assert!(group_compose(&g, &c).unwrap().is_identity());
    }

    #[test]
    fn modified_compose_examples() {
        let c = s("1 + x1 - x0x1", 4);
        assert_eq!(modified_compose(&c, &Series::zero(4)).unwrap(), c);
        let d = s("2 + x0 - x1x1", 4);
        assert_eq!(
            modified_compose(&s("x1", 4), &d).unwrap(),
            &s("x1", 4) + &d.prefixed(Letter::X0)
        );
        // x1² + x1x0x1 + x0(x1 ш x1) + x0(x1 ш x0x1)
        let expected = s("x1x1 + x1x0x1 + 2*x0x1x1 + x0x1x0x1 + 2*x0x0x1x1", 4);
        assert_eq!(modified_compose(&s("x1x1", 4), &s("x1", 4)).unwrap(), expected);
        let c = s("x1x1", 4);
        assert_eq!(
            mixed_compose_wordwise(&c, &SeriesPair::unit_left(s("x1", 4))),
            expected
        );
    }

    #[test]
    fn series_compose_examples() {
        let d = s("1 + x1 - 3*x0x1", 4);
        assert_eq!(series_compose(&s("x0", 4), &d).unwrap(), s("x0", 4));
        assert_eq!(series_compose(&s("x1", 4), &d).unwrap(), d.prefixed(Letter::X0));
        assert_eq!(
            series_compose(&s("x1x1", 4), &s("x1", 4)).unwrap(),
            s("x0x1x0x1 + 2*x0x0x1x1", 4)
        );
    }

    #[test]
    fn feedback_examples() {
        let c = s("1 + x1 - x0x1 + x1x1", 5);
        assert_eq!(feedback_product(&c, &Series::zero(5)).unwrap(), c);
        let d = s("2 - x1 + x0x1", 5);
        assert_eq!(feedback_product(&s("x0", 5), &d).unwrap(), s("x0", 5));
        // unit feedback on an integrator: u = v + 1 so y = ∫v + t
        assert_eq!(
            feedback_product(&s("x1", 5), &Series::one(5)).unwrap(),
            s("x0 + x1", 5)
        );
    }

    #[test]
    fn truncation_soundness() {
        let c = s("1 + x1 - 2*x0x1 + x1x1x0 + 1/3*x1x1x1", 5);
        let d = p("(1 - x1 + x0, x1 + x1x0)", 5);
        let low = mixed_compose(&c.with_trunc(3), &d.with_trunc(3)).unwrap();
        let high = mixed_compose(&c, &d).unwrap().with_trunc(3);
        assert_eq!(low, high);
        let g_low = group_inverse_fixed_point(&d.with_trunc(3)).unwrap();
        let g_high = group_inverse_fixed_point(&d).unwrap().with_trunc(3);
        assert_eq!(g_low, g_high);
    }

    // --- property tests -------------------------------------------------

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
        fn recursion_matches_wordwise(c in series(5), d in group_elem(5)) {
            prop_assert_eq!(mixed_compose(&c, &d).unwrap(), mixed_compose_wordwise(&c, &d));
        }

        #[test]
        fn left_linear(c1 in series(5), c2 in series(5), d in group_elem(5), a in -3i64..3, b in -3i64..3) {
            let (a, b) = (int(a), int(b));
            let combo = &c1.scale(&a) + &c2.scale(&b);
            let lhs = mixed_compose(&combo, &d).unwrap();
            let rhs = &mixed_compose(&c1, &d).unwrap().scale(&a) + &mixed_compose(&c2, &d).unwrap().scale(&b);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn nonconstant_stays_nonconstant(c in series(5), d in group_elem(5)) {
            let image = mixed_compose(&c, &d).unwrap();
            let c_const = c.proper_part().is_zero();
            prop_assert_eq!(image.proper_part().is_zero(), c_const);
        }

        #[test]
        fn distributes_over_shuffle(c in series(5), d in series(5), e in group_elem(5)) {
            let lhs = mixed_compose(&c.shuffle(&d).unwrap(), &e).unwrap();
            let rhs = mixed_compose(&c, &e).unwrap().shuffle(&mixed_compose(&d, &e).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn right_action(c in series(4), d in group_elem(4), e in group_elem(4)) {
            let lhs = mixed_compose(&mixed_compose(&c, &d).unwrap(), &e).unwrap();
            let rhs = mixed_compose(&c, &group_compose(&d, &e).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(mixed_compose(&c, &SeriesPair::identity(4)).unwrap(), c);
        }

        #[test]
        fn contraction(c in series(5), d1 in group_elem(5), d2 in group_elem(5)) {
            let lhs = distance_exponent(&mixed_compose(&c, &d1).unwrap(), &mixed_compose(&c, &d2).unwrap()).unwrap();
            let bound = c.proper_part().order().plus(d1.distance_exponent(&d2).unwrap());
            prop_assert!(lhs >= bound.min(Order::Infinite));
        }

        #[test]
        fn associative(a in group_elem(4), b in group_elem(4), c in group_elem(4)) {
            let lhs = group_compose(&group_compose(&a, &b).unwrap(), &c).unwrap();
            let rhs = group_compose(&a, &group_compose(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn two_sided_inverse(c in group_elem(5)) {
            let g = group_inverse_fixed_point(&c).unwrap();
            prop_assert!(group_compose(&c, &g).unwrap().is_identity());
            prop_assert!(group_compose(&g, &c).unwrap().is_identity());
        }

        #[test]
        fn group_product_linear_in_right_component(l in series(4), r1 in series(4), r2 in series(4), d in group_elem(4)) {
            let mut l = l.proper_part();
            l.add_term(Word::empty(), int(1));
            let k = Coeff::from(int(2));
            let c1 = SeriesPair::new(l.clone(), r1.clone()).unwrap();
            let c2 = SeriesPair::new(l.clone(), r2.clone()).unwrap();
            let c12 = SeriesPair::new(l, &r1 + &r2.scale(&k)).unwrap();
            let base = group_compose(&SeriesPair::new(c1.left().clone(), Series::zero(4)).unwrap(), &d).unwrap();
            let g1 = group_compose(&c1, &d).unwrap();
            let g2 = group_compose(&c2, &d).unwrap();
            let g12 = group_compose(&c12, &d).unwrap();
            prop_assert_eq!(g12.left(), base.left());
            // right components are affine in c_R: offset from the c_R = 0 image
            let lhs = g12.right() - base.right();
            let rhs = &(g1.right() - base.right()) + &(g2.right() - base.right()).scale(&k);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
