use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::algebra::{CoordinateMap, HopfElement, HopfMonomial, Kind, TensorSum};
use super::coproduct::{cache, memo, reduced_coproduct};
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::group::SeriesPair;
use crate::series::Series;
use crate::word::Word;

/// Antipode of a generator, from `S h = -h - Σ S(h'_(1)) h'_(2)` over the
/// reduced coproduct. Memoized per generator.
pub fn antipode(h: &CoordinateMap) -> Arc<HopfElement> {
    if h.is_unit() {
        return Arc::new(HopfElement::one());
    }
    memo(&cache().antipode, h, || {
        let mut s = -&HopfElement::generator(h.clone());
        for (l, r, k) in reduced_coproduct(h).terms() {
            s += &(-&antipode_monomial(l).mul_monomial(r)).scale(k);
        }
        s
    })
}

/// `S` on a monomial, factor by factor (`H` is commutative).
pub fn antipode_monomial(m: &HopfMonomial) -> HopfElement {
    let mut out = HopfElement::one();
    for (h, k) in m.factors() {
        out = &out * &antipode(h).pow(k);
    }
    out
}

pub fn antipode_element(e: &HopfElement) -> HopfElement {
    let mut out = HopfElement::zero();
    for (m, k) in e.terms() {
        out += &antipode_monomial(m).scale(k);
    }
    out
}

fn generator_value(h: &CoordinateMap, c: &SeriesPair) -> Result<Coeff> {
    let n = c.trunc();
    if h.word.len() > n {
        return Err(Error::InsufficientTruncation {
            word: h.word.to_string(),
            needed: h.word.len(),
            have: n,
        });
    }
    Ok(match h.kind {
        Kind::B => c.left().coeff(&h.word),
        Kind::A => c.right().coeff(&h.word),
    })
}

fn monomial_value(m: &HopfMonomial, c: &SeriesPair) -> Result<Coeff> {
    let mut out = Coeff::one();
    for (h, k) in m.factors() {
        let v = generator_value(h, c)?;
        if v.is_zero() {
            return Ok(v);
        }
        for _ in 0..k {
            out *= &v;
        }
    }
    Ok(out)
}

/// `Φ_c(e)` with `Φ_c(b_η) = (c_L, η)` and `Φ_c(a_η) = (c_R, η)`.
pub fn eval_character(e: &HopfElement, c: &SeriesPair) -> Result<Coeff> {
    c.require_normalized()?;
    let mut out = Coeff::zero();
    for (m, k) in e.terms() {
        out += monomial_value(m, c)? * k;
    }
    Ok(out)
}

/// `Σ Φ_c(t_(1)) Φ_d(t_(2))`
pub fn eval_tensor(t: &TensorSum, c: &SeriesPair, d: &SeriesPair) -> Result<Coeff> {
    c.require_normalized()?;
    d.require_normalized()?;
    let mut out = Coeff::zero();
    for (l, r, k) in t.terms() {
        let lv = monomial_value(l, c)?;
        if lv.is_zero() {
            continue;
        }
        out += lv * monomial_value(r, d)? * k;
    }
    Ok(out)
}

/// Group inverse of a normalized pair from `h_η(c^{-1}) = (S h_η)(c)`.
///
/// `Φ_c ∘ S` is evaluated numerically through the antipode recursion, so
/// only the reduced coproducts are built symbolically.
pub fn inverse_via_antipode(c: &SeriesPair) -> Result<SeriesPair> {
    c.require_normalized()?;
    let n = c.trunc();
    let mut values: HashMap<CoordinateMap, Coeff> = HashMap::new();
    let mut left = Series::one(n);
    let mut right = Series::zero(n);
    for w in Word::all_up_to(n) {
        if !w.is_empty() {
            let v = antipode_value(&CoordinateMap::b(w.clone()), c, &mut values)?;
            left.add_term(w.clone(), v);
        }
        let v = antipode_value(&CoordinateMap::a(w.clone()), c, &mut values)?;
        right.add_term(w, v);
    }
    SeriesPair::new(left, right)
}

/// `Φ_c(S h) = -Φ_c(h) - Σ Φ_c(S h'_(1)) Φ_c(h'_(2))`
fn antipode_value(
    h: &CoordinateMap,
    c: &SeriesPair,
    values: &mut HashMap<CoordinateMap, Coeff>,
) -> Result<Coeff> {
    if h.is_unit() {
        return Ok(Coeff::one());
    }
    if let Some(v) = values.get(h) {
        return Ok(v.clone());
    }
    let mut v = -generator_value(h, c)?;
    for (l, r, k) in reduced_coproduct(h).terms() {
        let rv = monomial_value(r, c)?;
        if rv.is_zero() {
            continue;
        }
        let mut lv = Coeff::one();
        for (g, p) in l.factors() {
            let gv = antipode_value(g, c, values)?;
            for _ in 0..p {
                lv *= &gv;
            }
        }
        v -= lv * rv * k;
    }
    values.insert(h.clone(), v.clone());
    Ok(v)
}
