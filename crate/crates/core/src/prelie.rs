//! Pre-Lie product and Lie bracket on tangent vectors `v = δ·v_L + v_R`.

use crate::error::Result;
use crate::group::SeriesPair;
use crate::series::{check_trunc, Series};
use crate::word::{Letter, Word};

/// A tangent vector `δ·v_L + v_R` at the identity, stored as `(v_L, v_R)`.
/// No properness or group condition applies.
pub type TangentVector = SeriesPair;

fn word_series(w: &Word, n: usize) -> Series {
    let mut s = Series::zero(n);
    s.add_term(w.clone(), num_traits::One::one());
    s
}

/// `ξ • v` from `∅ • v = 0`, `(x0 ξ) • v = x0 (ξ • v)` and
/// `(x1 ξ) • v = x1 (v_L ш ξ + ξ • v) + x0 (v_R ш ξ)`.
///
/// Every step prefixes a letter, so a degree-`N` result only reads the
/// coefficients of `v` up to degree `N - 1`.
pub fn bullet_word(xi: &Word, v: &TangentVector) -> Series {
    let n = v.trunc();
    let Some((first, rest)) = xi.split_first() else {
        return Series::zero(n);
    };
    let inner = bullet_word(&rest, v);
    match first {
        Letter::X0 => inner.prefixed(Letter::X0),
        Letter::X1 => {
            let r = word_series(&rest, n);
            let via_l = &v.left().shuffle(&r).expect("same degree") + &inner;
            let via_r = v.right().shuffle(&r).expect("same degree");
            &via_l.prefixed(Letter::X1) + &via_r.prefixed(Letter::X0)
        }
    }
}

/// Linear extension of [`bullet_word`].
pub fn bullet_series(c: &Series, v: &TangentVector) -> Result<Series> {
    check_trunc(c, v.left())?;
    let mut out = Series::zero(c.trunc());
    for (w, k) in c.terms() {
        out += &bullet_word(w, v).scale(k);
    }
    Ok(out)
}

/// `u • v`, using `(δ ξ) • v = δ (v_L ш ξ + ξ • v) + v_R ш ξ` on the `u_L`
/// part.
pub fn bullet(u: &TangentVector, v: &TangentVector) -> Result<TangentVector> {
    check_trunc(u.left(), v.left())?;
    let left = &v.left().shuffle(u.left())? + &bullet_series(u.left(), v)?;
    let right = &v.right().shuffle(u.left())? + &bullet_series(u.right(), v)?;
    SeriesPair::new(left, right)
}

/// `[v1, v2] = v2 • v1 - v1 • v2`
pub fn lie_bracket(v1: &TangentVector, v2: &TangentVector) -> Result<TangentVector> {
    let a = bullet(v2, v1)?;
    let b = bullet(v1, v2)?;
    SeriesPair::new(a.left() - b.left(), a.right() - b.right())
}

/// Both sides of the right pre-Lie identity
/// `(v1•v2)•v3 - v1•(v2•v3) = (v1•v3)•v2 - v1•(v3•v2)`.
pub fn prelie_sides(
    v1: &TangentVector,
    v2: &TangentVector,
    v3: &TangentVector,
) -> Result<(TangentVector, TangentVector)> {
    let assoc = |a: &TangentVector, b: &TangentVector| -> Result<TangentVector> {
        let x = bullet(&bullet(v1, a)?, b)?;
        let y = bullet(v1, &bullet(a, b)?)?;
        SeriesPair::new(x.left() - y.left(), x.right() - y.right())
    };
    Ok((assoc(v2, v3)?, assoc(v3, v2)?))
}

pub fn prelie_check(v1: &TangentVector, v2: &TangentVector, v3: &TangentVector) -> Result<bool> {
    let (lhs, rhs) = prelie_sides(v1, v2, v3)?;
    Ok(lhs == rhs)
}
