//! Exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Coeff = BigRational;

pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_one(c: &Coeff) -> bool {
    c.is_one()
}

/// Shortest form: `3`, `-2/5`.
pub fn format(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Always `p/q`, the JSON form.
pub fn format_fraction(c: &Coeff) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Parses `p`, `-p`, `p/q` with optional surrounding whitespace.
pub fn parse(s: &str) -> Result<Coeff> {
    let s = s.trim();
    let bad = || Error::parse(0, format!("bad rational literal `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::parse(0, format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(num, den))
}

pub fn abs(c: &Coeff) -> Coeff {
    c.abs()
}

/// Nearest `f64`, for display only.
pub fn to_f64(c: &Coeff) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}
