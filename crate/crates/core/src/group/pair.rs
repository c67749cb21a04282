use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::{self, Coeff};
use crate::error::{Error, Result};
use crate::series::{check_trunc, parse_series, Series};

/// `c_δ = (c_L, c_R)`, generating series of `u ↦ u·F_{c_L}[u] + F_{c_R}[u]`.
///
/// The pair is a group element when `(c_L, e) != 0`, and Hopf-normalized
/// when `(c_L, e) = 1`. The identity is `(1, 0)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PairJson")]
pub struct SeriesPair {
    left: Series,
    right: Series,
}

#[derive(Deserialize)]
struct PairJson {
    left: Series,
    right: Series,
}

impl TryFrom<PairJson> for SeriesPair {
    type Error = Error;
    fn try_from(j: PairJson) -> Result<Self> {
        SeriesPair::new(j.left, j.right)
    }
}

impl SeriesPair {
    pub fn new(left: Series, right: Series) -> Result<Self> {
        check_trunc(&left, &right)?;
        Ok(SeriesPair { left, right })
    }

    /// `(1, 0)`
    pub fn identity(trunc: usize) -> Self {
        SeriesPair {
            left: Series::one(trunc),
            right: Series::zero(trunc),
        }
    }

    /// `(1, d)`, the output-feedback subgroup.
    pub fn unit_left(right: Series) -> Self {
        SeriesPair {
            left: Series::one(right.trunc()),
            right,
        }
    }

    pub fn left(&self) -> &Series {
        &self.left
    }

    pub fn right(&self) -> &Series {
        &self.right
    }

    pub fn into_parts(self) -> (Series, Series) {
        (self.left, self.right)
    }

    pub fn trunc(&self) -> usize {
        self.left.trunc()
    }

    pub fn with_trunc(&self, n: usize) -> SeriesPair {
        SeriesPair {
            left: self.left.with_trunc(n),
            right: self.right.with_trunc(n),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == SeriesPair::identity(self.trunc())
    }

    pub fn is_in_group(&self) -> bool {
        !self.left.constant_term().is_zero()
    }

    pub fn is_normalized(&self) -> bool {
        self.left.constant_term().is_one()
    }

    pub(crate) fn require_group(&self) -> Result<()> {
        if self.is_in_group() {
            Ok(())
        } else {
            Err(Error::NotInGroup)
        }
    }

    pub(crate) fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotNormalized {
                found: coeff::format(&self.left.constant_term()),
            })
        }
    }

    /// Rescales the output by `1/k`, `k = (c_L, e)`: returns the normalized
    /// pair `(c_L/k, c_R/k)` together with `k`. The original operator is `k`
    /// times the operator of the normalized pair.
    pub fn normalize(&self) -> Result<(SeriesPair, Coeff)> {
        self.require_group()?;
        let k = self.left.constant_term();
        let inv = k.recip();
        Ok((
            SeriesPair {
                left: self.left.scale(&inv),
                right: self.right.scale(&inv),
            },
            k,
        ))
    }

    /// `max(dist(c_L, d_L), dist(c_R, d_R))` as an order exponent: the
    /// minimum of the two component exponents.
    pub fn distance_exponent(&self, other: &SeriesPair) -> Result<crate::series::Order> {
        let l = crate::series::distance_exponent(&self.left, &other.left)?;
        let r = crate::series::distance_exponent(&self.right, &other.right)?;
        Ok(l.min(r))
    }
}

/// Parses `(left, right)` with both components in the series grammar.
pub fn parse_pair(text: &str, trunc: usize) -> Result<SeriesPair> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::parse(0, "pair must be written `(left, right)`"))?;
    let (l, r) = inner
        .split_once(',')
        .ok_or_else(|| Error::parse(0, "pair needs a comma between components"))?;
    if r.contains(',') {
        return Err(Error::parse(0, "pair has more than two components"));
    }
    SeriesPair::new(parse_series(l, trunc)?, parse_series(r, trunc)?)
}

impl fmt::Display for SeriesPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

impl fmt::Debug for SeriesPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeriesPair[N={}]{}", self.trunc(), self)
    }
}
