use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::{self, Coeff};
use crate::error::{Error, Result};

/// A rational input that is constant on each right-open interval
/// `[t_{i-1}, t_i)`, defined on `[t_0, t_M]`. At `t_M` the last value holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseConstantSignal {
    breakpoints: Vec<Coeff>,
    values: Vec<Coeff>,
}

impl PiecewiseConstantSignal {
    pub fn new(breakpoints: Vec<Coeff>, values: Vec<Coeff>) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::InvalidSignal("need at least two breakpoints".into()));
        }
        if values.len() + 1 != breakpoints.len() {
            return Err(Error::InvalidSignal(format!(
                "{} breakpoints need {} values, got {}",
                breakpoints.len(),
                breakpoints.len() - 1,
                values.len()
            )));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSignal("breakpoints must increase strictly".into()));
        }
        Ok(PiecewiseConstantSignal { breakpoints, values })
    }

    /// `u ≡ value` on `[start, end]`.
    pub fn constant(value: Coeff, start: Coeff, end: Coeff) -> Result<Self> {
        Self::new(vec![start, end], vec![value])
    }

    pub fn breakpoints(&self) -> &[Coeff] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Coeff] {
        &self.values
    }

    pub fn start(&self) -> &Coeff {
        &self.breakpoints[0]
    }

    pub fn end(&self) -> &Coeff {
        self.breakpoints.last().expect("at least two breakpoints")
    }

    /// `(start, end, value)` for every interval.
    pub fn segments(&self) -> impl Iterator<Item = (&Coeff, &Coeff, &Coeff)> {
        self.breakpoints
            .windows(2)
            .zip(&self.values)
            .map(|(w, v)| (&w[0], &w[1], v))
    }

    pub fn check_domain(&self, t: &Coeff) -> Result<()> {
        if t < self.start() || t > self.end() {
            return Err(Error::OutsideDomain {
                t: coeff::format(t),
                start: coeff::format(self.start()),
                end: coeff::format(self.end()),
            });
        }
        Ok(())
    }

    /// `u(t)` under the right-open convention.
    pub fn value_at(&self, t: &Coeff) -> Result<Coeff> {
        self.check_domain(t)?;
        let i = self.breakpoints[1..].partition_point(|b| b <= t);
        Ok(self.values[i.min(self.values.len() - 1)].clone())
    }

    pub fn max_abs(&self) -> Coeff {
        self.values.iter().map(Signed::abs).max().unwrap_or_else(Coeff::zero)
    }

    /// Values of `u` on the cells of `grid`, which must refine the
    /// breakpoints inside its range.
    pub(crate) fn on_grid(&self, grid: &[Coeff]) -> Result<Vec<Coeff>> {
        grid.windows(2).map(|w| self.value_at(&w[0])).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct SignalJson {
    breakpoints: Vec<String>,
    values: Vec<String>,
}

impl Serialize for PiecewiseConstantSignal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SignalJson {
            breakpoints: self.breakpoints.iter().map(coeff::format).collect(),
            values: self.values.iter().map(coeff::format).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PiecewiseConstantSignal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = SignalJson::deserialize(d)?;
        let parse = |v: &[String]| -> Result<Vec<Coeff>> { v.iter().map(|s| coeff::parse(s)).collect() };
        let b = parse(&j.breakpoints).map_err(D::Error::custom)?;
        let v = parse(&j.values).map_err(D::Error::custom)?;
        PiecewiseConstantSignal::new(b, v).map_err(D::Error::custom)
    }
}
