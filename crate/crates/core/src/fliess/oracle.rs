use num_traits::{Signed, Zero};

use super::integrals::{eval_series, IteratedIntegralState};
use super::signal::PiecewiseConstantSignal;
use crate::coeff::{self, Coeff};
use crate::error::{Error, Result};
use crate::group::{feedback_product, mixed_compose, SeriesPair};
use crate::series::Series;

/// Both sides of a numeric identity check and their exact distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    /// Simulated value built from sampled signals.
    pub simulated: Coeff,
    /// Value of the algebraic prediction.
    pub predicted: Coeff,
    pub residual: Coeff,
}

impl OracleReport {
    fn new(simulated: Coeff, predicted: Coeff) -> Self {
        let residual = (&simulated - &predicted).abs();
        OracleReport { simulated, predicted, residual }
    }

    pub fn residual_f64(&self) -> f64 {
        coeff::to_f64(&self.residual)
    }
}

/// `refinement` uniform points on `[t_0, t]` together with the breakpoints
/// of `u` inside that range.
pub fn oracle_grid(u: &PiecewiseConstantSignal, t: &Coeff, refinement: usize) -> Result<Vec<Coeff>> {
    u.check_domain(t)?;
    if refinement == 0 {
        return Err(Error::InvalidSignal("refinement must be positive".into()));
    }
    let t0 = u.start();
    let step = (t - t0) / Coeff::from_integer(refinement.into());
    let mut grid: Vec<Coeff> = (0..=refinement)
        .map(|k| t0 + &step * Coeff::from_integer(k.into()))
        .chain(u.breakpoints().iter().filter(|b| *b > t0 && *b < t).cloned())
        .collect();
    grid.sort();
    grid.dedup();
    Ok(grid)
}

/// `F_c` at the right end of every grid cell, with the input equal to
/// `cells[k]` on cell `k`.
fn sample_series(c: &Series, grid: &[Coeff], cells: &[Coeff]) -> Vec<Coeff> {
    let mut st = IteratedIntegralState::new(c.support(), grid[0].clone());
    grid.windows(2)
        .zip(cells)
        .map(|(w, v)| {
            st.advance(v, &(&w[1] - &w[0]));
            st.series_value(c)
        })
        .collect()
}

/// `F_{d_δ}[u]` at the right end of every grid cell, using the value of
/// `u` on that cell (its left limit at the right end).
fn sample_pair(d: &SeriesPair, grid: &[Coeff], cells: &[Coeff]) -> Vec<Coeff> {
    let left = sample_series(d.left(), grid, cells);
    let right = sample_series(d.right(), grid, cells);
    cells
        .iter()
        .zip(left.into_iter().zip(right))
        .map(|(u, (l, r))| u * l + r)
        .collect()
}

/// Compares `F_c[F_{d_δ}[u]](t)` with `F_{c ∘̃ d}[u](t)`.
///
/// The inner signal `F_{d_δ}[u]` is replaced by its samples at the right
/// end of each cell of [`oracle_grid`], so the residual is a first-order
/// sampling error in `1/refinement` plus the truncation error of the
/// composed series. A horizon with `|t - t_0| (1 + max|u|) <= 1/4` keeps the
/// truncation part negligible.
pub fn oracle_mixed_compose(
    c: &Series,
    d: &SeriesPair,
    u: &PiecewiseConstantSignal,
    t: &Coeff,
    refinement: usize,
) -> Result<OracleReport> {
    let predicted = eval_series(&mixed_compose(c, d)?, u, t)?;
    if t == u.start() {
        return Ok(OracleReport::new(c.constant_term(), predicted));
    }
    let grid = oracle_grid(u, t, refinement)?;
    let inner = sample_pair(d, &grid, &u.on_grid(&grid)?);
    let sampled = PiecewiseConstantSignal::new(grid, inner)?;
    Ok(OracleReport::new(eval_series(c, &sampled, t)?, predicted))
}

/// Compares a simulated closed loop `y = F_c[u]`, `u = v + F_d[y]` with
/// `F_{c@d}[v](t)`.
///
/// The loop is solved on the grid by `iterations` Picard sweeps starting
/// from `y = 0`, each signal being sampled at the right end of every cell.
pub fn oracle_feedback(
    c: &Series,
    d: &Series,
    v: &PiecewiseConstantSignal,
    t: &Coeff,
    refinement: usize,
    iterations: usize,
) -> Result<OracleReport> {
    let predicted = eval_series(&feedback_product(c, d)?, v, t)?;
    if t == v.start() {
        return Ok(OracleReport::new(c.constant_term(), predicted));
    }
    let grid = oracle_grid(v, t, refinement)?;
    let v_cells = v.on_grid(&grid)?;
    let mut y = vec![Coeff::zero(); v_cells.len()];
    let mut out = c.constant_term();
    for _ in 0..iterations.max(1) {
        let feedback = sample_series(d, &grid, &y);
        let u: Vec<Coeff> = v_cells.iter().zip(&feedback).map(|(a, b)| a + b).collect();
        y = sample_series(c, &grid, &u);
        out = y.last().cloned().expect("nonempty grid");
    }
    Ok(OracleReport::new(out, predicted))
}
