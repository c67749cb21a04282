//! Exact Fliess operators on piecewise-constant rational inputs.
//!
//! Iterated integrals are propagated segment by segment as polynomials in
//! the elapsed time, so every value here is an exact rational. The oracles
//! compare sampled simulations with the algebraic compositions.

mod integrals;
mod oracle;
mod signal;

pub use integrals::{eval_pair, eval_series, eval_word, IteratedIntegralState};
pub use oracle::{oracle_feedback, oracle_grid, oracle_mixed_compose, OracleReport};
pub use signal::PiecewiseConstantSignal;
