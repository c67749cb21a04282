//! Exact arithmetic for truncated Chen-Fliess series in two letters.
//!
//! [`Series`] holds rational coefficients on words over `{x0, x1}` up to a
//! truncation degree. On top of it sit the affine feedback group of
//! [`SeriesPair`]s acting by mixed composition, the Hopf algebra of
//! coordinate maps whose antipode inverts that group ([`hopf`]), the pre-Lie
//! product on tangent vectors ([`prelie`]), relative degree and feedback
//! linearization ([`reldeg`]), and exact evaluation of Fliess operators on
//! piecewise-constant inputs ([`fliess`]). [`verify`] bundles the acceptance
//! suite used by the test target and the `fliess check` command.

pub mod coeff;
pub mod error;
pub mod fliess;
pub mod group;
pub mod hopf;
pub mod prelie;
pub mod reldeg;
pub mod series;
pub mod verify;
pub mod word;

pub use coeff::Coeff;
pub use error::{Error, Result};
pub use fliess::{eval_pair, eval_series, eval_word, PiecewiseConstantSignal};
pub use group::{
    feedback_product, group_compose, group_inverse_fixed_point, mixed_compose, modified_compose,
    parse_pair, series_compose, SeriesPair,
};
pub use series::{distance_exponent, linear_combine, parse_series, unshuffle, Order, Series, WordTensorSum};
pub use word::{Letter, Word};
