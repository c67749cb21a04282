//! Faà di Bruno type Hopf algebra of coordinate maps on normalized pairs.
//!
//! `H` is the free commutative algebra on `b_η` (η nonempty) and `a_η`,
//! graded by `deg b_η = 2|η|_{x0} + |η|_{x1}` and `deg a_η = deg b_η + 1`.
//! Its coproduct is dual to the group product, so the antipode yields the
//! group inverse: `h_η(c^{-1}) = (S h_η)(c)`.
//!
//! Coproducts and antipodes are memoized per generator in a process-wide
//! insert-only cache.

mod algebra;
mod antipode;
mod coproduct;
mod hilbert;
mod text;

pub use algebra::{CoordinateMap, HopfElement, HopfMonomial, Kind, TensorSum};
pub use antipode::{
    antipode, antipode_element, antipode_monomial, eval_character, eval_tensor, inverse_via_antipode,
};
pub use coproduct::{
    coproduct_on_element, counit, full_coproduct, reduced_coproduct, shuffle_coproduct, tilde_coproduct,
};
pub use hilbert::{hilbert_dimensions, HilbertRow};
pub use text::{parse_element, parse_tensor};
