//! Closed-form Selmer dimensions and the finiteness inequality.
//!
//! The global dimension `d_{a,b}`, its `S`-level refinement `d^S_{a,b}`, and
//! the local dimension `l_{a,b}` of an irreducible class `M_{a,b}` are given
//! by case tables in `(a, b)` and the context (rank, `|S|`, the
//! split-multiplicative count, base field). Extending linearly over a K0
//! class and forming `c^S = l - d^S` gives the margin of the finiteness
//! inequality: a positive margin predicts a finite locus at that level.
//!
//! Every formula is applied only on its derived range; uncovered pairs are
//! rejected with the offending `(a, b)` rather than extrapolated.

mod context;
mod dims;
mod error;
mod functionals;

pub use context::{FieldProfile, PlaceData, SelmerContext};
pub use dims::{d_change_under_place, d_global, d_s, l_local};
pub use error::SelmerError;
pub use functionals::{
    c_functional, c_s_functional, check_finiteness, d_functional, d_s_functional,
    dimension_report, l_functional, DimensionReport, TermDims,
};
