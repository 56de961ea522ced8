//! Exact arithmetic for elliptic curves over the rationals.
//!
//! The crate works with long Weierstrass models
//! `y² + a1·x·y + a3·y = x³ + a2·x² + a4·x + a6` over exact rational
//! coefficients and provides:
//!
//! - model invariants (`b`-quantities, `c4`, `c6`, discriminant, `j`),
//! - changes of coordinates `(u, r, s, t)` with their composition law,
//!   acting on both models and points,
//! - reduction modulo a good prime: point counts, traces of Frobenius,
//!   and partition of a list of rational points into residue discs,
//! - classification at bad primes: multiplicative versus additive
//!   reduction, the split test at a node, and the count `δ_S` of
//!   split-multiplicative primes outside `S`,
//! - a bounded search for S-integral points, and
//! - a registry of two bundled curves with verified point tables.
//!
//! All arithmetic is exact; nothing here rounds. Searching is the only
//! operation whose cost grows with its bound, and it stripes work across
//! threads.

mod badfiber;
mod error;
mod model;
mod point;
mod rational;
mod reduction;
mod registry;
mod search;
mod transform;

pub use badfiber::{
    classify_at_bad_prime, delta_s, is_split_multiplicative, reduction_type, DeltaSummary,
    FiberPartition, ReductionType,
};
pub use error::CurveError;
pub use model::WeierstrassModel;
pub use point::RationalPoint;
pub use rational::{parse_rational, ratio, rational, Rational};
pub use reduction::{
    has_good_reduction, reduced_affine_points, residue_disc_partition, trace_of_frobenius,
    ResidueDisc,
};
pub use registry::{bundled, lookup, CurveRecord};
pub use search::{search_s_integral_points, HeightBound, DEFAULT_BOUND};
pub use transform::{apply_transform, map_point, ModelTransform};
