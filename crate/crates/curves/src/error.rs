//! Errors for exact curve arithmetic, reduction, and fiber classification.

use thiserror::Error;

/// Errors from model construction, coordinate changes, point search, and
/// reduction modulo a prime.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    /// The coefficient tuple has vanishing discriminant and does not define
    /// a smooth curve.
    #[error("the coefficients define a singular cubic (discriminant is zero)")]
    SingularModel,
    /// Coordinate changes must rescale by a nonzero factor.
    #[error("a model transform with u = 0 is not invertible")]
    ZeroScale,
    /// An argument required to be prime is not.
    #[error("{n} is not a prime")]
    NotPrime {
        /// The rejected argument.
        n: u64,
    },
    /// Reduction mod `p` needs every coefficient to be `p`-integral.
    #[error("model coefficient {name} = {value} is not {p}-integral")]
    NonIntegralModel {
        /// Which coefficient has `p` in its denominator.
        name: &'static str,
        /// The offending value.
        value: String,
        /// The reduction prime.
        p: u64,
    },
    /// The operation requires good reduction at this prime.
    #[error("the model has bad reduction at {p}")]
    BadReduction {
        /// The rejected prime.
        p: u64,
    },
    /// The operation requires bad reduction at this prime.
    #[error("the model has good reduction at {p}; there is no special fiber to classify")]
    GoodReduction {
        /// The rejected prime.
        p: u64,
    },
    /// The reduced curve has a cusp rather than a node at this prime.
    #[error("the model has additive reduction at {p}; the nodal test does not apply")]
    AdditiveReduction {
        /// The rejected prime.
        p: u64,
    },
    /// A point with `p` in a denominator has no reduction mod `p`.
    #[error("point {point} is not {p}-integral and lies in no residue disc")]
    NonIntegralPoint {
        /// Display form of the offending point.
        point: String,
        /// The reduction prime.
        p: u64,
    },
    /// Input points must satisfy the supplied model exactly.
    #[error("point {point} does not satisfy the model's equation")]
    PointOffModel {
        /// Display form of the offending point.
        point: String,
    },
    /// Reduced-curve scans are quadratic in `p` and are capped.
    #[error("prime {p} exceeds the reduction scan limit {limit}")]
    PrimeTooLarge {
        /// The rejected prime.
        p: u64,
        /// The largest admitted prime.
        limit: u64,
    },
    /// A string could not be read as an exact rational.
    #[error("cannot parse {input:?} as an exact rational")]
    InvalidRational {
        /// The rejected input.
        input: String,
    },
}
