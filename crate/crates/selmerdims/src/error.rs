//! Errors for dimension formulas applied outside their derived range.

use thiserror::Error;

/// Errors from the dimension functionals.
///
/// Every closed form implemented here has a finite derived range; inputs
/// outside that range are rejected with the offending pair rather than
/// extrapolated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SelmerError {
    /// The global closed forms cover weight ≤ -2 with `b ≥ 0`, excluding
    /// `(0, 1)`, plus the rank convention at `(1, 0)`.
    #[error("no global dimension formula for (a, b) = ({a}, {b})")]
    UncoveredGlobal {
        /// Symmetric-power index of the rejected pair.
        a: u32,
        /// Twist index of the rejected pair.
        b: i32,
    },
    /// The local closed form covers negative weight with `b ≥ 0`.
    #[error("no local dimension formula for (a, b) = ({a}, {b})")]
    UncoveredLocal {
        /// Symmetric-power index of the rejected pair.
        a: u32,
        /// Twist index of the rejected pair.
        b: i32,
    },
    /// The `S`-level dimension of this pair is not determined for the given
    /// nonempty `S`.
    #[error("the S-level dimension of (a, b) = ({a}, {b}) is not determined for nonempty S")]
    UncoveredWithS {
        /// Symmetric-power index of the rejected pair.
        a: u32,
        /// Twist index of the rejected pair.
        b: i32,
    },
    /// The dimension increment when enlarging `S` by this place is not
    /// determined for the pair.
    #[error("the dimension change at (a, b) = ({a}, {b}) is not determined at this place")]
    UncoveredChange {
        /// Symmetric-power index of the rejected pair.
        a: u32,
        /// Twist index of the rejected pair.
        b: i32,
    },
    /// Local formulas require the completion at the chosen place to be the
    /// degree-1 p-adic field, which for an imaginary quadratic base field
    /// means the place must be split.
    #[error("local formulas require a split place over an imaginary quadratic field")]
    NonSplitCompletion,
    /// The split-multiplicative count can be at most the number of places.
    #[error("delta_S = {delta_s} exceeds |S| = {s_size}")]
    DeltaExceedsS {
        /// Number of places in `S`.
        s_size: u32,
        /// Claimed split-multiplicative count.
        delta_s: u32,
    },
    /// A place cannot be simultaneously potentially good and split
    /// multiplicative.
    #[error("a place of potentially good reduction cannot be split multiplicative")]
    InconsistentPlace,
}
