//! Error type shared by the shuffle-algebra operations.

use thiserror::Error;

/// Errors arising from alphabet discipline, parsing, and exact division.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShuffleError {
    /// Letters from both alphabets were combined into one word or product.
    #[error("letters from different alphabets cannot be combined")]
    MixedAlphabets,
    /// Exact division by the zero element was requested.
    #[error("division by the zero element")]
    ZeroDivisor,
    /// The dividend is not an exact shuffle multiple of the divisor.
    #[error("element is not an exact shuffle multiple of the divisor")]
    NotDivisible,
    /// Malformed word or element text.
    #[error("parse error: {0}")]
    Parse(String),
}
