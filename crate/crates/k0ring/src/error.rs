//! Error type for Grothendieck-ring arithmetic.

use thiserror::Error;

/// Errors from character decomposition, power operations, and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum K0Error {
    /// A character polynomial was not symmetric in its two variables.
    #[error("character polynomial is not symmetric")]
    NonSymmetricCharacter,
    /// Greedy decomposition hit a monomial no irreducible character can lead.
    #[error("character is not a sum of irreducible characters")]
    NotExpressible,
    /// Symmetric/exterior powers require a genuine representation class.
    #[error("operation requires non-negative multiplicities")]
    VirtualClass,
    /// Malformed class text.
    #[error("parse error: {0}")]
    Parse(String),
}
