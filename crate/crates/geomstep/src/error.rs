//! Error type for the elimination step.

use shuffle::ShuffleError;
use thiserror::Error;

/// Failure modes of building or solving for ideal elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    /// The generic solver needs at least one monomial in the ansatz.
    #[error("the monomial list for the ansatz is empty")]
    EmptyMonomialList,
    /// An underlying algebra operation failed (mixed alphabets, inexact
    /// division).
    #[error(transparent)]
    Shuffle(#[from] ShuffleError),
}
