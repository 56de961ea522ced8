//! Errors for cocycle evaluation and the constraint solver.

use thiserror::Error;

/// Errors from the closed forms and the equivariant solver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CocycleError {
    /// The closed forms are tabulated for source words of weight at most 3.
    #[error("no closed form at weight {weight}: tabulated only through weight 3")]
    WeightTooLarge {
        /// Weight of the rejected source.
        weight: u32,
    },
    /// Evaluation sources must be words over the generator alphabet
    /// `{e0, e1}`.
    #[error("evaluation source must be a word over {{e0, e1}}")]
    WrongAlphabet,
    /// The recursion check needs a source word and a target word of equal
    /// weight.
    #[error("recursion check needs equal weights, got {lam_weight} and {w_weight}")]
    WeightMismatch {
        /// Weight of the source word.
        lam_weight: u32,
        /// Weight of the target word.
        w_weight: u32,
    },
    /// The constraint system contradicted itself; this indicates an
    /// implementation or convention error, never bad input.
    #[error("the constraint system at weight {weight} is inconsistent")]
    InconsistentSystem {
        /// Weight slice where the contradiction appeared.
        weight: u32,
    },
    /// Each weight slice must contribute exactly one new parameter.
    #[error("the solution space at weight {weight} has dimension {found}, expected 1")]
    KernelDimension {
        /// Weight slice with the wrong kernel.
        weight: u32,
        /// Dimension found.
        found: usize,
    },
    /// The distinguished coordinate of a weight slice did not move with the
    /// free parameter, so the solution cannot be put in normal form.
    #[error("the distinguished coordinate at weight {weight} is not free")]
    NormalizationFailed {
        /// Weight slice that failed to normalize.
        weight: u32,
    },
}
