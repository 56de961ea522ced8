//! Error type shared by the p-adic modules.

use thiserror::Error;

/// Everything that can go wrong in p-adic arithmetic, unit-root lifting,
/// symbol-table handling, and the special-value sum.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    /// The modulus of a p-adic field must be prime.
    #[error("{n} is not prime")]
    NotPrime {
        /// The offending modulus.
        n: u64,
    },
    /// The Frobenius trace is divisible by the prime, so the quadratic
    /// `x² − a_p·x + p` has no unit root.
    #[error("supersingular data at {p}: trace {ap} is divisible by {p}")]
    Supersingular {
        /// The prime.
        p: u64,
        /// The trace of Frobenius.
        ap: i64,
    },
    /// Absolute precision must be at least one digit.
    #[error("precision must be positive, got {prec}")]
    InvalidPrecision {
        /// The requested precision.
        prec: u32,
    },
    /// A symbol value was requested at a rational the table does not cover.
    #[error("symbol table has no entry at {r}")]
    MissingSymbol {
        /// The uncovered rational argument.
        r: String,
    },
    /// Two table entries assign different values to the same rational.
    #[error("conflicting symbol values at {r}")]
    ConflictingSymbol {
        /// The doubly-assigned rational argument.
        r: String,
    },
    /// A symbol file failed to parse.
    #[error("malformed symbol data: {detail}")]
    SymbolFormat {
        /// What the parser rejected.
        detail: String,
    },
    /// The summation index must be coprime to the prime.
    #[error("index {a} is divisible by {p}")]
    NotCoprime {
        /// The summation index.
        a: u64,
        /// The prime.
        p: u64,
    },
    /// Two operands live over different primes.
    #[error("prime mismatch: expected {expected}, found {found}")]
    PrimeMismatch {
        /// The prime of the first operand.
        expected: u64,
        /// The prime of the second operand.
        found: u64,
    },
    /// An element indistinguishable from zero cannot be inverted.
    #[error("cannot invert a value that vanishes to its stated precision O({p}^{prec})")]
    DivideByZero {
        /// The prime.
        p: u64,
        /// The stated absolute precision.
        prec: i64,
    },
    /// The requested summation range exceeds the supported size.
    #[error("summation range {p}^{prec} exceeds the supported {limit} terms")]
    RangeTooLarge {
        /// The prime.
        p: u64,
        /// The requested precision.
        prec: u32,
        /// The largest supported term count.
        limit: u64,
    },
}
