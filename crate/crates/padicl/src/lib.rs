//! Fixed-precision p-adic arithmetic for special-value verification.
//!
//! The crate provides:
//!
//! - [`PadicNumber`], elements of `Q_p` carried to a stated absolute
//!   precision, with pessimistic precision propagation through sums,
//!   products, and inverses;
//! - [`FrobeniusData`] and [`hensel_unit_root`], the Newton lift of the
//!   unit root `α` of `x² − a_p·x + p` for ordinary data (`p ∤ a_p`;
//!   supersingular input is rejected);
//! - [`ModularSymbolTable`], finite tables of exact rational symbol
//!   values `r ↦ φ(r)` with a JSON loader and a coverage check;
//! - [`mu`] and [`mazur_stickelberger_sum`], the measure
//!   `μ(a) = φ(a·p^{−n})·α^{−n} − α^{−n−1}·φ(a·p^{−n+1})` and the sum
//!   `Σ a·μ(a)` over units modulo `p^prec`, together with
//!   [`is_nonzero_at_precision`] to read off a non-vanishing verdict.
//!
//! Symbol values are always ingested, never computed: producing them
//! belongs to modular-form machinery outside this crate's scope.

mod error;
mod frobenius;
mod lvalue;
mod padic;
mod symbols;

pub use error::PadicError;
pub use frobenius::{hensel_unit_root, FrobeniusData};
pub use lvalue::{is_nonzero_at_precision, mazur_stickelberger_sum, mu};
pub use padic::{PadicNumber, Rational};
pub use symbols::{parse_symbols, ModularSymbolTable, SymbolParity};
