//! The elimination step: combining the `J`-coordinate evaluations into an
//! element that the universal map sends to zero.
//!
//! [`build_k`], [`build_l`], and [`build_final`] replay the three-step hand
//! elimination (remove `w3`, remove `w1·w2`, absorb the rest into `J1³` and
//! `J1`), reading each cancellation coefficient off the previous step's
//! evaluation rather than hard-coding it. [`generic_eliminate`] solves the
//! same problem blind — an ansatz over any monomial list with
//! weight-bounded unknown coefficients — so the replayed element can be
//! checked against an order-free derivation. The final element genuinely
//! lives over a denominator ([`CKElement`] carries it explicitly): its
//! `w1³` bracket contains a single `f_pi0` factor, so no denominator-free
//! element of the same five-monomial shape exists at the replayed weight.

mod element;
mod error;
mod generic;
mod monomial;
mod replay;

pub use element::CKElement;
pub use error::GeomError;
pub use generic::generic_eliminate;
pub use monomial::JMonomial;
pub use replay::{build_final, build_k, build_l};
