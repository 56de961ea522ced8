//! Exact arithmetic in the Grothendieck ring of GL2 representations.
//!
//! Classes are sparse integer combinations of the irreducibles `M_{a,b}`
//! (the `a`-th symmetric power of the standard representation twisted by the
//! `b`-th power of the determinant, of weight `-a - 2b`). Products and
//! symmetric/exterior powers are computed through character polynomials and
//! decomposed back by greedy leading-term subtraction.

mod character;
mod class;
mod error;
mod ops;

pub use character::{decompose_character, CharacterPoly};
pub use class::{IrrClass, K0Class};
pub use error::K0Error;
pub use ops::{ext_power, mul, power, sym_power};
