//! The universal evaluation map on the depth-two coordinate ring, in two
//! independent forms.
//!
//! Values live in `Q[w1, w2, w3]` with coefficients in the shuffle algebra
//! on the target alphabet: [`WPolynomial`]. The closed forms for all source
//! words of weight at most 3 are tabulated directly ([`evaluate_word`],
//! [`evaluate_j`]), while [`solve_equivariant_cocycles`] rederives them from
//! scratch as the unique three-parameter family of weight-preserving maps
//! compatible with deconcatenation, the shuffle product, and the group
//! action. The two constructions are kept deliberately separate so each can
//! check the other.

mod closed;
mod error;
mod solver;
mod wpoly;

pub use closed::{
    evaluate_elem, evaluate_j, evaluate_word, phi_coefficient, verify_recursion, JCoordinate,
};
pub use error::CocycleError;
pub use solver::{solve_equivariant_cocycles, CocycleFamily, WScalar};
pub use wpoly::{gl2_act_w, wmonomial_weight, WMonomial, WPolynomial};
