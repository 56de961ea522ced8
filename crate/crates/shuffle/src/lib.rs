//! Free shuffle Hopf algebra on two weighted alphabets.
//!
//! Provides words over the alphabets `{e0, e1}` and `{pi0, pi1, tau, sigma0,
//! sigma1}`, rational linear combinations with the riffle-shuffle product and
//! deconcatenation coproduct, the polynomial structure over Lyndon words with
//! exact division, and the GL2 action generated by the swap `s`, the
//! unipotent `N`, and the diagonal torus.

mod elem;
mod error;
mod gl2;
mod letter;
mod lyndon;
mod word;

#[cfg(feature = "testkit")]
pub mod testkit;

pub use elem::{
    coeff, coeff_ratio, deconcat_coproduct, full_coproduct, shuffle_product, tensor_shuffle,
    Coeff, ShuffleElem, TensorElem,
};
pub use error::ShuffleError;
pub use gl2::{gl2_act, GL2Element};
pub use letter::{Alphabet, Letter};
pub use lyndon::{
    chen_fox_lyndon, count_lyndon_words, exact_divide, is_lyndon, lyndon_decompose,
    LyndonMonomial, LyndonPolynomial,
};
pub use word::Word;
