//! The three-step hand elimination: kill the `w3` terms, then the `w1·w2`
//! terms, then express the leftover `w1³` and `w1` terms through `J1`.

use std::collections::BTreeMap;

use cocycle::WPolynomial;
use shuffle::Letter::{Pi0, Pi1, Sigma0, Sigma1, Tau};
use shuffle::{coeff, shuffle_product, Letter, ShuffleElem};

use crate::element::CKElement;
use crate::monomial::JMonomial;

fn f(letters: &[Letter]) -> ShuffleElem {
    ShuffleElem::from_letters(letters).expect("fixed single-alphabet word")
}

fn sh(x: &ShuffleElem, y: &ShuffleElem) -> ShuffleElem {
    shuffle_product(x, y).expect("same alphabet")
}

const J1: JMonomial = JMonomial::new([1, 0, 0, 0]);
const J1J2: JMonomial = JMonomial::new([1, 1, 0, 0]);
const J1_CUBED: JMonomial = JMonomial::new([3, 0, 0, 0]);
const J3: JMonomial = JMonomial::new([0, 0, 1, 0]);
const J4: JMonomial = JMonomial::new([0, 0, 0, 1]);

/// First elimination step: `K = f_sigma1 · J3 − 2 f_sigma0 · J4`, whose
/// evaluation has no `w3` term, together with that evaluation.
pub fn build_k() -> (CKElement, WPolynomial) {
    let k = CKElement::new(BTreeMap::from([
        (J3, f(&[Sigma1])),
        (J4, f(&[Sigma0]).scale(&coeff(-2))),
    ]));
    let eval = k.evaluate().expect("fixed element");
    (k, eval)
}

/// Second step: `L = f_pi0 f_tau · K − λ · J1 J2`, where `λ` is read off as
/// the `w1 w2` coefficient of the evaluation of `K` (so the cancellation
/// holds by construction), together with the evaluation of `L`.
pub fn build_l() -> (CKElement, WPolynomial) {
    let (k, ck) = build_k();
    let lam = ck.coeff_of((1, 1, 0));
    let p0t = sh(&f(&[Pi0]), &f(&[Tau]));
    let mut coeffs: BTreeMap<JMonomial, ShuffleElem> = k
        .terms()
        .map(|(m, g)| (*m, sh(&p0t, g)))
        .collect();
    coeffs.insert(J1J2, lam.scale(&coeff(-1)));
    let l = CKElement::new(coeffs);
    let eval = l.evaluate().expect("fixed element");
    (l, eval)
}

/// Final step: subtract the `w1³` bracket times `J1³` and add back the
/// `w1` term through `J1`.
///
/// The bracket contains a single `f_pi0` factor, not three, so the
/// identity is produced in cleared form over the common denominator
/// `f_pi0^⧢3`: every other coefficient is multiplied through by it.
/// [`CKElement::reduced_coefficient`] recovers the per-monomial lowest
/// terms.
pub fn build_final() -> CKElement {
    let (l, cl) = build_l();
    let bracket = cl.coeff_of((3, 0, 0));
    let p0_cubed = f(&[Pi0]).shuffle_pow(3).expect("single alphabet");
    let mut coeffs: BTreeMap<JMonomial, ShuffleElem> = l
        .terms()
        .map(|(m, g)| (*m, sh(&p0_cubed, g)))
        .collect();
    coeffs.insert(J1_CUBED, bracket.scale(&coeff(-1)));
    let j1_term = sh(&f(&[Pi1]), &sh(&f(&[Tau]), &f(&[Sigma0]))).scale(&coeff(4));
    coeffs.insert(J1, sh(&p0_cubed, &j1_term));
    CKElement::with_denominator(coeffs, p0_cubed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_has_no_w3_and_the_expected_w1_part() {
        let (k, ck) = build_k();
        assert_eq!(k.support(), vec![J4, J3]);
        assert!(ck.coeff_of((0, 0, 1)).is_zero());
        assert_eq!(
            ck.coeff_of((1, 0, 0)),
            sh(&f(&[Sigma0]), &f(&[Pi1])).scale(&coeff(-4))
        );
    }

    #[test]
    fn l_has_no_mixed_terms() {
        let (_, cl) = build_l();
        assert!(cl.coeff_of((1, 1, 0)).is_zero());
        assert!(cl.coeff_of((0, 1, 0)).is_zero());
        assert!(cl.coeff_of((0, 0, 1)).is_zero());
    }

    #[test]
    fn final_element_vanishes() {
        assert!(build_final().vanishes().unwrap());
    }
}
