//! Closed forms for the universal evaluation of equivariant cocycles on
//! words of weight at most 3, and the coordinates `J1..J4`.

use std::collections::BTreeMap;

use num_traits::Zero;
use shuffle::Letter::{E0, E1, Pi0, Pi1, Sigma0, Sigma1, Tau};
use shuffle::{coeff, coeff_ratio, Alphabet, Coeff, Letter, ShuffleElem, Word};

use crate::error::CocycleError;
use crate::wpoly::{WMonomial, WPolynomial};

const W1: WMonomial = (1, 0, 0);
const W2: WMonomial = (0, 1, 0);
const W3: WMonomial = (0, 0, 1);
const W11: WMonomial = (2, 0, 0);
const W12: WMonomial = (1, 1, 0);
const W111: WMonomial = (3, 0, 0);

fn elem(letters: &[Letter]) -> ShuffleElem {
    ShuffleElem::from_letters(letters).expect("fixed single-alphabet word")
}

/// Evaluates the universal cocycle on a source word over `{e0, e1}` of
/// weight at most 3, returning the closed form in `w1, w2, w3`.
///
/// The two three-letter forms on which the rest pivot are
/// `e0e1e0 ↦ w1³·f_{pi0.pi1.pi0} + w1w2·(f_{tau.pi0} - f_{pi0.tau}) +
/// w3·f_{sigma0}` and its swap image for `e1e0e1`; the remaining weight-3
/// words follow from shuffle multiplicativity, which fixes in particular
/// `e0e1e1 ↦ w1³·f_{pi0.pi1.pi1} + w1w2·f_{tau.pi1} + (1/2)w3·f_{sigma1}`.
pub fn evaluate_word(lam: &Word) -> Result<WPolynomial, CocycleError> {
    if lam.alphabet() == Some(Alphabet::A) {
        return Err(CocycleError::WrongAlphabet);
    }
    let weight = lam.weight();
    if weight > 3 {
        return Err(CocycleError::WeightTooLarge { weight });
    }
    let mut p = WPolynomial::zero();
    let mut term = |m: WMonomial, e: ShuffleElem| p.add_term(m, e);
    match lam.letters() {
        [] => term((0, 0, 0), ShuffleElem::one()),
        [E0] => term(W1, elem(&[Pi0])),
        [E1] => term(W1, elem(&[Pi1])),
        [E0, E0] => term(W11, elem(&[Pi0, Pi0])),
        [E1, E1] => term(W11, elem(&[Pi1, Pi1])),
        [E0, E1] => {
            term(W11, elem(&[Pi0, Pi1]));
            term(W2, elem(&[Tau]));
        }
        [E1, E0] => {
            term(W11, elem(&[Pi1, Pi0]));
            term(W2, elem(&[Tau]).scale(&coeff(-1)));
        }
        [E0, E0, E0] => term(W111, elem(&[Pi0, Pi0, Pi0])),
        [E1, E1, E1] => term(W111, elem(&[Pi1, Pi1, Pi1])),
        [E0, E1, E0] => {
            term(W111, elem(&[Pi0, Pi1, Pi0]));
            term(W12, &elem(&[Tau, Pi0]) - &elem(&[Pi0, Tau]));
            term(W3, elem(&[Sigma0]));
        }
        [E1, E0, E1] => {
            term(W111, elem(&[Pi1, Pi0, Pi1]));
            term(W12, &elem(&[Pi1, Tau]) - &elem(&[Tau, Pi1]));
            term(W3, elem(&[Sigma1]).scale(&coeff(-1)));
        }
        [E0, E1, E1] => {
            term(W111, elem(&[Pi0, Pi1, Pi1]));
            term(W12, elem(&[Tau, Pi1]));
            term(W3, elem(&[Sigma1]).scale(&coeff_ratio(1, 2)));
        }
        [E1, E0, E0] => {
            term(W111, elem(&[Pi1, Pi0, Pi0]));
            term(W12, elem(&[Tau, Pi0]).scale(&coeff(-1)));
            term(W3, elem(&[Sigma0]).scale(&coeff_ratio(-1, 2)));
        }
        [E0, E0, E1] => {
            term(W111, elem(&[Pi0, Pi0, Pi1]));
            term(W12, elem(&[Pi0, Tau]));
            term(W3, elem(&[Sigma0]).scale(&coeff_ratio(-1, 2)));
        }
        [E1, E1, E0] => {
            term(W111, elem(&[Pi1, Pi1, Pi0]));
            term(W12, elem(&[Pi1, Tau]).scale(&coeff(-1)));
            term(W3, elem(&[Sigma1]).scale(&coeff_ratio(1, 2)));
        }
        other => unreachable!("unexpected generator word {other:?}"),
    }
    Ok(p)
}

/// Extends `evaluate_word` linearly over a combination of generator words.
pub fn evaluate_elem(x: &ShuffleElem) -> Result<WPolynomial, CocycleError> {
    let mut out = WPolynomial::zero();
    for (w, c) in x.terms() {
        out = out.add(&evaluate_word(w)?.scale(c));
    }
    Ok(out)
}

/// The coefficient polynomial of the target word `w` in the evaluation of
/// `lam`: a scalar polynomial in `w1, w2, w3`.
pub fn phi_coefficient(lam: &Word, w: &Word) -> Result<BTreeMap<WMonomial, Coeff>, CocycleError> {
    let p = evaluate_word(lam)?;
    let mut out = BTreeMap::new();
    for (m, e) in p.terms() {
        let c = e.coeff_of(w);
        if !c.is_zero() {
            out.insert(*m, c);
        }
    }
    Ok(out)
}

/// One of the four polynomial coordinates of the level-3 quotient modulo its
/// Hodge filtration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum JCoordinate {
    /// `J1 = e0`.
    J1,
    /// `J2 = e0.e1`.
    J2,
    /// `J3 = e0.e1.e0`.
    J3,
    /// `J4 = e0.e1.e1 + 2·e1`.
    J4,
}

impl JCoordinate {
    /// All four coordinates, in index order.
    pub fn all() -> [JCoordinate; 4] {
        [
            JCoordinate::J1,
            JCoordinate::J2,
            JCoordinate::J3,
            JCoordinate::J4,
        ]
    }

    /// The index `1..=4`.
    pub fn index(self) -> u32 {
        match self {
            JCoordinate::J1 => 1,
            JCoordinate::J2 => 2,
            JCoordinate::J3 => 3,
            JCoordinate::J4 => 4,
        }
    }

    /// Looks a coordinate up by its index `1..=4`.
    pub fn from_index(i: u32) -> Option<JCoordinate> {
        match i {
            1 => Some(JCoordinate::J1),
            2 => Some(JCoordinate::J2),
            3 => Some(JCoordinate::J3),
            4 => Some(JCoordinate::J4),
            _ => None,
        }
    }

    /// The defining combination of generator words.
    pub fn defining_elem(self) -> ShuffleElem {
        match self {
            JCoordinate::J1 => elem(&[E0]),
            JCoordinate::J2 => elem(&[E0, E1]),
            JCoordinate::J3 => elem(&[E0, E1, E0]),
            JCoordinate::J4 => &elem(&[E0, E1, E1]) + &elem(&[E1]).scale(&coeff(2)),
        }
    }
}

/// Evaluates the universal cocycle on a `J` coordinate.
pub fn evaluate_j(j: JCoordinate) -> WPolynomial {
    evaluate_elem(&j.defining_elem()).expect("J coordinates have weight at most 3")
}

/// Checks the length-extension recursion on the closed forms: appending a
/// generator `e_i` to the source and `pi_j` to the target multiplies the
/// coefficient polynomial by `delta_ij · w1`, and likewise for prepending.
///
/// `lam` is a generator word and `w` a target word of the same weight, with
/// weight + 1 at most 3 so the extended forms stay tabulated.
pub fn verify_recursion(lam: &Word, w: &Word) -> Result<bool, CocycleError> {
    if lam.weight() != w.weight() {
        return Err(CocycleError::WeightMismatch {
            lam_weight: lam.weight(),
            w_weight: w.weight(),
        });
    }
    if lam.weight() + 1 > 3 {
        return Err(CocycleError::WeightTooLarge {
            weight: lam.weight() + 1,
        });
    }
    let base = phi_coefficient(lam, w)?;
    let shifted: BTreeMap<WMonomial, Coeff> = base
        .iter()
        .map(|((i, j, k), c)| ((i + 1, *j, *k), c.clone()))
        .collect();
    for (i, e) in [(0u32, E0), (1, E1)] {
        for (j, pi) in [(0u32, Pi0), (1, Pi1)] {
            let expected = if i == j { shifted.clone() } else { BTreeMap::new() };
            let appended = phi_coefficient(
                &lam.concat(&Word::letter(e)).expect("same alphabet"),
                &w.concat(&Word::letter(pi)).expect("same alphabet"),
            )?;
            let prepended = phi_coefficient(
                &Word::letter(e).concat(lam).expect("same alphabet"),
                &Word::letter(pi).concat(w).expect("same alphabet"),
            )?;
            if appended != expected || prepended != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
