//! The group action on elements: the swap `s`, the unipotent `N`, and the
//! diagonal torus, extended letterwise from letters to words.

use num_traits::One;

use crate::elem::{Coeff, ShuffleElem};
use crate::letter::Letter;
use crate::word::Word;

/// A group element given by a generator tag or a composite of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GL2Element {
    /// The swap: `e0 ↔ e1`, `pi0 ↔ pi1`, `tau ↦ -tau`, `sigma0 ↦ -sigma1`,
    /// `sigma1 ↦ -sigma0`.
    S,
    /// The unipotent: `e1 ↦ e1 + e0`, `pi1 ↦ pi1 + pi0`, `sigma1 ↦ sigma1 + sigma0`,
    /// all other letters fixed.
    N,
    /// The diagonal element with eigenvalues `x1`, `x2`; letters scale by their
    /// characters: `e0, pi0` by `x1`; `e1, pi1` by `x2`; `tau` by `x1·x2`;
    /// `sigma0` by `x1²·x2`; `sigma1` by `x1·x2²`.
    Torus(Coeff, Coeff),
    /// The product `g1·g2·…·gn`, acting as `g1 ∘ g2 ∘ … ∘ gn` (rightmost first).
    Composite(Vec<GL2Element>),
}

impl GL2Element {
    /// A torus element from integer eigenvalues.
    pub fn torus(x1: i64, x2: i64) -> GL2Element {
        GL2Element::Torus(crate::elem::coeff(x1), crate::elem::coeff(x2))
    }
}

/// The image of a single letter under a generator, as scaled letters.
fn letter_image(g: &GL2Element, l: Letter) -> Vec<(Letter, Coeff)> {
    let one = Coeff::one;
    match g {
        GL2Element::S => match l {
            Letter::E0 => vec![(Letter::E1, one())],
            Letter::E1 => vec![(Letter::E0, one())],
            Letter::Pi0 => vec![(Letter::Pi1, one())],
            Letter::Pi1 => vec![(Letter::Pi0, one())],
            Letter::Tau => vec![(Letter::Tau, -one())],
            Letter::Sigma0 => vec![(Letter::Sigma1, -one())],
            Letter::Sigma1 => vec![(Letter::Sigma0, -one())],
        },
        GL2Element::N => match l {
            Letter::E1 => vec![(Letter::E1, one()), (Letter::E0, one())],
            Letter::Pi1 => vec![(Letter::Pi1, one()), (Letter::Pi0, one())],
            Letter::Sigma1 => vec![(Letter::Sigma1, one()), (Letter::Sigma0, one())],
            fixed => vec![(fixed, one())],
        },
        GL2Element::Torus(x1, x2) => {
            let c = match l {
                Letter::E0 | Letter::Pi0 => x1.clone(),
                Letter::E1 | Letter::Pi1 => x2.clone(),
                Letter::Tau => x1 * x2,
                Letter::Sigma0 => x1 * x1 * x2,
                Letter::Sigma1 => x1 * x2 * x2,
            };
            vec![(l, c)]
        }
        GL2Element::Composite(_) => unreachable!("composites are expanded by the caller"),
    }
}

/// Applies a group element to an element of the algebra.
///
/// Generators act on a word letter by letter, multiplying out the images;
/// this extension is automatically an algebra map for the shuffle product
/// and commutes with deconcatenation.
pub fn gl2_act(g: &GL2Element, x: &ShuffleElem) -> ShuffleElem {
    match g {
        GL2Element::Composite(gs) => {
            let mut cur = x.clone();
            for gi in gs.iter().rev() {
                cur = gl2_act(gi, &cur);
            }
            cur
        }
        generator => {
            let mut out = ShuffleElem::zero();
            for (w, c) in x.terms() {
                act_word_into(generator, w, c, &mut out);
            }
            out
        }
    }
}

fn act_word_into(g: &GL2Element, w: &Word, c: &Coeff, out: &mut ShuffleElem) {
    let mut states: Vec<(Vec<Letter>, Coeff)> =
        vec![(Vec::with_capacity(w.len()), c.clone())];
    for &l in w.letters() {
        let image = letter_image(g, l);
        let mut next = Vec::with_capacity(states.len() * image.len());
        for (prefix, acc) in &states {
            for (l2, c2) in &image {
                let mut prefix2 = prefix.clone();
                prefix2.push(*l2);
                next.push((prefix2, acc * c2));
            }
        }
        states = next;
    }
    for (letters, acc) in states {
        out.add_term(Word::unchecked(letters), acc);
    }
}
