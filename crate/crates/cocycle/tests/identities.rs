//! The displayed weight ≤ 3 evaluations, their covariance and recursion
//! properties, and the solver-versus-table cross-check.

use std::collections::BTreeMap;

use cocycle::{
    evaluate_elem, evaluate_j, evaluate_word, gl2_act_w, phi_coefficient,
    solve_equivariant_cocycles, verify_recursion, JCoordinate, WPolynomial,
};
use shuffle::Letter::{E0, E1, Pi0, Pi1};
use shuffle::{coeff, gl2_act, Alphabet, GL2Element, Letter, ShuffleElem, Word};

const W1: (u32, u32, u32) = (1, 0, 0);
const W2: (u32, u32, u32) = (0, 1, 0);
const W3: (u32, u32, u32) = (0, 0, 1);
const W11: (u32, u32, u32) = (2, 0, 0);
const W12: (u32, u32, u32) = (1, 1, 0);
const W111: (u32, u32, u32) = (3, 0, 0);

fn word(letters: &[Letter]) -> Word {
    Word::new(letters.to_vec()).unwrap()
}

fn wpoly(terms: &[((u32, u32, u32), &str)]) -> WPolynomial {
    let mut p = WPolynomial::zero();
    for (m, text) in terms {
        p.add_term(*m, text.parse().unwrap());
    }
    p
}

fn source_words() -> Vec<Word> {
    (1..=3)
        .flat_map(|n| Word::all_of_weight(Alphabet::E, n))
        .collect()
}

#[test]
fn kronecker_coefficients_in_weight_one() {
    for (i, e) in [(0, E0), (1, E1)] {
        for (j, pi) in [(0, Pi0), (1, Pi1)] {
            let got = phi_coefficient(&Word::letter(e), &Word::letter(pi)).unwrap();
            let want = if i == j {
                BTreeMap::from([(W1, coeff(1))])
            } else {
                BTreeMap::new()
            };
            assert_eq!(got, want, "phi_e{i}^pi{j}");
        }
    }
}

#[test]
fn displayed_weight_one_and_two_forms() {
    assert_eq!(
        evaluate_word(&word(&[E0])).unwrap(),
        wpoly(&[(W1, "pi0")])
    );
    assert_eq!(
        evaluate_word(&word(&[E1])).unwrap(),
        wpoly(&[(W1, "pi1")])
    );
    assert_eq!(
        evaluate_word(&word(&[E0, E1])).unwrap(),
        wpoly(&[(W11, "pi0.pi1"), (W2, "tau")])
    );
    assert_eq!(
        evaluate_word(&word(&[E1, E0])).unwrap(),
        wpoly(&[(W11, "pi1.pi0"), (W2, "-tau")])
    );
}

#[test]
fn displayed_weight_three_forms() {
    assert_eq!(
        evaluate_word(&word(&[E0, E1, E0])).unwrap(),
        wpoly(&[
            (W111, "pi0.pi1.pi0"),
            (W12, "tau.pi0 - pi0.tau"),
            (W3, "sigma0"),
        ])
    );
    assert_eq!(
        evaluate_word(&word(&[E1, E0, E1])).unwrap(),
        wpoly(&[
            (W111, "pi1.pi0.pi1"),
            (W12, "pi1.tau - tau.pi1"),
            (W3, "-sigma1"),
        ])
    );
    // The doubled form fixes the w1w2 part as tau.pi1, not pi1.tau: the
    // latter would break multiplicativity against pi1 ⧢ tau.
    let doubled = evaluate_word(&word(&[E0, E1, E1])).unwrap().scale(&coeff(2));
    assert_eq!(
        doubled,
        wpoly(&[
            (W111, "2*pi0.pi1.pi1"),
            (W12, "2*tau.pi1"),
            (W3, "sigma1"),
        ])
    );
    assert_ne!(
        doubled,
        wpoly(&[
            (W111, "2*pi0.pi1.pi1"),
            (W12, "2*pi1.tau"),
            (W3, "sigma1"),
        ])
    );
}

#[test]
fn weight_three_forms_are_shuffle_consistent() {
    // c#(e0) · c#(e1 ⧢ e1) together with c#(e0e1 + e1e0) determines every
    // mixed weight-3 evaluation; spot-check the product route directly.
    let lhs = evaluate_elem(
        &shuffle::shuffle_product(
            &ShuffleElem::from_letters(&[E0]).unwrap(),
            &ShuffleElem::from_letters(&[E1, E1]).unwrap(),
        )
        .unwrap(),
    )
    .unwrap();
    let rhs = evaluate_word(&word(&[E0]))
        .unwrap()
        .mul(&evaluate_word(&word(&[E1, E1])).unwrap())
        .unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn sigma_projection_has_no_mixed_term() {
    // In the first three-letter form the w3-part is exactly sigma0; a
    // sigma1 admixture is ruled out by unipotent covariance.
    let p = evaluate_word(&word(&[E0, E1, E0])).unwrap();
    assert_eq!(p.coeff_of(W3), "sigma0".parse().unwrap());
    let image = gl2_act_w(&GL2Element::N, &p);
    let n_source = gl2_act(
        &GL2Element::N,
        &ShuffleElem::from_letters(&[E0, E1, E0]).unwrap(),
    );
    assert_eq!(image, evaluate_elem(&n_source).unwrap());
}

#[test]
fn covariance_under_all_generators() {
    let generators = [GL2Element::S, GL2Element::N, GL2Element::torus(2, 3)];
    for lam in source_words() {
        let p = evaluate_word(&lam).unwrap();
        for g in &generators {
            let lhs = gl2_act_w(g, &p);
            let rhs = evaluate_elem(&gl2_act(g, &ShuffleElem::from_word(lam.clone()))).unwrap();
            assert_eq!(lhs, rhs, "covariance of {lam} under {g:?}");
        }
    }
}

#[test]
fn evaluations_are_homogeneous() {
    assert!(evaluate_word(&Word::empty()).unwrap().is_homogeneous(0));
    for lam in source_words() {
        assert!(
            evaluate_word(&lam).unwrap().is_homogeneous(lam.weight()),
            "inhomogeneous evaluation of {lam}"
        );
    }
}

#[test]
fn pi_projection_recovers_the_source_word() {
    // Reading off the pure w1-power coefficient replaces each e_i by pi_i.
    for lam in source_words() {
        let n = lam.weight();
        let projected: Vec<Letter> = lam
            .letters()
            .iter()
            .map(|l| match l {
                E0 => Pi0,
                E1 => Pi1,
                other => panic!("unexpected letter {other:?}"),
            })
            .collect();
        assert_eq!(
            evaluate_word(&lam).unwrap().coeff_of((n, 0, 0)),
            ShuffleElem::from_letters(&projected).unwrap()
        );
    }
}

#[test]
fn recursion_identities() {
    let lam = word(&[E0, E1, E0]);
    assert_eq!(
        phi_coefficient(&lam, &word(&[Letter::Tau, Pi0])).unwrap(),
        BTreeMap::from([(W12, coeff(1))])
    );
    assert_eq!(
        phi_coefficient(&lam, &word(&[Pi0, Letter::Tau])).unwrap(),
        BTreeMap::from([(W12, coeff(-1))])
    );
    for n in 0..=2u32 {
        for lam in Word::all_of_weight(Alphabet::E, n) {
            for w in Word::all_of_weight(Alphabet::A, n) {
                assert!(
                    verify_recursion(&lam, &w).unwrap(),
                    "recursion fails at ({lam}, {w})"
                );
            }
        }
    }
}

#[test]
fn j_coordinate_evaluations() {
    assert_eq!(evaluate_j(JCoordinate::J1), wpoly(&[(W1, "pi0")]));
    assert_eq!(
        evaluate_j(JCoordinate::J2),
        wpoly(&[(W11, "pi0.pi1"), (W2, "tau")])
    );
    assert_eq!(
        evaluate_j(JCoordinate::J3),
        wpoly(&[
            (W111, "pi0.pi1.pi0"),
            (W12, "tau.pi0 - pi0.tau"),
            (W3, "sigma0"),
        ])
    );
    assert_eq!(
        evaluate_j(JCoordinate::J4),
        wpoly(&[
            (W111, "pi0.pi1.pi1"),
            (W12, "tau.pi1"),
            (W3, "1/2*sigma1"),
            (W1, "2*pi1"),
        ])
    );
}

#[test]
fn solver_matches_the_closed_forms() {
    let family = solve_equivariant_cocycles(3).unwrap();
    assert_eq!(family.parameters(), &[W1, W2, W3]);
    assert_eq!(family.closed_form(&Word::empty()), WPolynomial::one());
    for lam in source_words() {
        assert_eq!(
            family.closed_form(&lam),
            evaluate_word(&lam).unwrap(),
            "solver disagrees with the table at {lam}"
        );
    }
}

#[test]
fn solver_slices_are_stable_under_truncation() {
    let partial = solve_equivariant_cocycles(2).unwrap();
    let full = solve_equivariant_cocycles(3).unwrap();
    assert_eq!(partial.parameters(), &[W1, W2]);
    for n in 1..=2 {
        for lam in Word::all_of_weight(Alphabet::E, n) {
            for w in Word::all_of_weight(Alphabet::A, n) {
                assert_eq!(partial.phi(&lam, &w), full.phi(&lam, &w));
            }
        }
    }
}
