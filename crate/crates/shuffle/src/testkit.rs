//! Randomized property suites and value strategies, shared between this
//! crate's tests and downstream acceptance checks.
//!
//! Each suite runs a configurable number of randomized cases and reports the
//! first failure as a string; all checks use exact arithmetic.

use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use crate::elem::{
    coeff_ratio, deconcat_coproduct, full_coproduct, shuffle_product, tensor_shuffle, Coeff,
    ShuffleElem, TensorElem,
};
use crate::gl2::{gl2_act, GL2Element};
use crate::letter::{Alphabet, Letter};
use crate::lyndon::{chen_fox_lyndon, count_lyndon_words, is_lyndon, lyndon_decompose, exact_divide};
use crate::word::Word;

/// A uniformly random letter of one alphabet.
pub fn letter_strategy(alphabet: Alphabet) -> impl Strategy<Value = Letter> {
    proptest::sample::select(alphabet.letters().to_vec())
}

/// A random word over one alphabet, truncated to the length and weight caps.
pub fn word_strategy(
    alphabet: Alphabet,
    max_len: usize,
    max_weight: u32,
) -> impl Strategy<Value = Word> {
    proptest::collection::vec(letter_strategy(alphabet), 0..=max_len).prop_map(move |letters| {
        let mut kept = Vec::new();
        let mut weight = 0;
        for l in letters {
            if weight + l.weight() > max_weight {
                break;
            }
            weight += l.weight();
            kept.push(l);
        }
        Word::new(kept).expect("letters drawn from one alphabet")
    })
}

/// A small exact rational.
pub fn coeff_strategy() -> impl Strategy<Value = Coeff> {
    (-9i64..=9, 1i64..=3).prop_map(|(n, d)| coeff_ratio(n, d))
}

/// A small nonzero exact rational.
pub fn nonzero_coeff_strategy() -> impl Strategy<Value = Coeff> {
    (1i64..=9, 1i64..=3, proptest::bool::ANY).prop_map(|(n, d, negate)| {
        let c = coeff_ratio(n, d);
        if negate {
            -c
        } else {
            c
        }
    })
}

/// A random element over one alphabet with bounded support.
pub fn elem_strategy(
    alphabet: Alphabet,
    max_len: usize,
    max_weight: u32,
    max_terms: usize,
) -> impl Strategy<Value = ShuffleElem> {
    proptest::collection::vec(
        (word_strategy(alphabet, max_len, max_weight), coeff_strategy()),
        0..=max_terms,
    )
    .prop_map(|terms| {
        let mut out = ShuffleElem::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    })
}

fn config(cases: u32) -> Config {
    Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    }
}

type Triples = BTreeMap<(Word, Word, Word), Coeff>;

fn add_triple(map: &mut Triples, key: (Word, Word, Word), c: Coeff) {
    let sum = map.remove(&key).unwrap_or_else(num_traits::Zero::zero) + c;
    if !num_traits::Zero::is_zero(&sum) {
        map.insert(key, sum);
    }
}

fn coassociates(x: &ShuffleElem) -> bool {
    let d = deconcat_coproduct(x);
    let mut lhs = Triples::new();
    let mut rhs = Triples::new();
    for ((l, r), c) in d.terms() {
        for ((a, b), cc) in deconcat_coproduct(&ShuffleElem::from_word(l.clone())).terms() {
            add_triple(&mut lhs, (a.clone(), b.clone(), r.clone()), cc * c);
        }
        for ((a, b), cc) in deconcat_coproduct(&ShuffleElem::from_word(r.clone())).terms() {
            add_triple(&mut rhs, (l.clone(), a.clone(), b.clone()), cc * c);
        }
    }
    lhs == rhs
}

fn act_tensor(g: &GL2Element, t: &TensorElem) -> TensorElem {
    let mut out = TensorElem::zero();
    for ((l, r), c) in t.terms() {
        let left = gl2_act(g, &ShuffleElem::from_word(l.clone()));
        let right = gl2_act(g, &ShuffleElem::from_word(r.clone()));
        for (lw, lc) in left.terms() {
            for (rw, rc) in right.terms() {
                out.add_term(lw.clone(), rw.clone(), lc * rc * c);
            }
        }
    }
    out
}

/// Bialgebra axioms: the full coproduct is an algebra map for the shuffle
/// product, the reduced coproduct is coassociative, and grading is additive.
pub fn bialgebra_suite(cases: u32) -> Result<(), String> {
    let strat = (
        elem_strategy(Alphabet::A, 3, 5, 3),
        elem_strategy(Alphabet::A, 3, 5, 3),
    );
    let mut runner = TestRunner::new(config(cases));
    runner
        .run(&strat, |(x, y)| {
            let xy = shuffle_product(&x, &y).unwrap();
            let lhs = full_coproduct(&xy);
            let rhs = tensor_shuffle(&full_coproduct(&x), &full_coproduct(&y)).unwrap();
            prop_assert_eq!(lhs, rhs, "coproduct of product");
            prop_assert!(coassociates(&x), "coassociativity");
            for m in x.weights() {
                for n in y.weights() {
                    let piece =
                        shuffle_product(&x.pr_weight(m), &y.pr_weight(n)).unwrap();
                    for (w, _) in piece.terms() {
                        prop_assert_eq!(w.weight(), m + n, "grading");
                    }
                }
            }
            Ok(())
        })
        .map_err(|e| format!("bialgebra suite: {e}"))
}

/// Lyndon structure: decomposition round-trips through expansion, and the
/// Chen–Fox–Lyndon factorization is a nonincreasing product of Lyndon words.
pub fn lyndon_roundtrip_suite(cases: u32) -> Result<(), String> {
    let strat = prop_oneof![
        (
            elem_strategy(Alphabet::A, 5, 5, 4),
            word_strategy(Alphabet::A, 6, 6)
        ),
        (
            elem_strategy(Alphabet::E, 5, 5, 4),
            word_strategy(Alphabet::E, 6, 6)
        ),
    ];
    let mut runner = TestRunner::new(config(cases));
    runner
        .run(&strat, |(x, w)| {
            let poly = lyndon_decompose(&x);
            prop_assert_eq!(poly.expand().unwrap(), x, "decompose/expand round-trip");
            let factors = chen_fox_lyndon(&w);
            let mut concatenated = Vec::new();
            for f in &factors {
                prop_assert!(is_lyndon(f.letters()), "factor {} not Lyndon", f);
                concatenated.extend_from_slice(f.letters());
            }
            prop_assert_eq!(concatenated.as_slice(), w.letters(), "factors concatenate");
            for pair in factors.windows(2) {
                prop_assert!(pair[0] >= pair[1], "factors nonincreasing");
            }
            Ok(())
        })
        .map_err(|e| format!("Lyndon round-trip suite: {e}"))
}

/// Exact division: dividing a shuffle product by either factor recovers the
/// other exactly.
pub fn exact_divide_suite(cases: u32) -> Result<(), String> {
    let nonzero_a = elem_strategy(Alphabet::A, 3, 3, 3)
        .prop_filter("nonzero", |e| !e.is_zero());
    let nonzero_a2 = elem_strategy(Alphabet::A, 3, 3, 3)
        .prop_filter("nonzero", |e| !e.is_zero());
    let nonzero_e = elem_strategy(Alphabet::E, 3, 3, 3)
        .prop_filter("nonzero", |e| !e.is_zero());
    let nonzero_e2 = elem_strategy(Alphabet::E, 3, 3, 3)
        .prop_filter("nonzero", |e| !e.is_zero());
    let strat = prop_oneof![(nonzero_a, nonzero_a2), (nonzero_e, nonzero_e2)];
    let mut runner = TestRunner::new(config(cases));
    runner
        .run(&strat, |(y, q)| {
            let x = shuffle_product(&y, &q).unwrap();
            prop_assert!(!x.is_zero(), "integral domain");
            prop_assert_eq!(exact_divide(&x, &y).unwrap(), q.clone(), "quotient by left factor");
            prop_assert_eq!(exact_divide(&x, &q).unwrap(), y, "quotient by right factor");
            Ok(())
        })
        .map_err(|e| format!("exact-divide suite: {e}"))
}

/// Operator relations of the group action: the swap is an involution, the
/// braid relation with the torus holds, torus elements multiply, a conjugated
/// unipotent is a unipotent power, and every generator is a coalgebra-
/// compatible algebra map.
pub fn gl2_relations_suite(cases: u32) -> Result<(), String> {
    let pair = prop_oneof![
        (
            elem_strategy(Alphabet::A, 3, 5, 3),
            elem_strategy(Alphabet::A, 3, 5, 3)
        ),
        (
            elem_strategy(Alphabet::E, 4, 4, 3),
            elem_strategy(Alphabet::E, 4, 4, 3)
        ),
    ];
    let strat = (pair, nonzero_coeff_strategy(), nonzero_coeff_strategy());
    let mut runner = TestRunner::new(config(cases));
    runner
        .run(&strat, |((x, y), x1, x2)| {
            use GL2Element::{Composite, Torus, N, S};

            let ss = Composite(vec![S, S]);
            prop_assert_eq!(gl2_act(&ss, &x), x.clone(), "s squared");

            let braid_lhs = Composite(vec![S, Torus(x1.clone(), x2.clone()), S]);
            prop_assert_eq!(
                gl2_act(&braid_lhs, &x),
                gl2_act(&Torus(x2.clone(), x1.clone()), &x),
                "braid relation"
            );

            let twice = Composite(vec![
                Torus(x1.clone(), x2.clone()),
                Torus(x2.clone(), x1.clone()),
            ]);
            let merged = Torus(&x1 * &x2, &x1 * &x2);
            prop_assert_eq!(gl2_act(&twice, &x), gl2_act(&merged, &x), "torus product");

            let conjugated = Composite(vec![
                GL2Element::torus(2, 1),
                N,
                Torus(coeff_ratio(1, 2), coeff_ratio(1, 1)),
            ]);
            let squared = Composite(vec![N, N]);
            prop_assert_eq!(
                gl2_act(&conjugated, &x),
                gl2_act(&squared, &x),
                "torus-conjugated unipotent"
            );

            for g in [S, N, Torus(x1.clone(), x2.clone())] {
                let product_image = gl2_act(&g, &shuffle_product(&x, &y).unwrap());
                let image_product =
                    shuffle_product(&gl2_act(&g, &x), &gl2_act(&g, &y)).unwrap();
                prop_assert_eq!(product_image, image_product, "algebra map for {:?}", g);

                let coproduct_image = act_tensor(&g, &deconcat_coproduct(&x));
                let image_coproduct = deconcat_coproduct(&gl2_act(&g, &x));
                prop_assert_eq!(
                    coproduct_image,
                    image_coproduct,
                    "coproduct equivariance for {:?}",
                    g
                );
            }
            Ok(())
        })
        .map_err(|e| format!("group-relations suite: {e}"))
}

/// Free-Lie dimension counts: the Möbius/necklace formula for the number of
/// Lyndon words agrees with brute-force enumeration.
pub fn witt_count_suite(cases: u32) -> Result<(), String> {
    let strat = (1usize..=5, 1usize..=7)
        .prop_filter("bounded search space", |(m, k)| {
            (*m as u64).pow(*k as u32) <= 3000
        });
    let mut runner = TestRunner::new(config(cases));
    runner
        .run(&strat, |(m, k)| {
            let brute = brute_force_lyndon_count(m, k);
            prop_assert_eq!(
                brute,
                count_lyndon_words(m as u64, k as u64),
                "alphabet size {} length {}",
                m,
                k
            );
            Ok(())
        })
        .map_err(|e| format!("Witt-count suite: {e}"))
}

/// Counts Lyndon words of length `k` over the first `m` letters of the
/// five-letter alphabet by checking every word.
fn brute_force_lyndon_count(m: usize, k: usize) -> u64 {
    let letters = Alphabet::A.letters();
    let mut indices = vec![0usize; k];
    let mut count = 0u64;
    loop {
        let word: Vec<Letter> = indices.iter().map(|&i| letters[i]).collect();
        if is_lyndon(&word) {
            count += 1;
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return count;
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < m {
                break;
            }
            indices[pos] = 0;
        }
    }
}
