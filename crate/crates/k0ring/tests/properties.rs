//! Randomized ring-axiom and character-faithfulness checks.

use proptest::prelude::*;

use k0ring::{
    decompose_character, ext_power, mul, power, sym_power, CharacterPoly, IrrClass, K0Class,
};

/// A random class with bounded indices and small multiplicities.
fn class_strategy(max_a: u32, max_b: i32, max_terms: usize) -> impl Strategy<Value = K0Class> {
    proptest::collection::vec((0..=max_a, -max_b..=max_b, -3i64..=3), 0..=max_terms).prop_map(
        |terms| {
            let mut out = K0Class::zero();
            for (a, b, mult) in terms {
                out.add_term(IrrClass::new(a, b), mult);
            }
            out
        },
    )
}

/// A random genuine representation class (non-negative multiplicities).
fn representation_strategy(max_a: u32, max_terms: usize) -> impl Strategy<Value = K0Class> {
    proptest::collection::vec((0..=max_a, 0i32..=2, 0i64..=2), 0..=max_terms).prop_map(|terms| {
        let mut out = K0Class::zero();
        for (a, b, mult) in terms {
            out.add_term(IrrClass::new(a, b), mult);
        }
        out
    })
}

proptest! {
    /// Commutativity, associativity, and distributivity of the product.
    #[test]
    fn ring_axioms(
        x in class_strategy(4, 2, 3),
        y in class_strategy(4, 2, 3),
        z in class_strategy(4, 2, 3),
    ) {
        prop_assert_eq!(mul(&x, &y), mul(&y, &x));
        prop_assert_eq!(mul(&mul(&x, &y), &z), mul(&x, &mul(&y, &z)));
        prop_assert_eq!(
            mul(&x, &y.add(&z)),
            mul(&x, &y).add(&mul(&x, &z))
        );
    }

    /// Characters are a faithful encoding: decomposition inverts them.
    #[test]
    fn character_faithfulness(x in class_strategy(8, 4, 6)) {
        let back = decompose_character(&CharacterPoly::of_class(&x)).unwrap();
        prop_assert_eq!(back, x);
    }

    /// The linear extension of dimension is multiplicative under the product.
    #[test]
    fn dimension_is_multiplicative(
        x in class_strategy(4, 2, 3),
        y in class_strategy(4, 2, 3),
    ) {
        prop_assert_eq!(mul(&x, &y).dim(), x.dim() * y.dim());
    }

    /// Degreewise inverse relation between symmetric and exterior powers:
    /// Σ_{i+j=n} (-1)^j char(Sym^i x)·char(Λ^j x) = 0 for n ≥ 1.
    #[test]
    fn sym_ext_generating_function(x in representation_strategy(3, 3)) {
        for n in 1u32..=4 {
            let mut acc = CharacterPoly::zero();
            for i in 0..=n {
                let j = n - i;
                let term = CharacterPoly::of_class(&sym_power(&x, i).unwrap())
                    .mul(&CharacterPoly::of_class(&ext_power(&x, j).unwrap()));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            prop_assert!(acc.is_zero(), "degree {} residue nonzero", n);
        }
    }

    /// The two-term ladder rule for multiplying by [M_{1,b1}].
    #[test]
    fn ladder_rule_agreement(b1 in -3i32..=3, k in 0u32..=6, b2 in -3i32..=3) {
        let got = mul(&K0Class::irr(1, b1), &K0Class::irr(k, b2));
        let mut expect = K0Class::term(IrrClass::new(k + 1, b1 + b2), 1);
        if k >= 1 {
            expect.add_term(IrrClass::new(k - 1, b1 + b2 + 1), 1);
        }
        prop_assert_eq!(got, expect);
    }

    /// Pure tensor powers are weight-pure, so the projection keeps everything.
    #[test]
    fn tensor_powers_are_weight_pure(n in 1u32..=5) {
        let p = power(&K0Class::irr(1, 0), n);
        prop_assert_eq!(p.pr_weight(-(n as i64)), p);
    }
}
