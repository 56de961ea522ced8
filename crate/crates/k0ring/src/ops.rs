//! Ring operations: products, powers, and symmetric/exterior powers, all
//! computed through the character polynomial and decomposed back.

use crate::character::{decompose_character, CharacterPoly};
use crate::class::K0Class;
use crate::error::K0Error;

/// The product of two classes: characters multiply, and the result decomposes
/// uniquely into irreducibles.
pub fn mul(x: &K0Class, y: &K0Class) -> K0Class {
    let product = CharacterPoly::of_class(x).mul(&CharacterPoly::of_class(y));
    decompose_character(&product).expect("products of characters stay decomposable")
}

/// The `n`-fold product; `power(x, 0)` is the unit class.
pub fn power(x: &K0Class, n: u32) -> K0Class {
    let c = CharacterPoly::of_class(x);
    let mut acc = CharacterPoly::one();
    for _ in 0..n {
        acc = acc.mul(&c);
    }
    decompose_character(&acc).expect("powers of characters stay decomposable")
}

/// Characters of all symmetric powers `Sym^0..Sym^n` via the Newton identity
/// `n·h_n = Σ_{i=1..n} h_{n-i}·p_i` on Adams power sums.
fn sym_characters(c: &CharacterPoly, n: u32) -> Vec<CharacterPoly> {
    let power_sums: Vec<CharacterPoly> =
        (1..=n as i64).map(|k| c.adams(k)).collect();
    let mut h = vec![CharacterPoly::one()];
    for m in 1..=n as usize {
        let mut acc = CharacterPoly::zero();
        for i in 1..=m {
            acc = acc.add(&h[m - i].mul(&power_sums[i - 1]));
        }
        h.push(acc.divide_exact(m as i64));
    }
    h
}

/// Characters of all exterior powers `Λ^0..Λ^n` via
/// `n·e_n = Σ_{i=1..n} (-1)^(i-1) e_{n-i}·p_i`.
fn ext_characters(c: &CharacterPoly, n: u32) -> Vec<CharacterPoly> {
    let power_sums: Vec<CharacterPoly> =
        (1..=n as i64).map(|k| c.adams(k)).collect();
    let mut e = vec![CharacterPoly::one()];
    for m in 1..=n as usize {
        let mut acc = CharacterPoly::zero();
        for i in 1..=m {
            let term = e[m - i].mul(&power_sums[i - 1]);
            acc = if i % 2 == 1 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        e.push(acc.divide_exact(m as i64));
    }
    e
}

/// The class of the `n`-th symmetric power of a genuine representation class.
pub fn sym_power(x: &K0Class, n: u32) -> Result<K0Class, K0Error> {
    if !x.is_representation() {
        return Err(K0Error::VirtualClass);
    }
    let h = sym_characters(&CharacterPoly::of_class(x), n);
    decompose_character(&h[n as usize])
}

/// The class of the `n`-th exterior power of a genuine representation class.
pub fn ext_power(x: &K0Class, n: u32) -> Result<K0Class, K0Error> {
    if !x.is_representation() {
        return Err(K0Error::VirtualClass);
    }
    let e = ext_characters(&CharacterPoly::of_class(x), n);
    decompose_character(&e[n as usize])
}
