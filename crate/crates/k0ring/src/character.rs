//! Symmetric character polynomials and greedy decomposition back into
//! irreducible classes.

use std::collections::BTreeMap;

use crate::class::{IrrClass, K0Class};
use crate::error::K0Error;

/// A sparse symmetric Laurent polynomial in two variables, recording the
/// character of a (virtual) class on the diagonal torus.
///
/// The character of `M_{a,b}` is the complete homogeneous symmetric polynomial
/// of degree `a` times `(x1·x2)^b`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CharacterPoly {
    coeffs: BTreeMap<(i64, i64), i64>,
}

impl CharacterPoly {
    /// The zero polynomial.
    pub fn zero() -> CharacterPoly {
        CharacterPoly::default()
    }

    /// The constant 1.
    pub fn one() -> CharacterPoly {
        let mut out = CharacterPoly::zero();
        out.add_monomial(0, 0, 1);
        out
    }

    /// The character of a single irreducible: monomials
    /// `x1^(a-i+b) x2^(i+b)` for `i = 0..=a`.
    pub fn of_irr(m: &IrrClass) -> CharacterPoly {
        let mut out = CharacterPoly::zero();
        let (a, b) = (m.a as i64, m.b as i64);
        for i in 0..=a {
            out.add_monomial(a - i + b, i + b, 1);
        }
        out
    }

    /// The character of a class, extended linearly.
    pub fn of_class(x: &K0Class) -> CharacterPoly {
        let mut out = CharacterPoly::zero();
        for (m, c) in x.terms() {
            for ((i, j), v) in &CharacterPoly::of_irr(m).coeffs {
                out.add_monomial(*i, *j, v * c);
            }
        }
        out
    }

    /// Whether the polynomial is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The stored monomials `(i, j) -> coefficient`, coefficients never zero.
    pub fn coeffs(&self) -> impl Iterator<Item = (&(i64, i64), &i64)> {
        self.coeffs.iter()
    }

    /// Adds a single monomial in place.
    pub fn add_monomial(&mut self, i: i64, j: i64, c: i64) {
        if c == 0 {
            return;
        }
        let sum = self.coeffs.remove(&(i, j)).unwrap_or(0) + c;
        if sum != 0 {
            self.coeffs.insert((i, j), sum);
        }
    }

    /// Whether the polynomial is symmetric under swapping the variables.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&(i, j), &c)| self.coeffs.get(&(j, i)) == Some(&c))
    }

    /// Sum of polynomials.
    pub fn add(&self, other: &CharacterPoly) -> CharacterPoly {
        let mut out = self.clone();
        for (&(i, j), &c) in &other.coeffs {
            out.add_monomial(i, j, c);
        }
        out
    }

    /// Difference of polynomials.
    pub fn sub(&self, other: &CharacterPoly) -> CharacterPoly {
        let mut out = self.clone();
        for (&(i, j), &c) in &other.coeffs {
            out.add_monomial(i, j, -c);
        }
        out
    }

    /// Integer scalar multiple.
    pub fn scale(&self, n: i64) -> CharacterPoly {
        if n == 0 {
            return CharacterPoly::zero();
        }
        let coeffs = self.coeffs.iter().map(|(k, c)| (*k, c * n)).collect();
        CharacterPoly { coeffs }
    }

    /// Exact division of every coefficient by `n`; panics on indivisibility,
    /// which would indicate an internal error in a power-sum recursion.
    pub(crate) fn divide_exact(&self, n: i64) -> CharacterPoly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(k, c)| {
                assert!(c % n == 0, "non-integral character coefficient");
                (*k, c / n)
            })
            .collect();
        CharacterPoly { coeffs }
    }

    /// Product of polynomials (convolution of exponents).
    pub fn mul(&self, other: &CharacterPoly) -> CharacterPoly {
        let mut out = CharacterPoly::zero();
        for (&(i1, j1), &c1) in &self.coeffs {
            for (&(i2, j2), &c2) in &other.coeffs {
                out.add_monomial(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    /// The Adams operation: every monomial exponent scales by `k`.
    pub fn adams(&self, k: i64) -> CharacterPoly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&(i, j), &c)| ((k * i, k * j), c))
            .collect();
        CharacterPoly { coeffs }
    }

    /// Evaluation at `x1 = x2 = 1`, i.e. the virtual dimension.
    pub fn dim(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

/// Writes a symmetric character as the unique integer combination of
/// irreducible characters, by greedy subtraction of the leading term.
///
/// The leading monomial of `char(M_{a,b})` in lexicographic order is
/// `x1^(a+b) x2^b`, so the largest remaining monomial `(i, j)` must come from
/// `a = i - j`, `b = j`. A remainder forcing `a < 0`, or a non-symmetric
/// input, is an error.
pub fn decompose_character(c: &CharacterPoly) -> Result<K0Class, K0Error> {
    if !c.is_symmetric() {
        return Err(K0Error::NonSymmetricCharacter);
    }
    let mut rem = c.clone();
    let mut out = K0Class::zero();
    while let Some((&(i, j), &mult)) = rem.coeffs.last_key_value() {
        if i < j {
            return Err(K0Error::NotExpressible);
        }
        let a = u32::try_from(i - j).map_err(|_| K0Error::NotExpressible)?;
        let b = i32::try_from(j).map_err(|_| K0Error::NotExpressible)?;
        let m = IrrClass::new(a, b);
        rem = rem.sub(&CharacterPoly::of_irr(&m).scale(mult));
        debug_assert!(rem.coeffs.last_key_value().map_or(true, |(k, _)| *k < (i, j)));
        out.add_term(m, mult);
    }
    Ok(out)
}
