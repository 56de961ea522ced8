//! Polynomials in the coordinates `w1, w2, w3` with shuffle-algebra
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;

use shuffle::{gl2_act, shuffle_product, Coeff, GL2Element, ShuffleElem, ShuffleError};

/// Exponents `(i, j, k)` of the coordinate monomial `w1^i w2^j w3^k`.
pub type WMonomial = (u32, u32, u32);

/// The weight of a coordinate monomial: `w1, w2, w3` weigh 1, 2, 3.
pub fn wmonomial_weight(m: WMonomial) -> u32 {
    m.0 + 2 * m.1 + 3 * m.2
}

/// A sparse polynomial in `w1, w2, w3` whose coefficients are shuffle-algebra
/// elements; zero coefficients are never stored.
///
/// Evaluating a source word of weight `n` yields a polynomial in which every
/// monomial weight plus every coefficient word weight equals `n`; the
/// `is_homogeneous` check makes that invariant testable.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WPolynomial {
    terms: BTreeMap<WMonomial, ShuffleElem>,
}

impl WPolynomial {
    /// The zero polynomial.
    pub fn zero() -> WPolynomial {
        WPolynomial::default()
    }

    /// The constant polynomial 1 (unit monomial, empty-word coefficient).
    pub fn one() -> WPolynomial {
        WPolynomial::term((0, 0, 0), ShuffleElem::one())
    }

    /// A single term `monomial · coefficient`.
    pub fn term(m: WMonomial, coefficient: ShuffleElem) -> WPolynomial {
        let mut p = WPolynomial::zero();
        p.add_term(m, coefficient);
        p
    }

    /// Whether the polynomial is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over `(monomial, coefficient)` pairs in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&WMonomial, &ShuffleElem)> {
        self.terms.iter()
    }

    /// The coefficient of a monomial (zero if absent).
    pub fn coeff_of(&self, m: WMonomial) -> ShuffleElem {
        self.terms.get(&m).cloned().unwrap_or_else(ShuffleElem::zero)
    }

    /// Adds `monomial · coefficient` in place.
    pub fn add_term(&mut self, m: WMonomial, coefficient: ShuffleElem) {
        if coefficient.is_zero() {
            return;
        }
        let entry = match self.terms.remove(&m) {
            Some(existing) => &existing + &coefficient,
            None => coefficient,
        };
        if !entry.is_zero() {
            self.terms.insert(m, entry);
        }
    }

    /// The sum of two polynomials.
    pub fn add(&self, other: &WPolynomial) -> WPolynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, c.clone());
        }
        out
    }

    /// The difference of two polynomials.
    pub fn sub(&self, other: &WPolynomial) -> WPolynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, -c);
        }
        out
    }

    /// The polynomial scaled by a rational.
    pub fn scale(&self, c: &Coeff) -> WPolynomial {
        let mut out = WPolynomial::zero();
        for (m, e) in self.terms() {
            out.add_term(*m, e.scale(c));
        }
        out
    }

    /// The polynomial with every coefficient shuffle-multiplied by `e`.
    pub fn scale_elem(&self, e: &ShuffleElem) -> Result<WPolynomial, ShuffleError> {
        let mut out = WPolynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(*m, shuffle_product(c, e)?);
        }
        Ok(out)
    }

    /// The product: monomial exponents add, coefficients shuffle-multiply.
    pub fn mul(&self, other: &WPolynomial) -> Result<WPolynomial, ShuffleError> {
        let mut out = WPolynomial::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                let m = (m1.0 + m2.0, m1.1 + m2.1, m1.2 + m2.2);
                out.add_term(m, shuffle_product(c1, c2)?);
            }
        }
        Ok(out)
    }

    /// Whether this has the shape of evaluating a weight-`weight` source:
    /// every `w`-monomial has that weight, and so does every word in its
    /// coefficient (so the combined degree of each term is `2·weight`).
    pub fn is_homogeneous(&self, weight: u32) -> bool {
        self.terms.iter().all(|(m, e)| {
            wmonomial_weight(*m) == weight && e.terms().all(|(w, _)| w.weight() == weight)
        })
    }
}

/// Applies a GL2 generator to every coefficient; the coordinates `w1, w2,
/// w3` themselves are fixed by the action.
pub fn gl2_act_w(g: &GL2Element, p: &WPolynomial) -> WPolynomial {
    let mut out = WPolynomial::zero();
    for (m, c) in p.terms() {
        out.add_term(*m, gl2_act(g, c));
    }
    out
}

impl fmt::Display for WPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j, k), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts = Vec::new();
            for (name, e) in [("w1", i), ("w2", j), ("w3", k)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            if parts.is_empty() {
                parts.push("1".to_string());
            }
            write!(f, "{}*({})", parts.join("*"), c)?;
        }
        Ok(())
    }
}
