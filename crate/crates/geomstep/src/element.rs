//! Linear combinations of `J`-monomials with shuffle-algebra coefficients
//! and an optional common denominator.

use std::collections::BTreeMap;
use std::fmt;

use cocycle::WPolynomial;
use shuffle::{exact_divide, Letter, ShuffleElem};

use crate::error::GeomError;
use crate::monomial::JMonomial;

/// An element `Σ (γ_m / denominator) · m` over the `J`-monomials, with
/// `γ_m` in the target shuffle algebra.
///
/// The denominator is shared by every coefficient; the denominator-free
/// case stores `1`. Since the algebra is a domain, the element evaluates
/// to zero exactly when the numerator combination does, so vanishing
/// checks never need to divide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CKElement {
    coefficients: BTreeMap<JMonomial, ShuffleElem>,
    denominator: ShuffleElem,
}

impl CKElement {
    /// A denominator-free element; zero coefficients are dropped.
    pub fn new(coefficients: BTreeMap<JMonomial, ShuffleElem>) -> CKElement {
        CKElement::with_denominator(coefficients, ShuffleElem::one())
    }

    /// An element with an explicit common denominator.
    pub fn with_denominator(
        coefficients: BTreeMap<JMonomial, ShuffleElem>,
        denominator: ShuffleElem,
    ) -> CKElement {
        let coefficients = coefficients.into_iter().filter(|(_, g)| !g.is_zero()).collect();
        CKElement {
            coefficients,
            denominator,
        }
    }

    /// The numerator coefficient of a monomial (zero when absent).
    pub fn coefficient(&self, m: &JMonomial) -> ShuffleElem {
        self.coefficients.get(m).cloned().unwrap_or_else(ShuffleElem::zero)
    }

    /// The common denominator (`1` when the element is denominator-free).
    pub fn denominator(&self) -> &ShuffleElem {
        &self.denominator
    }

    /// The monomials with nonzero coefficient, in monomial order.
    pub fn support(&self) -> Vec<JMonomial> {
        self.coefficients.keys().copied().collect()
    }

    /// The stored numerator coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (&JMonomial, &ShuffleElem)> {
        self.coefficients.iter()
    }

    /// The same combination with the denominator cleared (multiplied away).
    pub fn cleared(&self) -> CKElement {
        CKElement {
            coefficients: self.coefficients.clone(),
            denominator: ShuffleElem::one(),
        }
    }

    /// The evaluation of the numerator combination: `Σ γ_m ⧢ eval(m)`.
    pub fn evaluate(&self) -> Result<WPolynomial, GeomError> {
        let mut acc = WPolynomial::zero();
        for (m, g) in &self.coefficients {
            acc = acc.add(&m.evaluate()?.scale_elem(g)?);
        }
        Ok(acc)
    }

    /// Whether the element maps to zero under the evaluation.
    pub fn vanishes(&self) -> Result<bool, GeomError> {
        Ok(self.evaluate()?.is_zero())
    }

    /// One coefficient as a reduced fraction: common `f_pi0` factors are
    /// cancelled between the numerator and the denominator as long as the
    /// division stays exact.
    pub fn reduced_coefficient(&self, m: &JMonomial) -> (ShuffleElem, ShuffleElem) {
        let pi0 = ShuffleElem::from_letters(&[Letter::Pi0]).expect("single letter");
        let mut num = self.coefficient(m);
        let mut den = self.denominator.clone();
        while den != ShuffleElem::one() {
            match (exact_divide(&num, &pi0), exact_divide(&den, &pi0)) {
                (Ok(n2), Ok(d2)) => {
                    num = n2;
                    den = d2;
                }
                _ => break,
            }
        }
        (num, den)
    }
}

impl fmt::Display for CKElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, g) in &self.coefficients {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({g})·{m}")?;
        }
        if self.denominator != ShuffleElem::one() {
            write!(f, " over ({})", self.denominator)?;
        }
        Ok(())
    }
}
