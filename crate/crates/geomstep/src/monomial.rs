//! Monomials in the four polynomial coordinates `J1..J4`.

use std::fmt;

use cocycle::{evaluate_j, JCoordinate, WPolynomial};

use crate::error::GeomError;

/// A monomial `J1^a · J2^b · J3^c · J4^d`, stored by exponent vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JMonomial {
    exps: [u32; 4],
}

impl JMonomial {
    /// The unit monomial.
    pub fn one() -> JMonomial {
        JMonomial { exps: [0; 4] }
    }

    /// A monomial from its exponents on `J1, J2, J3, J4` in order.
    pub const fn new(exps: [u32; 4]) -> JMonomial {
        JMonomial { exps }
    }

    /// The monomial consisting of a single coordinate.
    pub fn coordinate(j: JCoordinate) -> JMonomial {
        let mut exps = [0; 4];
        exps[(j.index() - 1) as usize] = 1;
        JMonomial { exps }
    }

    /// The exponents on `J1, J2, J3, J4`.
    pub fn exponents(&self) -> [u32; 4] {
        self.exps
    }

    /// The total degree in the coordinates.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// The product of two monomials.
    pub fn mul(&self, other: &JMonomial) -> JMonomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e += o;
        }
        JMonomial { exps }
    }

    /// The evaluation of the monomial: the product of the coordinate
    /// evaluations under the universal map.
    pub fn evaluate(&self) -> Result<WPolynomial, GeomError> {
        let mut acc = WPolynomial::one();
        for (j, e) in JCoordinate::all().into_iter().zip(self.exps) {
            for _ in 0..e {
                acc = acc.mul(&evaluate_j(j))?;
            }
        }
        Ok(acc)
    }

    /// The five-monomial shape of the ideal element, in presentation order:
    /// `J4, J3, J1·J2, J1³, J1`.
    pub fn presentation_basis() -> [JMonomial; 5] {
        [
            JMonomial::new([0, 0, 0, 1]),
            JMonomial::new([0, 0, 1, 0]),
            JMonomial::new([1, 1, 0, 0]),
            JMonomial::new([3, 0, 0, 0]),
            JMonomial::new([1, 0, 0, 0]),
        ]
    }
}

impl fmt::Display for JMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps == [0; 4] {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, e) in self.exps.iter().enumerate() {
            if *e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "J{}", i + 1)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_degree() {
        assert_eq!(JMonomial::one().to_string(), "1");
        assert_eq!(JMonomial::new([3, 0, 0, 0]).to_string(), "J1^3");
        assert_eq!(JMonomial::new([1, 1, 0, 0]).to_string(), "J1*J2");
        assert_eq!(JMonomial::new([0, 0, 0, 1]).to_string(), "J4");
        assert_eq!(JMonomial::new([1, 1, 0, 0]).degree(), 2);
    }

    #[test]
    fn products_add_exponents() {
        let j1 = JMonomial::coordinate(JCoordinate::J1);
        let j2 = JMonomial::coordinate(JCoordinate::J2);
        assert_eq!(j1.mul(&j1).mul(&j1), JMonomial::new([3, 0, 0, 0]));
        assert_eq!(j1.mul(&j2), JMonomial::new([1, 1, 0, 0]));
    }

    #[test]
    fn monomial_evaluation_multiplies() {
        let j1 = JMonomial::coordinate(JCoordinate::J1);
        let square = j1.mul(&j1).evaluate().unwrap();
        let by_hand = evaluate_j(JCoordinate::J1)
            .mul(&evaluate_j(JCoordinate::J1))
            .unwrap();
        assert_eq!(square, by_hand);
        assert_eq!(JMonomial::one().evaluate().unwrap(), WPolynomial::one());
    }
}
