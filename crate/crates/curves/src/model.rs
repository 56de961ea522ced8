//! Long-form Weierstrass models and their classical invariants.

use crate::error::CurveError;
use crate::rational::{rational, Rational};
use num_traits::Zero;

/// A smooth plane cubic `y² + a1·x·y + a3·y = x³ + a2·x² + a4·x + a6` with
/// exact rational coefficients.
///
/// The constructor rejects singular coefficient tuples, so every value of
/// this type has a nonzero discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassModel {
    a1: Rational,
    a2: Rational,
    a3: Rational,
    a4: Rational,
    a6: Rational,
}

impl WeierstrassModel {
    /// Builds a model from its five coefficients, rejecting singular tuples.
    pub fn new(
        a1: Rational,
        a2: Rational,
        a3: Rational,
        a4: Rational,
        a6: Rational,
    ) -> Result<Self, CurveError> {
        let model = Self { a1, a2, a3, a4, a6 };
        if model.discriminant().is_zero() {
            return Err(CurveError::SingularModel);
        }
        Ok(model)
    }

    /// Convenience constructor for integer coefficients.
    pub fn from_integers(a1: i64, a2: i64, a3: i64, a4: i64, a6: i64) -> Result<Self, CurveError> {
        Self::new(
            rational(a1),
            rational(a2),
            rational(a3),
            rational(a4),
            rational(a6),
        )
    }

    /// The coefficients `(a1, a2, a3, a4, a6)` in standard order.
    pub fn coefficients(&self) -> [&Rational; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    /// Coefficient of `x·y`.
    pub fn a1(&self) -> &Rational {
        &self.a1
    }

    /// Coefficient of `x²`.
    pub fn a2(&self) -> &Rational {
        &self.a2
    }

    /// Coefficient of `y`.
    pub fn a3(&self) -> &Rational {
        &self.a3
    }

    /// Coefficient of `x`.
    pub fn a4(&self) -> &Rational {
        &self.a4
    }

    /// Constant coefficient.
    pub fn a6(&self) -> &Rational {
        &self.a6
    }

    /// The quantities `(b2, b4, b6, b8)` of the completed square
    /// `(2y + a1·x + a3)² = 4x³ + b2·x² + 2·b4·x + b6`.
    pub fn b_invariants(&self) -> (Rational, Rational, Rational, Rational) {
        let b2 = &self.a1 * &self.a1 + rational(4) * &self.a2;
        let b4 = rational(2) * &self.a4 + &self.a1 * &self.a3;
        let b6 = &self.a3 * &self.a3 + rational(4) * &self.a6;
        let b8 = &self.a1 * &self.a1 * &self.a6 + rational(4) * &self.a2 * &self.a6
            - &self.a1 * &self.a3 * &self.a4
            + &self.a2 * &self.a3 * &self.a3
            - &self.a4 * &self.a4;
        (b2, b4, b6, b8)
    }

    /// The invariant `c4 = b2² − 24·b4`.
    pub fn c4(&self) -> Rational {
        let (b2, b4, _, _) = self.b_invariants();
        &b2 * &b2 - rational(24) * b4
    }

    /// The invariant `c6 = −b2³ + 36·b2·b4 − 216·b6`.
    pub fn c6(&self) -> Rational {
        let (b2, b4, b6, _) = self.b_invariants();
        -(&b2 * &b2 * &b2) + rational(36) * &b2 * b4 - rational(216) * b6
    }

    /// The discriminant `−b2²·b8 − 8·b4³ − 27·b6² + 9·b2·b4·b6`.
    pub fn discriminant(&self) -> Rational {
        let (b2, b4, b6, b8) = self.b_invariants();
        -(&b2 * &b2 * &b8) - rational(8) * &b4 * &b4 * &b4 - rational(27) * &b6 * &b6
            + rational(9) * &b2 * &b4 * &b6
    }

    /// The j-invariant `c4³ / Δ`.
    pub fn j_invariant(&self) -> Rational {
        let c4 = self.c4();
        &c4 * &c4 * &c4 / self.discriminant()
    }

    /// True when all five coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coefficients().iter().all(|a| a.is_integer())
    }

    /// Right-hand side `x³ + a2·x² + a4·x + a6` at `x`.
    pub fn rhs(&self, x: &Rational) -> Rational {
        ((x + &self.a2) * x + &self.a4) * x + &self.a6
    }

    /// The defining polynomial `y² + a1·x·y + a3·y − (x³ + a2·x² + a4·x + a6)`;
    /// zero exactly on points of the model.
    pub fn equation(&self, x: &Rational, y: &Rational) -> Rational {
        y * y + &self.a1 * x * y + &self.a3 * y - self.rhs(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn rejects_singular_tuples() {
        // A cuspidal cubic and a nodal cubic both fail the discriminant test.
        assert_eq!(
            WeierstrassModel::from_integers(0, 0, 0, 0, 0),
            Err(CurveError::SingularModel)
        );
        assert_eq!(
            WeierstrassModel::from_integers(0, 1, 0, 0, 0),
            Err(CurveError::SingularModel)
        );
    }

    #[test]
    fn invariants_of_the_bundled_minimal_models() {
        let first = WeierstrassModel::from_integers(0, 1, 0, -9, 7).unwrap();
        assert_eq!(first.discriminant(), rational(8192));
        assert_eq!(first.c4(), rational(448));

        let second = WeierstrassModel::from_integers(1, 1, 0, -2, 0).unwrap();
        let (b2, b4, b6, b8) = second.b_invariants();
        assert_eq!(
            (b2, b4, b6, b8),
            (rational(5), rational(-4), rational(0), rational(-4))
        );
        assert_eq!(second.discriminant(), rational(612));
        assert_eq!(second.c4(), rational(121));
        assert_eq!(second.c6(), rational(-845));
        assert_eq!(second.j_invariant(), ratio(1771561, 612));
    }

    #[test]
    fn classical_identity_between_invariants() {
        // 1728·Δ = c4³ − c6² on a handful of models.
        for (a1, a2, a3, a4, a6) in [(0, 1, 0, -9, 7), (1, 1, 0, -2, 0), (1, 1, 1, 0, 0), (0, 0, 0, 4, 1)] {
            let m = WeierstrassModel::from_integers(a1, a2, a3, a4, a6).unwrap();
            let c4 = m.c4();
            let c6 = m.c6();
            assert_eq!(
                rational(1728) * m.discriminant(),
                &c4 * &c4 * &c4 - &c6 * &c6
            );
        }
    }

    #[test]
    fn equation_vanishes_exactly_on_points() {
        let m = WeierstrassModel::from_integers(0, 1, 0, -9, 7).unwrap();
        assert!(m.equation(&ratio(29, 4), &ratio(-155, 8)).is_zero());
        assert!(!m.equation(&ratio(29, 4), &ratio(155, 4)).is_zero());
    }
}
