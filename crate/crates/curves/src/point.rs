//! Exact rational points on a Weierstrass model.

use crate::model::WeierstrassModel;
use crate::rational::{rational, Rational};
use num_traits::Zero;
use std::fmt;

/// A rational point: an exact affine pair, or the point at infinity
/// `[0 : 1 : 0]`.
///
/// The derived ordering sorts affine points by `(x, y)` and places the point
/// at infinity last, which is the normal form used for emitted point lists.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum RationalPoint {
    /// A finite point `(x, y)`.
    Affine {
        /// First affine coordinate.
        x: Rational,
        /// Second affine coordinate.
        y: Rational,
    },
    /// The point at infinity.
    Infinity,
}

impl RationalPoint {
    /// The affine point `(x, y)`.
    pub fn affine(x: Rational, y: Rational) -> Self {
        Self::Affine { x, y }
    }

    /// The affine point `(x, y)` from integer coordinates.
    pub fn from_integers(x: i64, y: i64) -> Self {
        Self::affine(rational(x), rational(y))
    }

    /// True for the point at infinity.
    pub fn is_infinity(&self) -> bool {
        matches!(self, Self::Infinity)
    }

    /// The affine coordinates, or `None` at infinity.
    pub fn xy(&self) -> Option<(&Rational, &Rational)> {
        match self {
            Self::Affine { x, y } => Some((x, y)),
            Self::Infinity => None,
        }
    }

    /// Exact test that the point lies on `model` (infinity always does).
    pub fn satisfies(&self, model: &WeierstrassModel) -> bool {
        match self {
            Self::Affine { x, y } => model.equation(x, y).is_zero(),
            Self::Infinity => true,
        }
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Affine { x, y } => write!(f, "({x}, {y})"),
            Self::Infinity => write!(f, "infinity"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn membership_is_exact() {
        let m = WeierstrassModel::from_integers(1, 1, 0, -2, 0).unwrap();
        assert!(RationalPoint::affine(ratio(121, 64), ratio(-1881, 512)).satisfies(&m));
        assert!(!RationalPoint::affine(ratio(121, 64), ratio(-1881, 511)).satisfies(&m));
        assert!(RationalPoint::Infinity.satisfies(&m));
    }

    #[test]
    fn ordering_sorts_by_coordinates_with_infinity_last() {
        let mut pts = vec![
            RationalPoint::Infinity,
            RationalPoint::from_integers(2, -1),
            RationalPoint::from_integers(-3, 4),
            RationalPoint::from_integers(2, 1),
            RationalPoint::affine(ratio(29, 4), ratio(-155, 8)),
        ];
        pts.sort();
        assert_eq!(
            pts,
            vec![
                RationalPoint::from_integers(-3, 4),
                RationalPoint::from_integers(2, -1),
                RationalPoint::from_integers(2, 1),
                RationalPoint::affine(ratio(29, 4), ratio(-155, 8)),
                RationalPoint::Infinity,
            ]
        );
    }

    #[test]
    fn display_formats() {
        assert_eq!(
            RationalPoint::affine(ratio(29, 4), ratio(-155, 8)).to_string(),
            "(29/4, -155/8)"
        );
        assert_eq!(RationalPoint::Infinity.to_string(), "infinity");
    }
}
