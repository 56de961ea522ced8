//! Coordinate changes between Weierstrass models.

use crate::error::CurveError;
use crate::model::WeierstrassModel;
use crate::point::RationalPoint;
use crate::rational::{rational, Rational};
use num_traits::Zero;

/// The substitution `(x, y) = (u²x′ + r, u³y′ + s·u²x′ + t)` with `u ≠ 0`.
///
/// Applied to a model in the primed coordinates it produces the model
/// satisfied by the image points; transforms compose with [`then`] and invert
/// with [`invert`].
///
/// [`then`]: ModelTransform::then
/// [`invert`]: ModelTransform::invert
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelTransform {
    u: Rational,
    r: Rational,
    s: Rational,
    t: Rational,
}

impl ModelTransform {
    /// Builds a transform, rejecting `u = 0`.
    pub fn new(u: Rational, r: Rational, s: Rational, t: Rational) -> Result<Self, CurveError> {
        if u.is_zero() {
            return Err(CurveError::ZeroScale);
        }
        Ok(Self { u, r, s, t })
    }

    /// Convenience constructor for integer parameters.
    pub fn from_integers(u: i64, r: i64, s: i64, t: i64) -> Result<Self, CurveError> {
        Self::new(rational(u), rational(r), rational(s), rational(t))
    }

    /// The identity substitution `(1, 0, 0, 0)`.
    pub fn identity() -> Self {
        Self::from_integers(1, 0, 0, 0).expect("u = 1 is nonzero")
    }

    /// The parameters `(u, r, s, t)`.
    pub fn parameters(&self) -> [&Rational; 4] {
        [&self.u, &self.r, &self.s, &self.t]
    }

    /// The inverse substitution `(1/u, −r/u², −s/u, (s·r − t)/u³)`.
    pub fn invert(&self) -> Self {
        let u2 = &self.u * &self.u;
        let u3 = &u2 * &self.u;
        Self {
            u: rational(1) / &self.u,
            r: -(&self.r / &u2),
            s: -(&self.s / &self.u),
            t: (&self.s * &self.r - &self.t) / u3,
        }
    }

    /// `self` followed by `other`, as a single substitution.
    pub fn then(&self, other: &Self) -> Self {
        let u2sq = &other.u * &other.u;
        let u2cb = &u2sq * &other.u;
        Self {
            u: &self.u * &other.u,
            r: &u2sq * &self.r + &other.r,
            s: &self.s * &other.u + &other.s,
            t: &u2cb * &self.t + &other.s * &u2sq * &self.r + &other.t,
        }
    }
}

/// Applies `transform` to `model`: the returned model is the one satisfied
/// by the images under [`map_point`] of the input model's points.
pub fn apply_transform(model: &WeierstrassModel, transform: &ModelTransform) -> WeierstrassModel {
    let [a1p, a2p, a3p, a4p, a6p] = model.coefficients();
    let ModelTransform { u, r, s, t } = transform;
    let u2 = u * u;
    let u3 = &u2 * u;
    let u4 = &u2 * &u2;
    let u6 = &u4 * &u2;

    let a1 = u * a1p - rational(2) * s;
    let a2 = &u2 * a2p + s * &a1 + s * s - rational(3) * r;
    let a3 = &u3 * a3p - r * &a1 - rational(2) * t;
    let a4 = &u4 * a4p + s * &a3 + rational(2) * s * t - rational(2) * r * &a2
        + (t + r * s) * &a1
        - rational(3) * r * r;
    let a6 = &u6 * a6p - r * &a4 - r * r * &a2 - r * r * r + t * &a3 + t * t + r * t * &a1;

    WeierstrassModel::new(a1, a2, a3, a4, a6)
        .expect("a nonzero rescaling preserves a nonzero discriminant")
}

/// The image `(u²x′ + r, u³y′ + s·u²x′ + t)` of a point; infinity is fixed.
pub fn map_point(point: &RationalPoint, transform: &ModelTransform) -> RationalPoint {
    let ModelTransform { u, r, s, t } = transform;
    match point.xy() {
        None => RationalPoint::Infinity,
        Some((x, y)) => {
            let u2 = u * u;
            let u3 = &u2 * u;
            RationalPoint::affine(&u2 * x + r, u3 * y + s * &u2 * x + t)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn rejects_zero_scale() {
        assert_eq!(
            ModelTransform::from_integers(0, 1, 2, 3),
            Err(CurveError::ZeroScale)
        );
    }

    #[test]
    fn identity_fixes_models_and_points() {
        let m = WeierstrassModel::from_integers(1, 1, 0, -2, 0).unwrap();
        let id = ModelTransform::identity();
        assert_eq!(apply_transform(&m, &id), m);
        let p = RationalPoint::affine(ratio(121, 64), ratio(913, 512));
        assert_eq!(map_point(&p, &id), p);
        assert_eq!(map_point(&RationalPoint::Infinity, &id), RationalPoint::Infinity);
    }

    #[test]
    fn stated_inverses() {
        let first = ModelTransform::from_integers(6, 12, 0, 0).unwrap();
        assert_eq!(
            first.invert(),
            ModelTransform::new(ratio(1, 6), ratio(-1, 3), rational(0), rational(0)).unwrap()
        );
        let second = ModelTransform::from_integers(6, 15, 3, 0).unwrap();
        assert_eq!(
            second.invert(),
            ModelTransform::new(ratio(1, 6), ratio(-5, 12), ratio(-1, 2), ratio(5, 24)).unwrap()
        );
    }

    #[test]
    fn inverse_composes_to_the_identity() {
        let t = ModelTransform::new(ratio(-1, 2), ratio(7, 3), rational(-4), ratio(5, 6)).unwrap();
        assert_eq!(t.then(&t.invert()), ModelTransform::identity());
        assert_eq!(t.invert().then(&t), ModelTransform::identity());
    }

    #[test]
    fn composition_matches_pointwise_composition() {
        let t1 = ModelTransform::from_integers(2, -3, 1, 5).unwrap();
        let t2 = ModelTransform::new(ratio(1, 2), rational(4), ratio(-2, 3), rational(0)).unwrap();
        let p = RationalPoint::affine(ratio(3, 7), ratio(-2, 5));
        assert_eq!(
            map_point(&map_point(&p, &t1), &t2),
            map_point(&p, &t1.then(&t2))
        );
        let m = WeierstrassModel::from_integers(0, 1, 0, -9, 7).unwrap();
        assert_eq!(
            apply_transform(&apply_transform(&m, &t1), &t2),
            apply_transform(&m, &t1.then(&t2))
        );
    }

    #[test]
    fn transformed_points_satisfy_the_transformed_model() {
        let m = WeierstrassModel::from_integers(1, 1, 0, -2, 0).unwrap();
        let t = ModelTransform::from_integers(6, 15, 3, 0).unwrap();
        let image = apply_transform(&m, &t);
        for (x, y) in [(-2, 0), (-2, 2), (0, 0), (2, -4)] {
            let p = RationalPoint::from_integers(x, y);
            assert!(p.satisfies(&m));
            assert!(map_point(&p, &t).satisfies(&image));
        }
    }

    #[test]
    fn scaling_laws_for_invariants() {
        let m = WeierstrassModel::from_integers(0, 1, 0, -9, 7).unwrap();
        let t = ModelTransform::from_integers(6, 12, 0, 0).unwrap();
        let image = apply_transform(&m, &t);
        let u = rational(6);
        let u4 = &u * &u * &u * &u;
        let u6 = &u4 * &u * &u;
        let u12 = &u6 * &u6;
        assert_eq!(image.c4(), u4 * m.c4());
        assert_eq!(image.c6(), u6 * m.c6());
        assert_eq!(image.discriminant(), u12 * m.discriminant());
        assert_eq!(image.j_invariant(), m.j_invariant());
    }
}
