//! The bundled curves with their known-point tables.

use crate::model::WeierstrassModel;
use crate::point::RationalPoint;
use crate::rational::parse_rational;
use crate::transform::{map_point, ModelTransform};
use num_traits::{Signed, ToPrimitive};

/// A bundled curve: minimal model, the change of coordinates to a short
/// model, and the table of known S-integral points with its basepoint.
#[derive(Debug, Clone)]
pub struct CurveRecord {
    label: &'static str,
    minimal: WeierstrassModel,
    to_short: ModelTransform,
    short: WeierstrassModel,
    known_points: Vec<RationalPoint>,
    basepoint: usize,
    rank: u32,
    generator: RationalPoint,
}

impl CurveRecord {
    /// The curve's label.
    pub fn label(&self) -> &'static str {
        self.label
    }

    /// The minimal (long-form) model.
    pub fn minimal(&self) -> &WeierstrassModel {
        &self.minimal
    }

    /// The substitution carrying the minimal model to the short model.
    pub fn to_short(&self) -> &ModelTransform {
        &self.to_short
    }

    /// The short model `y² = x³ + a4·x + a6`.
    pub fn short(&self) -> &WeierstrassModel {
        &self.short
    }

    /// Known points on the minimal model, sorted by `(x, y)`.
    ///
    /// These are the results of the bundled S-integral search (`S = {2}`);
    /// no completeness claim is attached.
    pub fn known_points(&self) -> &[RationalPoint] {
        &self.known_points
    }

    /// The known points carried to the short model, in the same order.
    pub fn short_points(&self) -> Vec<RationalPoint> {
        self.known_points
            .iter()
            .map(|p| map_point(p, &self.to_short))
            .collect()
    }

    /// Index of the distinguished basepoint in the known-point table.
    pub fn basepoint_index(&self) -> usize {
        self.basepoint
    }

    /// The basepoint on the minimal model.
    pub fn basepoint(&self) -> &RationalPoint {
        &self.known_points[self.basepoint]
    }

    /// The Mordell–Weil rank.
    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// A generator of the free part, on the minimal model.
    pub fn generator(&self) -> &RationalPoint {
        &self.generator
    }

    /// The primes dividing the minimal discriminant, ascending.
    pub fn bad_primes(&self) -> Vec<u64> {
        let mut n = self
            .minimal
            .discriminant()
            .to_integer()
            .abs()
            .to_u64()
            .expect("bundled discriminants are small");
        let mut out = Vec::new();
        let mut p = 2;
        while n > 1 {
            if n % p == 0 {
                out.push(p);
                while n % p == 0 {
                    n /= p;
                }
            }
            p += 1;
        }
        out
    }
}

fn pt(x: &str, y: &str) -> RationalPoint {
    RationalPoint::affine(
        parse_rational(x).expect("bundled coordinate"),
        parse_rational(y).expect("bundled coordinate"),
    )
}

/// The two bundled curves.
pub fn bundled() -> Vec<CurveRecord> {
    let first = CurveRecord {
        label: "128a2",
        minimal: WeierstrassModel::from_integers(0, 1, 0, -9, 7).expect("nonsingular"),
        to_short: ModelTransform::from_integers(6, 12, 0, 0).expect("u = 6"),
        short: WeierstrassModel::from_integers(0, 0, 0, -12096, 470016).expect("nonsingular"),
        known_points: vec![
            pt("-3", "-4"),
            pt("-3", "4"),
            pt("-1", "-4"),
            pt("-1", "4"),
            pt("1", "0"),
            pt("2", "-1"),
            pt("2", "1"),
            pt("3", "-4"),
            pt("3", "4"),
            pt("29/4", "-155/8"),
            pt("29/4", "155/8"),
            pt("19", "-84"),
            pt("19", "84"),
        ],
        basepoint: 0,
        rank: 1,
        generator: pt("-1", "-4"),
    };
    let second = CurveRecord {
        label: "102a1",
        minimal: WeierstrassModel::from_integers(1, 1, 0, -2, 0).expect("nonsingular"),
        to_short: ModelTransform::from_integers(6, 15, 3, 0).expect("u = 6"),
        short: WeierstrassModel::from_integers(0, 0, 0, -3267, 45630).expect("nonsingular"),
        known_points: vec![
            pt("-2", "0"),
            pt("-2", "2"),
            pt("-1", "-1"),
            pt("-1", "2"),
            pt("-1/4", "-5/8"),
            pt("-1/4", "7/8"),
            pt("0", "0"),
            pt("1", "-1"),
            pt("1", "0"),
            pt("121/64", "-1881/512"),
            pt("121/64", "913/512"),
            pt("2", "-4"),
            pt("2", "2"),
            pt("8", "-28"),
            pt("8", "20"),
            pt("9", "-33"),
            pt("9", "24"),
            pt("2738", "-144670"),
            pt("2738", "141932"),
        ],
        basepoint: 2,
        rank: 1,
        generator: pt("-1", "-1"),
    };
    vec![first, second]
}

/// Looks up a bundled curve by label.
pub fn lookup(label: &str) -> Option<CurveRecord> {
    bundled().into_iter().find(|c| c.label == label)
}
