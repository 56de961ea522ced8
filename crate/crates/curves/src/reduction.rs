//! Reduction of models and points modulo a prime, and residue discs.

use crate::error::CurveError;
use crate::model::WeierstrassModel;
use crate::point::RationalPoint;
use crate::rational::{is_prime, reduce_mod};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Largest prime admitted by the quadratic reduced-curve scans.
pub(crate) const SCAN_LIMIT: u64 = 10_000;

/// Checks that `p` is prime and small enough to scan.
pub(crate) fn check_scan_prime(p: u64) -> Result<(), CurveError> {
    if !is_prime(p) {
        return Err(CurveError::NotPrime { n: p });
    }
    if p > SCAN_LIMIT {
        return Err(CurveError::PrimeTooLarge {
            p,
            limit: SCAN_LIMIT,
        });
    }
    Ok(())
}

/// The five coefficients reduced mod `p`, rejecting non-`p`-integral ones
/// with the coefficient named in the diagnostic.
pub(crate) fn reduced_coefficients(
    model: &WeierstrassModel,
    p: u64,
) -> Result<[u64; 5], CurveError> {
    let names = ["a1", "a2", "a3", "a4", "a6"];
    let mut out = [0u64; 5];
    for ((slot, value), name) in out.iter_mut().zip(model.coefficients()).zip(names) {
        *slot = reduce_mod(value, p).ok_or_else(|| CurveError::NonIntegralModel {
            name,
            value: value.to_string(),
            p,
        })?;
    }
    Ok(out)
}

/// Whether the reduction of this model mod `p` is nonsingular.
///
/// This is a statement about the supplied model: a non-minimal model can
/// reduce badly at a prime where some other model of the same curve is good.
pub fn has_good_reduction(model: &WeierstrassModel, p: u64) -> Result<bool, CurveError> {
    if !is_prime(p) {
        return Err(CurveError::NotPrime { n: p });
    }
    reduced_coefficients(model, p)?;
    let disc = reduce_mod(&model.discriminant(), p).expect("integral coefficients give an integral discriminant");
    Ok(disc != 0)
}

/// All affine points of the reduced curve over the field with `p` elements,
/// sorted by `(x, y)`.
///
/// The model may reduce badly; in that case the list includes the singular
/// point.
pub fn reduced_affine_points(
    model: &WeierstrassModel,
    p: u64,
) -> Result<Vec<(u64, u64)>, CurveError> {
    check_scan_prime(p)?;
    let [a1, a2, a3, a4, a6] = reduced_coefficients(model, p)?;
    let pw = p as u128;
    let mut points = Vec::new();
    for x in 0..p {
        let xw = x as u128;
        let rhs = (((xw + a2 as u128) * xw + a4 as u128) % pw * xw + a6 as u128) % pw;
        for y in 0..p {
            let yw = y as u128;
            let lhs = (yw * yw + a1 as u128 * xw % pw * yw + a3 as u128 * yw) % pw;
            if lhs == rhs {
                points.push((x, y));
            }
        }
    }
    Ok(points)
}

/// The trace of Frobenius `a_p = p + 1 − #points(F_p)` of the reduced curve
/// (good reduction required; the count includes the point at infinity).
pub fn trace_of_frobenius(model: &WeierstrassModel, p: u64) -> Result<i64, CurveError> {
    check_scan_prime(p)?;
    if !has_good_reduction(model, p)? {
        return Err(CurveError::BadReduction { p });
    }
    let affine = reduced_affine_points(model, p)?.len() as i64;
    Ok(p as i64 - affine)
}

/// A residue disc: the fiber of reduction mod `p` over one point of the
/// reduced curve.
///
/// The disc labeled `(0, 1)` denotes the point at infinity when that label
/// is absent from the affine points; [`ResidueDisc::is_at_infinity`]
/// distinguishes the two meanings. Discs order by their labels, with an
/// infinity disc after an affine twin of the same label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ResidueDisc {
    p: u64,
    x: u64,
    y: u64,
    at_infinity: bool,
}

impl ResidueDisc {
    /// The reduction prime.
    pub fn prime(&self) -> u64 {
        self.p
    }

    /// The label `(x, y)`: the reduced affine point, or the conventional
    /// label of the disc at infinity.
    pub fn label(&self) -> (u64, u64) {
        (self.x, self.y)
    }

    /// True for the disc of points reducing to infinity.
    pub fn is_at_infinity(&self) -> bool {
        self.at_infinity
    }
}

/// Reduces an affine input point mod `p` after checking that it lies on the
/// model; `Err` for off-model or non-`p`-integral points.
fn reduce_affine_input(
    model: &WeierstrassModel,
    p: u64,
    point: &RationalPoint,
) -> Result<(u64, u64), CurveError> {
    let (x, y) = point.xy().expect("caller handles infinity");
    if !model.equation(x, y).is_zero() {
        return Err(CurveError::PointOffModel {
            point: point.to_string(),
        });
    }
    let reduce = |q| {
        reduce_mod(q, p).ok_or_else(|| CurveError::NonIntegralPoint {
            point: point.to_string(),
            p,
        })
    };
    Ok((reduce(x)?, reduce(y)?))
}

/// Partitions `points` into the residue discs of the reduced curve mod `p`,
/// a prime of good reduction for the supplied model.
///
/// Keys run over every disc of the reduced curve, so some member lists may
/// be empty; values are indices into `points`, ascending. Every `p`-integral
/// input lies in exactly one disc; non-integral inputs are rejected with a
/// diagnostic naming the point.
pub fn residue_disc_partition(
    model: &WeierstrassModel,
    p: u64,
    points: &[RationalPoint],
) -> Result<BTreeMap<ResidueDisc, Vec<usize>>, CurveError> {
    check_scan_prime(p)?;
    if !has_good_reduction(model, p)? {
        return Err(CurveError::BadReduction { p });
    }
    let affine = reduced_affine_points(model, p)?;
    let mut discs: BTreeMap<ResidueDisc, Vec<usize>> = BTreeMap::new();
    for &(x, y) in &affine {
        discs.insert(
            ResidueDisc {
                p,
                x,
                y,
                at_infinity: false,
            },
            Vec::new(),
        );
    }
    // The disc at infinity, under its conventional label; an affine point
    // with the same label keeps its own disc and suppresses the extra one
    // unless an input point actually reduces to infinity.
    let infinity_disc = ResidueDisc {
        p,
        x: 0,
        y: 1,
        at_infinity: true,
    };
    if !affine.contains(&(0, 1)) || points.iter().any(RationalPoint::is_infinity) {
        discs.insert(infinity_disc, Vec::new());
    }

    for (index, point) in points.iter().enumerate() {
        let disc = if point.is_infinity() {
            infinity_disc
        } else {
            let (x, y) = reduce_affine_input(model, p, point)?;
            ResidueDisc {
                p,
                x,
                y,
                at_infinity: false,
            }
        };
        discs
            .get_mut(&disc)
            .expect("reduction of an on-model point is on the reduced curve")
            .push(index);
    }
    Ok(discs)
}
