//! Special-fiber classification at primes of bad reduction.

use crate::error::CurveError;
use crate::model::WeierstrassModel;
use crate::point::RationalPoint;
use crate::rational::{mod_pow, reduce_mod};
use crate::reduction::{check_scan_prime, reduced_coefficients};
use num_traits::Zero;
use std::collections::BTreeSet;

/// The reduction type of a `p`-integral model at `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionType {
    /// The reduced curve is nonsingular.
    Good,
    /// The reduced curve has a node (`p ∤ c4`).
    Multiplicative,
    /// The reduced curve has a cusp (`p | c4`).
    Additive,
}

/// Classifies the reduction of the supplied model at `p` by the standard
/// discriminant/`c4` dichotomy.
pub fn reduction_type(model: &WeierstrassModel, p: u64) -> Result<ReductionType, CurveError> {
    check_scan_prime(p)?;
    reduced_coefficients(model, p)?;
    let disc = reduce_mod(&model.discriminant(), p).expect("integral discriminant");
    if disc != 0 {
        return Ok(ReductionType::Good);
    }
    let c4 = reduce_mod(&model.c4(), p).expect("integral c4");
    if c4 != 0 {
        Ok(ReductionType::Multiplicative)
    } else {
        Ok(ReductionType::Additive)
    }
}

/// The unique singular point of the reduced curve mod `p`, or `None` for
/// good reduction.
pub(crate) fn singular_point(
    model: &WeierstrassModel,
    p: u64,
) -> Result<Option<(u64, u64)>, CurveError> {
    check_scan_prime(p)?;
    let [a1, a2, a3, a4, a6] = reduced_coefficients(model, p)?.map(i128::from);
    let pw = i128::from(p);
    let mut found = Vec::new();
    for x in 0..pw {
        for y in 0..pw {
            let on_curve = (y * y + a1 * x % pw * y + a3 * y
                - ((x + a2) * x % pw + a4) * x
                - a6)
                .rem_euclid(pw);
            let df_dx = (a1 * y - (3 * x + 2 * a2) * x - a4).rem_euclid(pw);
            let df_dy = (2 * y + a1 * x + a3).rem_euclid(pw);
            if on_curve == 0 && df_dx == 0 && df_dy == 0 {
                found.push((x as u64, y as u64));
            }
        }
    }
    debug_assert!(found.len() <= 1, "a Weierstrass cubic has at most one singular point");
    Ok(found.first().copied())
}

/// The two-class partition of points by their reduction at a bad prime.
///
/// At a prime of multiplicative reduction the reduced curve has one node;
/// points reducing onto it land in the exceptional class, all others in the
/// smooth-locus class. At a good prime everything is smooth and the
/// exceptional class is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberPartition {
    p: u64,
    singular: Option<(u64, u64)>,
    smooth: Vec<usize>,
    exceptional: Vec<usize>,
}

impl FiberPartition {
    /// The classification prime.
    pub fn prime(&self) -> u64 {
        self.p
    }

    /// The node of the reduced curve, when reduction is multiplicative.
    pub fn singular_point(&self) -> Option<(u64, u64)> {
        self.singular
    }

    /// Indices of input points reducing into the smooth locus, ascending.
    pub fn smooth(&self) -> &[usize] {
        &self.smooth
    }

    /// Indices of input points reducing onto the node, ascending.
    pub fn exceptional(&self) -> &[usize] {
        &self.exceptional
    }
}

/// Partitions `points` by component of the special fiber at `v`.
///
/// Requires multiplicative (or good) reduction of the supplied model;
/// additive reduction is rejected. Points must satisfy the model and be
/// `v`-integral.
pub fn classify_at_bad_prime(
    model: &WeierstrassModel,
    v: u64,
    points: &[RationalPoint],
) -> Result<FiberPartition, CurveError> {
    let singular = match reduction_type(model, v)? {
        ReductionType::Additive => return Err(CurveError::AdditiveReduction { p: v }),
        ReductionType::Good => None,
        ReductionType::Multiplicative => {
            Some(singular_point(model, v)?.expect("a nodal reduction has its node"))
        }
    };
    let mut partition = FiberPartition {
        p: v,
        singular,
        smooth: Vec::new(),
        exceptional: Vec::new(),
    };
    for (index, point) in points.iter().enumerate() {
        let class = match point.xy() {
            // Infinity always reduces into the smooth locus.
            None => &mut partition.smooth,
            Some((x, y)) => {
                if !model.equation(x, y).is_zero() {
                    return Err(CurveError::PointOffModel {
                        point: point.to_string(),
                    });
                }
                let reduce = |q| {
                    reduce_mod(q, v).ok_or_else(|| CurveError::NonIntegralPoint {
                        point: point.to_string(),
                        p: v,
                    })
                };
                if singular == Some((reduce(x)?, reduce(y)?)) {
                    &mut partition.exceptional
                } else {
                    &mut partition.smooth
                }
            }
        };
        class.push(index);
    }
    Ok(partition)
}

/// Whether the node of the reduced curve at `v` has rational tangent slopes
/// (split multiplicative reduction).
///
/// Requires multiplicative reduction of the supplied model at `v`; good and
/// additive reduction are rejected.
pub fn is_split_multiplicative(model: &WeierstrassModel, v: u64) -> Result<bool, CurveError> {
    match reduction_type(model, v)? {
        ReductionType::Good => return Err(CurveError::GoodReduction { p: v }),
        ReductionType::Additive => return Err(CurveError::AdditiveReduction { p: v }),
        ReductionType::Multiplicative => {}
    }
    let (x0, _) = singular_point(model, v)?.expect("a nodal reduction has its node");
    let [a1, a2, _, _, _] = reduced_coefficients(model, v)?;
    // Tangent directions at the node (X, Y) = (x − x0, y − y0) solve
    // Y² + a1·X·Y − (3·x0 + a2)·X² = 0; the node is split exactly when the
    // two directions are rational.
    if v == 2 {
        // In residue characteristic 2 the form is Y² + X·Y + c·X² with
        // c = x0 + a2; it splits exactly when c = 0.
        return Ok((x0 + a2) % 2 == 0);
    }
    let disc = (u128::from(a1) * u128::from(a1) + 4 * (3 * u128::from(x0) + u128::from(a2)))
        % u128::from(v);
    debug_assert!(disc != 0, "a degenerate tangent form would be a cusp");
    Ok(mod_pow(disc as u64, (v - 1) / 2, v) == 1)
}

/// The split-multiplicative count over a set of primes, with the skipped
/// members (those of good or additive reduction) retained as warnings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSummary {
    delta: usize,
    skipped: Vec<u64>,
}

impl DeltaSummary {
    /// How many primes of the set are split multiplicative.
    pub fn delta(&self) -> usize {
        self.delta
    }

    /// The primes skipped because the model is good or additive there.
    pub fn skipped(&self) -> &[u64] {
        &self.skipped
    }
}

/// Counts split-multiplicative members of `s` for this model, skipping (and
/// reporting) members of good or additive reduction.
pub fn delta_s(model: &WeierstrassModel, s: &[u64]) -> Result<DeltaSummary, CurveError> {
    let mut summary = DeltaSummary {
        delta: 0,
        skipped: Vec::new(),
    };
    for &v in &BTreeSet::from_iter(s.iter().copied()) {
        match is_split_multiplicative(model, v) {
            Ok(true) => summary.delta += 1,
            Ok(false) => {}
            Err(CurveError::GoodReduction { .. }) | Err(CurveError::AdditiveReduction { .. }) => {
                summary.skipped.push(v)
            }
            Err(other) => return Err(other),
        }
    }
    Ok(summary)
}
