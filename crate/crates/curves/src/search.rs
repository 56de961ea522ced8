//! Exhaustive search for S-integral points under an explicit height bound.

use crate::error::CurveError;
use crate::model::WeierstrassModel;
use crate::point::RationalPoint;
use crate::rational::{denominator_supported, is_prime, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

/// Bounds for the search grid `x = m/d²`: numerators satisfy
/// `|m| ≤ numerator`, denominator bases satisfy `d ≤ denominator`, and
/// `d = 1` (integral `x`) is always admitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeightBound {
    /// Largest admitted `|m|`.
    pub numerator: u64,
    /// Largest admitted denominator base `d`.
    pub denominator: u64,
}

/// A grid ample for the known-point lists of the bundled curves.
pub const DEFAULT_BOUND: HeightBound = HeightBound {
    numerator: 10_000_000,
    denominator: 1024,
};

/// Squares modulo 64, the cheap pre-filter of the integer fast path.
const SQUARES_MOD_64: [bool; 64] = {
    let mut table = [false; 64];
    let mut k = 0;
    while k < 64 {
        table[k * k % 64] = true;
        k += 1;
    }
    table
};

/// Searches for affine points with S-integral coordinates.
///
/// The grid is `x = m/d²` with `d` a product of powers of primes in `s`
/// (plus integral `x` via `d = 1`) within `bound`; for each candidate the
/// curve equation is solved for `y` exactly. The search is exhaustive over
/// the grid but makes no completeness claim beyond it. Points return sorted
/// by `(x, y)`.
pub fn search_s_integral_points(
    model: &WeierstrassModel,
    s: &[u64],
    bound: HeightBound,
) -> Result<Vec<RationalPoint>, CurveError> {
    let s: Vec<u64> = BTreeSet::from_iter(s.iter().copied()).into_iter().collect();
    for &p in &s {
        if !is_prime(p) {
            return Err(CurveError::NotPrime { n: p });
        }
    }
    let denominators = smooth_denominators(&s, bound.denominator);
    let mut points = match integer_profile(model, bound) {
        Some(profile) => striped_integer_search(&profile, &s, &denominators, bound),
        None => rational_search(model, &s, &denominators, bound),
    };
    points.sort();
    Ok(points)
}

/// All products of powers of the primes in `s` up to `cap`, ascending,
/// always including 1.
fn smooth_denominators(s: &[u64], cap: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for &p in s {
        let mut extended = out.clone();
        for &d in &out {
            let mut v = d;
            while v <= cap / p {
                v *= p;
                extended.push(v);
            }
        }
        out = extended;
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Integer coefficients of the completed square `(2y + a1·x + a3)² =
/// 4x³ + b2·x² + 2·b4·x + b6`, available when the model is integral and the
/// bound keeps every intermediate inside `i128`.
struct IntegerProfile {
    a1: i128,
    a3: i128,
    b2: i128,
    twice_b4: i128,
    b6: i128,
}

fn integer_profile(model: &WeierstrassModel, bound: HeightBound) -> Option<IntegerProfile> {
    if !model.is_integral() {
        return None;
    }
    let int = |q: &Rational| q.to_integer();
    let (b2, b4, b6, _) = model.b_invariants();
    let profile = IntegerProfile {
        a1: int(model.a1()).to_i128()?,
        a3: int(model.a3()).to_i128()?,
        b2: int(&b2).to_i128()?,
        twice_b4: (BigInt::from(2) * int(&b4)).to_i128()?,
        b6: int(&b6).to_i128()?,
    };
    // Worst-case magnitude of 4m³ + b2·m²d² + 2b4·m·d⁴ + b6·d⁶ over the
    // grid, with headroom; overflow risk routes to the big-integer path.
    let n = BigInt::from(bound.numerator);
    let d = BigInt::from(bound.denominator.max(1));
    let worst = BigInt::from(4) * n.pow(3)
        + BigInt::from(profile.b2.abs()) * n.pow(2) * d.pow(2)
        + BigInt::from(profile.twice_b4.abs()) * &n * d.pow(4)
        + BigInt::from(profile.b6.abs()) * d.pow(6)
        + BigInt::from(profile.a1.abs() + profile.a3.abs()) * &n * d.pow(3);
    if worst > BigInt::from(i128::MAX / 8) {
        return None;
    }
    Some(profile)
}

/// The integer fast path, striped across worker threads by denominator.
fn striped_integer_search(
    profile: &IntegerProfile,
    s: &[u64],
    denominators: &[u64],
    bound: HeightBound,
) -> Vec<RationalPoint> {
    let workers = std::thread::available_parallelism()
        .map(usize::from)
        .unwrap_or(4)
        .min(denominators.len())
        .max(1);
    let stripes: Vec<Vec<u64>> = (0..workers)
        .map(|w| {
            denominators
                .iter()
                .copied()
                .skip(w)
                .step_by(workers)
                .collect()
        })
        .collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = stripes
            .iter()
            .map(|stripe| scope.spawn(move || integer_stripe(profile, s, stripe, bound)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("search worker panicked"))
            .collect()
    })
}

/// Scans all numerators for each denominator of one stripe.
fn integer_stripe(
    profile: &IntegerProfile,
    s: &[u64],
    stripe: &[u64],
    bound: HeightBound,
) -> Vec<RationalPoint> {
    let mut found = Vec::new();
    let n_max = bound.numerator as i64;
    for &d in stripe {
        let d_primes: Vec<i64> = s.iter().map(|&p| p as i64).filter(|&p| d as i64 % p == 0).collect();
        let di = d as i128;
        let (d2, d3) = (di * di, di * di * di);
        let (d4, d6) = (d2 * d2, d3 * d3);
        let (c2, c1, c0) = (profile.b2 * d2, profile.twice_b4 * d4, profile.b6 * d6);
        // The same cubic reduced mod 64 for the square pre-filter.
        let (c2m, c1m, c0m) = (
            c2.rem_euclid(64) as u64,
            c1.rem_euclid(64) as u64,
            c0.rem_euclid(64) as u64,
        );
        for m in -n_max..=n_max {
            if !d_primes.is_empty() && d_primes.iter().any(|&p| m % p == 0) {
                continue;
            }
            let mm = m.rem_euclid(64) as u64;
            let residue = (4 * mm * mm * mm + c2m * mm * mm + c1m * mm + c0m) % 64;
            if !SQUARES_MOD_64[residue as usize] {
                continue;
            }
            let mi = m as i128;
            let square = ((4 * mi + c2) * mi + c1) * mi + c0;
            if square < 0 {
                continue;
            }
            let root = (square as u128).isqrt();
            if root * root != square as u128 {
                continue;
            }
            emit_hits(profile, mi, di, d2, d3, root as i128, &mut found);
        }
    }
    found
}

/// Converts a perfect-square hit into the one or two affine points above it.
fn emit_hits(
    profile: &IntegerProfile,
    m: i128,
    d: i128,
    d2: i128,
    d3: i128,
    root: i128,
    found: &mut Vec<RationalPoint>,
) {
    let shift = profile.a1 * m * d + profile.a3 * d3;
    let signs: &[i128] = if root == 0 { &[1] } else { &[1, -1] };
    for sign in signs {
        let numerator = sign * root - shift;
        if numerator & 1 != 0 {
            continue;
        }
        let x = Rational::new(BigInt::from(m), BigInt::from(d2));
        let y = Rational::new(BigInt::from(numerator / 2), BigInt::from(d3));
        found.push(RationalPoint::affine(x, y));
    }
}

/// The big-integer fallback: same grid, exact rational arithmetic, with an
/// explicit S-integrality check on `y`.
fn rational_search(
    model: &WeierstrassModel,
    s: &[u64],
    denominators: &[u64],
    bound: HeightBound,
) -> Vec<RationalPoint> {
    let mut found = Vec::new();
    let two = Rational::from_integer(2.into());
    for &d in denominators {
        let d_primes: Vec<i64> = s
            .iter()
            .map(|&p| p as i64)
            .filter(|&p| d as i64 % p == 0)
            .collect();
        let d_sq = BigInt::from(d) * BigInt::from(d);
        for m in -(bound.numerator as i64)..=(bound.numerator as i64) {
            if d_primes.iter().any(|&p| m % p == 0) {
                continue;
            }
            let x = Rational::new(BigInt::from(m), d_sq.clone());
            let linear = model.a1() * &x + model.a3();
            let disc = &linear * &linear + Rational::from_integer(4.into()) * model.rhs(&x);
            if disc.is_negative() {
                continue;
            }
            let Some(root) = rational_sqrt(&disc) else {
                continue;
            };
            let signs: &[i64] = if root.is_zero() { &[1] } else { &[1, -1] };
            for &sign in signs {
                let y = (Rational::from_integer(sign.into()) * &root - &linear) / &two;
                if denominator_supported(&y, s) {
                    debug_assert!(model.equation(&x, &y).is_zero());
                    found.push(RationalPoint::affine(x.clone(), y));
                }
            }
        }
    }
    found
}

/// Exact square root of a nonnegative rational, if one exists.
fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let num = q.numer().sqrt();
    let den = q.denom().sqrt();
    if &(&num * &num) == q.numer() && &(&den * &den) == q.denom() {
        Some(Rational::new(num, den))
    } else {
        None
    }
}
