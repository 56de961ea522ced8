//! Closed-form Selmer dimensions for a single irreducible class `M_{a,b}`.

use crate::context::{FieldProfile, PlaceData, SelmerContext};
use crate::error::SelmerError;

/// The global Selmer dimension `d_{a,b}` with `S` empty.
///
/// Covered range: weight `-a - 2b ≤ -2` with `b ≥ 0`, excluding `(0, 1)`,
/// plus the convention `d_{1,0} = rank_r`. Over the rationals the value is
/// `(a-1)/2` for `a` odd and `b = 0`, `a/2 - 1` for `a` even and `b = 0`,
/// `(a+1)/2` for `a` odd and `b ≥ 1`, `a/2` for `a` and `b` even with
/// `b ≥ 1`, and `a/2 + 1` for `a` even and `b` odd. Over an imaginary
/// quadratic field the value is `a - 1` for `b = 0` and `a + 1` for `b ≥ 1`.
pub fn d_global(a: u32, b: i32, ctx: &SelmerContext) -> Result<i64, SelmerError> {
    if (a, b) == (1, 0) {
        return Ok(i64::from(ctx.rank_r));
    }
    let weight = -i64::from(a) - 2 * i64::from(b);
    if b < 0 || weight > -2 || (a, b) == (0, 1) {
        return Err(SelmerError::UncoveredGlobal { a, b });
    }
    let a = i64::from(a);
    let b = i64::from(b);
    Ok(match ctx.field {
        FieldProfile::Rationals => {
            if a % 2 == 1 {
                if b == 0 {
                    (a - 1) / 2
                } else {
                    (a + 1) / 2
                }
            } else if b == 0 {
                a / 2 - 1
            } else if b % 2 == 0 {
                a / 2
            } else {
                a / 2 + 1
            }
        }
        FieldProfile::ImaginaryQuadratic { .. } => {
            if b == 0 {
                a - 1
            } else {
                a + 1
            }
        }
    })
}

/// The local Selmer dimension `l_{a,b}` at a place over `p` whose completion
/// is the degree-1 p-adic field: `a` for `b = 0` and `a + 1` for `b ≥ 1`.
///
/// Covered range: weight `-a - 2b < 0` with `b ≥ 0`. Over an imaginary
/// quadratic field the place over `p` must be split.
pub fn l_local(a: u32, b: i32, ctx: &SelmerContext) -> Result<i64, SelmerError> {
    if let FieldProfile::ImaginaryQuadratic { split_at_p: false } = ctx.field {
        return Err(SelmerError::NonSplitCompletion);
    }
    let weight = -i64::from(a) - 2 * i64::from(b);
    if b < 0 || weight >= 0 {
        return Err(SelmerError::UncoveredLocal { a, b });
    }
    Ok(if b == 0 {
        i64::from(a)
    } else {
        i64::from(a) + 1
    })
}

/// The `S`-level global Selmer dimension `d^S_{a,b}`, where `S` is a set of
/// places prime to `p`.
///
/// Covered range beyond `d_global`: `d^S_{1,0} = rank_r` always;
/// `d^S_{0,1} = |S|` over the rationals; `d^S_{1,1} = 1 + delta_s` over the
/// rationals; `b ≥ 2` is independent of `S`. Pairs whose `S`-dependence is
/// not determined (notably `(2, 0)`, and `b ∈ {0, 1}` with `a ≥ 2` at
/// unconstrained places) are rejected for nonempty `S` and fall back to
/// `d_global` when `S` is empty.
pub fn d_s(a: u32, b: i32, ctx: &SelmerContext) -> Result<i64, SelmerError> {
    match (a, b) {
        (1, 0) => Ok(i64::from(ctx.rank_r)),
        (0, 1) => match ctx.field {
            FieldProfile::Rationals => Ok(i64::from(ctx.s_size)),
            FieldProfile::ImaginaryQuadratic { .. } if ctx.s_size == 0 => Ok(0),
            FieldProfile::ImaginaryQuadratic { .. } => Err(SelmerError::UncoveredWithS { a, b }),
        },
        (1, 1) => match ctx.field {
            FieldProfile::Rationals => Ok(1 + i64::from(ctx.delta_s)),
            FieldProfile::ImaginaryQuadratic { .. } if ctx.s_size == 0 => d_global(a, b, ctx),
            FieldProfile::ImaginaryQuadratic { .. } => Err(SelmerError::UncoveredWithS { a, b }),
        },
        _ if b >= 2 => d_global(a, b, ctx),
        _ if ctx.s_size == 0 => d_global(a, b, ctx),
        _ => Err(SelmerError::UncoveredWithS { a, b }),
    }
}

/// The increment of `d^S_{a,b}` when `S` is enlarged by one place not
/// over `p`.
///
/// Covered cases: `(1, 0)` and `b ≥ 2` never change; `(0, 1)` gains 1 over
/// the rationals at any place; `(1, 1)` gains 1 exactly at places of split
/// multiplicative reduction; any other pair with `b ∈ {0, 1}` and weight
/// different from `-2` is unchanged at places of potentially good reduction.
/// The remaining combinations — `(2, 0)` anywhere, and `b ∈ {0, 1}` with
/// `a ≥ 2` at places that are not potentially good — are rejected: at such
/// places the fixed part controlling the increment is not pinned down by the
/// weight criteria alone.
pub fn d_change_under_place(a: u32, b: i32, place: &PlaceData) -> Result<i64, SelmerError> {
    let weight = -i64::from(a) - 2 * i64::from(b);
    match (a, b) {
        (1, 0) => Ok(0),
        (0, 1) => match place.field {
            FieldProfile::Rationals => Ok(1),
            FieldProfile::ImaginaryQuadratic { .. } => Err(SelmerError::UncoveredChange { a, b }),
        },
        (1, 1) => Ok(i64::from(place.split_multiplicative)),
        _ if b >= 2 => Ok(0),
        _ if b >= 0 && place.potentially_good && weight != -2 => Ok(0),
        _ => Err(SelmerError::UncoveredChange { a, b }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rank_r: u32) -> SelmerContext {
        SelmerContext::rational(rank_r)
    }

    fn imq(rank_r: u32) -> SelmerContext {
        SelmerContext::new(
            rank_r,
            0,
            0,
            FieldProfile::ImaginaryQuadratic { split_at_p: true },
        )
        .unwrap()
    }

    #[test]
    fn d_table_over_rationals() {
        let ctx = q(0);
        let table = [
            ((2, 0), 0),
            ((3, 0), 1),
            ((1, 1), 1),
            ((0, 2), 0),
            ((2, 1), 2),
            ((4, 0), 1),
            ((1, 2), 1),
            ((3, 1), 2),
            ((5, 0), 2),
        ];
        for ((a, b), expected) in table {
            assert_eq!(d_global(a, b, &ctx), Ok(expected), "d_{{{a},{b}}}");
        }
    }

    #[test]
    fn d_table_over_imaginary_quadratic() {
        let ctx = imq(0);
        let table = [
            ((2, 0), 1),
            ((3, 0), 2),
            ((1, 1), 2),
            ((0, 2), 1),
            ((2, 1), 3),
            ((4, 0), 3),
            ((1, 2), 2),
            ((3, 1), 4),
            ((5, 0), 4),
        ];
        for ((a, b), expected) in table {
            assert_eq!(d_global(a, b, &ctx), Ok(expected), "d_{{{a},{b}}}");
        }
    }

    #[test]
    fn d_rank_convention_and_rejections() {
        assert_eq!(d_global(1, 0, &q(3)), Ok(3));
        assert_eq!(d_global(1, 0, &imq(2)), Ok(2));
        assert_eq!(
            d_global(0, 1, &q(0)),
            Err(SelmerError::UncoveredGlobal { a: 0, b: 1 })
        );
        assert_eq!(
            d_global(0, 0, &q(0)),
            Err(SelmerError::UncoveredGlobal { a: 0, b: 0 })
        );
        assert_eq!(
            d_global(4, -1, &q(0)),
            Err(SelmerError::UncoveredGlobal { a: 4, b: -1 })
        );
    }

    #[test]
    fn l_table() {
        let ctx = q(0);
        let table = [
            ((1, 0), 1),
            ((0, 1), 1),
            ((2, 0), 2),
            ((3, 0), 3),
            ((1, 1), 2),
            ((0, 2), 1),
            ((2, 1), 3),
            ((4, 0), 4),
            ((1, 2), 2),
            ((3, 1), 4),
            ((5, 0), 5),
        ];
        for ((a, b), expected) in table {
            assert_eq!(l_local(a, b, &ctx), Ok(expected), "l_{{{a},{b}}}");
            assert_eq!(l_local(a, b, &imq(0)), Ok(expected), "l_{{{a},{b}}} split");
        }
    }

    #[test]
    fn l_rejections() {
        assert_eq!(
            l_local(0, 0, &q(0)),
            Err(SelmerError::UncoveredLocal { a: 0, b: 0 })
        );
        assert_eq!(
            l_local(2, -1, &q(0)),
            Err(SelmerError::UncoveredLocal { a: 2, b: -1 })
        );
        let nonsplit = SelmerContext::new(
            0,
            0,
            0,
            FieldProfile::ImaginaryQuadratic { split_at_p: false },
        )
        .unwrap();
        assert_eq!(l_local(1, 0, &nonsplit), Err(SelmerError::NonSplitCompletion));
    }

    #[test]
    fn c_difference_over_rationals() {
        // c_{a,b} = l_{a,b} - d_{a,b}; the (0, 1) entry uses d_{0,1} = 0,
        // which is the S-level value at empty S.
        let ctx = q(2);
        let table = [
            ((1, 0), 1 - 2),
            ((0, 1), 1),
            ((2, 0), 2),
            ((3, 0), 2),
            ((1, 1), 1),
            ((0, 2), 1),
            ((2, 1), 1),
            ((4, 0), 3),
            ((1, 2), 1),
            ((3, 1), 2),
            ((5, 0), 3),
        ];
        for ((a, b), expected) in table {
            let c = l_local(a, b, &ctx).unwrap() - d_s(a, b, &ctx).unwrap();
            assert_eq!(c, expected, "c_{{{a},{b}}}");
        }
    }

    #[test]
    fn c_difference_over_imaginary_quadratic() {
        let ctx = imq(2);
        let table = [
            ((1, 0), 1 - 2),
            ((0, 1), 1),
            ((2, 0), 1),
            ((3, 0), 1),
            ((1, 1), 0),
            ((0, 2), 0),
            ((2, 1), 0),
            ((4, 0), 1),
            ((1, 2), 0),
            ((3, 1), 0),
            ((5, 0), 1),
        ];
        for ((a, b), expected) in table {
            let c = l_local(a, b, &ctx).unwrap() - d_s(a, b, &ctx).unwrap();
            assert_eq!(c, expected, "c_{{{a},{b}}}");
        }
    }

    #[test]
    fn d_s_matrix() {
        let ctx = SelmerContext::new(1, 1, 0, FieldProfile::Rationals).unwrap();
        assert_eq!(d_s(1, 0, &ctx), Ok(1));
        assert_eq!(d_s(0, 1, &ctx), Ok(1));
        assert_eq!(d_s(1, 1, &ctx), Ok(1));
        assert_eq!(d_s(1, 2, &ctx), Ok(1));
        assert_eq!(d_s(0, 2, &ctx), Ok(0));

        let two_split = SelmerContext::new(1, 2, 2, FieldProfile::Rationals).unwrap();
        assert_eq!(d_s(0, 1, &two_split), Ok(2));
        assert_eq!(d_s(1, 1, &two_split), Ok(3));

        // Empty S degenerates to the plain dimensions.
        assert_eq!(d_s(0, 1, &q(0)), Ok(0));
        assert_eq!(d_s(1, 1, &q(0)), Ok(1));
        assert_eq!(d_s(3, 0, &q(0)), Ok(1));
    }

    #[test]
    fn d_s_rejections() {
        let ctx = SelmerContext::new(1, 1, 0, FieldProfile::Rationals).unwrap();
        assert_eq!(
            d_s(2, 0, &ctx),
            Err(SelmerError::UncoveredWithS { a: 2, b: 0 })
        );
        assert_eq!(
            d_s(3, 1, &ctx),
            Err(SelmerError::UncoveredWithS { a: 3, b: 1 })
        );

        let imq_s = SelmerContext::new(
            1,
            1,
            0,
            FieldProfile::ImaginaryQuadratic { split_at_p: true },
        )
        .unwrap();
        assert_eq!(
            d_s(0, 1, &imq_s),
            Err(SelmerError::UncoveredWithS { a: 0, b: 1 })
        );
        assert_eq!(
            d_s(1, 1, &imq_s),
            Err(SelmerError::UncoveredWithS { a: 1, b: 1 })
        );
        // Empty S over an imaginary quadratic field stays covered.
        assert_eq!(d_s(0, 1, &imq(0)), Ok(0));
        assert_eq!(d_s(1, 1, &imq(0)), Ok(2));
    }

    #[test]
    fn change_under_place() {
        let split = PlaceData::split_multiplicative_rational();
        let good = PlaceData::good_rational();
        let nonsplit = PlaceData::new(FieldProfile::Rationals, false, false).unwrap();

        assert_eq!(d_change_under_place(1, 1, &split), Ok(1));
        assert_eq!(d_change_under_place(1, 1, &good), Ok(0));
        assert_eq!(d_change_under_place(1, 1, &nonsplit), Ok(0));
        assert_eq!(d_change_under_place(1, 0, &split), Ok(0));
        assert_eq!(d_change_under_place(0, 1, &good), Ok(1));
        assert_eq!(d_change_under_place(0, 2, &split), Ok(0));
        assert_eq!(d_change_under_place(1, 2, &split), Ok(0));
        assert_eq!(d_change_under_place(3, 1, &good), Ok(0));
        assert_eq!(d_change_under_place(3, 0, &good), Ok(0));
    }

    #[test]
    fn change_rejections() {
        let split = PlaceData::split_multiplicative_rational();
        let good = PlaceData::good_rational();
        let imq_good = PlaceData::new(
            FieldProfile::ImaginaryQuadratic { split_at_p: true },
            true,
            false,
        )
        .unwrap();

        // Weight -2 with a nontrivial symmetric power: the fixed part is not
        // pinned down even at good places.
        assert_eq!(
            d_change_under_place(2, 0, &good),
            Err(SelmerError::UncoveredChange { a: 2, b: 0 })
        );
        // Away from potentially good reduction the Frobenius weights spread
        // over an interval containing -2, so the criterion gives nothing.
        assert_eq!(
            d_change_under_place(3, 1, &split),
            Err(SelmerError::UncoveredChange { a: 3, b: 1 })
        );
        assert_eq!(
            d_change_under_place(0, 1, &imq_good),
            Err(SelmerError::UncoveredChange { a: 0, b: 1 })
        );
    }
}
