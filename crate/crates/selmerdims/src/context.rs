//! Arithmetic context shared by the dimension functionals.

use crate::error::SelmerError;

/// The base number field and, over an imaginary quadratic field, whether the
/// chosen place above `p` is split (so that the completion is the degree-1
/// p-adic field, as the local formulas require).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldProfile {
    /// The rational numbers.
    Rationals,
    /// An imaginary quadratic field.
    ImaginaryQuadratic {
        /// Whether `p` splits, so the completion at the chosen place is the
        /// degree-1 p-adic field.
        split_at_p: bool,
    },
}

impl FieldProfile {
    /// Whether the base field is the rationals.
    pub fn is_rational(&self) -> bool {
        matches!(self, FieldProfile::Rationals)
    }
}

/// The context a dimension evaluation depends on: the rank input at
/// `(a, b) = (1, 0)`, the size of the set `S` of extra places, the number of
/// those places with split multiplicative reduction, and the base field.
///
/// The rank is an input, never computed: it stands for the p-Selmer rank of
/// the elliptic curve, assumed equal to the Mordell-Weil rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelmerContext {
    /// The rank `r`.
    pub rank_r: u32,
    /// The number of places in `S`, all prime to `p`.
    pub s_size: u32,
    /// The number of places in `S` at which the curve has split
    /// multiplicative reduction.
    pub delta_s: u32,
    /// The base field.
    pub field: FieldProfile,
}

impl SelmerContext {
    /// Builds a context, checking `delta_s ≤ s_size`.
    pub fn new(
        rank_r: u32,
        s_size: u32,
        delta_s: u32,
        field: FieldProfile,
    ) -> Result<SelmerContext, SelmerError> {
        if delta_s > s_size {
            return Err(SelmerError::DeltaExceedsS { s_size, delta_s });
        }
        Ok(SelmerContext {
            rank_r,
            s_size,
            delta_s,
            field,
        })
    }

    /// A context for rational points over the rationals: empty `S`.
    pub fn rational(rank_r: u32) -> SelmerContext {
        SelmerContext {
            rank_r,
            s_size: 0,
            delta_s: 0,
            field: FieldProfile::Rationals,
        }
    }

    /// The same context with `S` emptied; the plain functionals are the
    /// `S`-level ones evaluated here.
    pub fn without_s(&self) -> SelmerContext {
        SelmerContext {
            s_size: 0,
            delta_s: 0,
            ..*self
        }
    }
}

/// Local data of a finite place not over `p`, as consumed by the
/// `S`-enlargement increment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlaceData {
    /// The base field the place lives over.
    pub field: FieldProfile,
    /// Whether the curve has potentially good reduction at the place.
    pub potentially_good: bool,
    /// Whether the curve has split multiplicative reduction at the place
    /// itself.
    pub split_multiplicative: bool,
}

impl PlaceData {
    /// Builds place data, rejecting the contradictory combination of
    /// potentially good and split multiplicative reduction.
    pub fn new(
        field: FieldProfile,
        potentially_good: bool,
        split_multiplicative: bool,
    ) -> Result<PlaceData, SelmerError> {
        if potentially_good && split_multiplicative {
            return Err(SelmerError::InconsistentPlace);
        }
        Ok(PlaceData {
            field,
            potentially_good,
            split_multiplicative,
        })
    }

    /// A place of good reduction over the rationals.
    pub fn good_rational() -> PlaceData {
        PlaceData {
            field: FieldProfile::Rationals,
            potentially_good: true,
            split_multiplicative: false,
        }
    }

    /// A place of split multiplicative reduction over the rationals.
    pub fn split_multiplicative_rational() -> PlaceData {
        PlaceData {
            field: FieldProfile::Rationals,
            potentially_good: false,
            split_multiplicative: true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_validation() {
        assert!(SelmerContext::new(1, 2, 2, FieldProfile::Rationals).is_ok());
        assert_eq!(
            SelmerContext::new(0, 1, 2, FieldProfile::Rationals),
            Err(SelmerError::DeltaExceedsS {
                s_size: 1,
                delta_s: 2
            })
        );
    }

    #[test]
    fn without_s_clears_only_s() {
        let ctx = SelmerContext::new(2, 3, 1, FieldProfile::Rationals).unwrap();
        let plain = ctx.without_s();
        assert_eq!(plain.rank_r, 2);
        assert_eq!(plain.s_size, 0);
        assert_eq!(plain.delta_s, 0);
        assert_eq!(plain.field, ctx.field);
    }

    #[test]
    fn place_validation() {
        assert!(PlaceData::new(FieldProfile::Rationals, false, false).is_ok());
        assert_eq!(
            PlaceData::new(FieldProfile::Rationals, true, true),
            Err(SelmerError::InconsistentPlace)
        );
    }
}
