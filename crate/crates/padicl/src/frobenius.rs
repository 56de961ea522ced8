//! Frobenius traces and Hensel lifting of the unit root.

use crate::error::PadicError;
use crate::padic::{check_prime, invert_mod, PadicNumber};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// The trace of Frobenius of a curve with good ordinary reduction at `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrobeniusData {
    p: u64,
    ap: i64,
}

impl FrobeniusData {
    /// Validates primality of `p` and ordinarity (`p ∤ a_p`); a trace
    /// divisible by `p` leaves `x² − a_p·x + p` without a unit root.
    pub fn new(p: u64, ap: i64) -> Result<Self, PadicError> {
        check_prime(p)?;
        if ap % (p as i64) == 0 {
            return Err(PadicError::Supersingular { p, ap });
        }
        Ok(Self { p, ap })
    }

    /// The prime.
    pub fn prime(&self) -> u64 {
        self.p
    }

    /// The trace of Frobenius.
    pub fn trace(&self) -> i64 {
        self.ap
    }
}

/// Lifts the unit root `α` of `x² − a_p·x + p` to absolute precision
/// `prec`, starting from `α ≡ a_p (mod p)`.
///
/// The derivative `2α − a_p ≡ a_p (mod p)` is a unit, so Newton's
/// iteration doubles the precision at every step. The result has
/// valuation zero and satisfies `α² − a_p·α + p ≡ 0 (mod p^prec)`.
pub fn hensel_unit_root(fd: &FrobeniusData, prec: u32) -> Result<PadicNumber, PadicError> {
    if prec == 0 {
        return Err(PadicError::InvalidPrecision { prec });
    }
    let p = BigInt::from(fd.p);
    let ap = BigInt::from(fd.ap);
    let mut reached = 1u32;
    let mut alpha = ap.mod_floor(&p);
    while reached < prec {
        reached = (reached * 2).min(prec);
        let modulus = BigInt::from(fd.p).pow(reached);
        let value = (&alpha * &alpha - &ap * &alpha + &p).mod_floor(&modulus);
        let slope = (BigInt::from(2) * &alpha - &ap).mod_floor(&modulus);
        let correction = (value * invert_mod(&slope, &modulus)).mod_floor(&modulus);
        alpha = (alpha - correction).mod_floor(&modulus);
    }
    let modulus = BigInt::from(fd.p).pow(prec);
    debug_assert!(
        (&alpha * &alpha - &ap * &alpha + &p)
            .mod_floor(&modulus)
            .is_zero(),
        "Newton iteration must close the root equation"
    );
    PadicNumber::from_integer(fd.p, i64::from(prec), alpha)
}
