//! Exact rational scalars and modular-reduction helpers.

use crate::error::CurveError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

/// Exact rational scalar used throughout the curve arithmetic.
pub type Rational = num_rational::BigRational;

/// The integer `n` as a [`Rational`].
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// The fraction `num/den` as a [`Rational`].
///
/// # Panics
/// Panics when `den = 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Parses `"-155/8"`-style exact rationals; plain integers also parse.
pub fn parse_rational(input: &str) -> Result<Rational, CurveError> {
    Rational::from_str(input.trim()).map_err(|_| CurveError::InvalidRational {
        input: input.to_owned(),
    })
}

/// `base^exp mod p` by square-and-multiply (`p` need not be prime here).
pub(crate) fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let p = p as u128;
    let mut base = base as u128 % p;
    let mut acc: u128 = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo the prime `p`, for `a` not divisible by `p`.
pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0, "no inverse of 0 mod {p}");
    mod_pow(a % p, p - 2, p)
}

/// Reduces `q` modulo the prime `p`, or `None` when the denominator
/// vanishes mod `p` (the value is not `p`-integral).
pub(crate) fn reduce_mod(q: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let den = q.denom().mod_floor(&pb).to_u64().expect("residue fits in u64");
    if den == 0 {
        return None;
    }
    let num = q.numer().mod_floor(&pb).to_u64().expect("residue fits in u64");
    Some((num as u128 * mod_inverse(den, p) as u128 % p as u128) as u64)
}

/// Deterministic primality by trial division; inputs here are small.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// True when every prime factor of the denominator of `q` lies in `s`.
pub(crate) fn denominator_supported(q: &Rational, s: &[u64]) -> bool {
    let mut den = q.denom().abs();
    for &p in s {
        let pb = BigInt::from(p);
        while (&den % &pb).is_zero() {
            den /= &pb;
        }
    }
    den.is_one()
}
