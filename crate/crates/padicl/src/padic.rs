//! Fixed-precision p-adic numbers with pessimistic precision tracking.

use crate::error::PadicError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalars fed into the p-adic arithmetic.
pub type Rational = num_rational::BigRational;

/// An element of `Q_p` known to a stated absolute precision.
///
/// A nonzero element is stored as `p^val · unit + O(p^prec)` where
/// `val < prec` and `unit` is a p-unit reduced modulo `p^(prec − val)`;
/// an element indistinguishable from zero is `O(p^prec)` (internally
/// `val == prec`, `unit == 0`). Arithmetic propagates precision
/// pessimistically: a sum is known to the smaller absolute precision of
/// its operands, a product to the smaller relative precision.
///
/// `==` compares stored representations (same precision and digits).
/// Equality *up to stated precision* — the semantic notion — is
/// [`PadicNumber::agrees_with`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicNumber {
    p: u64,
    prec: i64,
    val: i64,
    unit: BigInt,
}

/// Rejects composite moduli by trial division.
pub(crate) fn check_prime(p: u64) -> Result<(), PadicError> {
    if p < 2 || (p > 2 && p % 2 == 0) {
        return Err(PadicError::NotPrime { n: p });
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return Err(PadicError::NotPrime { n: p });
        }
        d += 2;
    }
    Ok(())
}

/// Inverse of a unit modulo a prime power.
pub(crate) fn invert_mod(a: &BigInt, modulus: &BigInt) -> BigInt {
    let e = a.extended_gcd(modulus);
    debug_assert!(e.gcd.is_one(), "inverse requires a unit");
    e.x.mod_floor(modulus)
}

/// Valuation of an exact rational at `p`; `None` for zero.
pub(crate) fn rational_valuation(p: u64, q: &Rational) -> Option<i64> {
    if q.numer().is_zero() {
        return None;
    }
    let big_p = BigInt::from(p);
    let mut v = 0i64;
    let mut num = q.numer().clone();
    while num.is_multiple_of(&big_p) {
        num /= &big_p;
        v += 1;
    }
    let mut den = q.denom().clone();
    while den.is_multiple_of(&big_p) {
        den /= &big_p;
        v -= 1;
    }
    Some(v)
}

fn power(p: u64, e: i64) -> BigInt {
    debug_assert!((0..=u32::MAX as i64).contains(&e), "exponent out of range");
    BigInt::from(p).pow(e as u32)
}

impl PadicNumber {
    /// Zero to absolute precision `prec`, i.e. `O(p^prec)`.
    pub fn zero(p: u64, prec: i64) -> Result<Self, PadicError> {
        check_prime(p)?;
        Ok(Self {
            p,
            prec,
            val: prec,
            unit: BigInt::zero(),
        })
    }

    /// Embeds an integer at absolute precision `prec`.
    pub fn from_integer(p: u64, prec: i64, n: impl Into<BigInt>) -> Result<Self, PadicError> {
        check_prime(p)?;
        Ok(Self::reduce(p, prec, 0, n.into()))
    }

    /// Embeds an exact rational at absolute precision `prec`; powers of
    /// `p` in the denominator lower the valuation below zero.
    pub fn from_rational(p: u64, prec: i64, q: &Rational) -> Result<Self, PadicError> {
        check_prime(p)?;
        let Some(v) = rational_valuation(p, q) else {
            return Self::zero(p, prec);
        };
        if v >= prec {
            return Self::zero(p, prec);
        }
        let big_p = BigInt::from(p);
        let mut num = q.numer().clone();
        let mut den = q.denom().clone();
        while num.is_multiple_of(&big_p) {
            num /= &big_p;
        }
        while den.is_multiple_of(&big_p) {
            den /= &big_p;
        }
        let modulus = power(p, prec - v);
        let den_inv = invert_mod(&den.mod_floor(&modulus), &modulus);
        let unit = (num.mod_floor(&modulus) * den_inv).mod_floor(&modulus);
        Ok(Self {
            p,
            prec,
            val: v,
            unit,
        })
    }

    /// Canonicalizes `p^shift · w` known modulo `p^prec`.
    fn reduce(p: u64, prec: i64, shift: i64, w: BigInt) -> Self {
        let zero = Self {
            p,
            prec,
            val: prec,
            unit: BigInt::zero(),
        };
        if w.is_zero() || shift >= prec {
            return zero;
        }
        let big_p = BigInt::from(p);
        let mut v = shift;
        let mut u = w;
        while v < prec && u.is_multiple_of(&big_p) {
            u /= &big_p;
            v += 1;
        }
        if v >= prec {
            return zero;
        }
        let u = u.mod_floor(&power(p, prec - v));
        if u.is_zero() {
            return zero;
        }
        Self {
            p,
            prec,
            val: v,
            unit: u,
        }
    }

    /// The residue field characteristic.
    pub fn prime(&self) -> u64 {
        self.p
    }

    /// The stated absolute precision `N` in `… + O(p^N)`.
    pub fn precision(&self) -> i64 {
        self.prec
    }

    /// The valuation, or `None` when the element is indistinguishable
    /// from zero at its stated precision.
    pub fn valuation(&self) -> Option<i64> {
        (self.val < self.prec).then_some(self.val)
    }

    /// Digits of relative precision carried by the unit part (zero for a
    /// vanishing element).
    pub fn relative_precision(&self) -> i64 {
        self.prec - self.val
    }

    /// Whether the element vanishes to its stated precision.
    pub fn is_zero_at_precision(&self) -> bool {
        self.val >= self.prec
    }

    /// Whether the stated-precision representative is distinguishable
    /// from zero: its valuation is smaller than its precision.
    pub fn is_nonzero_at_precision(&self) -> bool {
        !self.is_zero_at_precision()
    }

    /// The canonical representative `p^val · unit` as an exact rational
    /// (zero for a vanishing element).
    pub fn representative(&self) -> Rational {
        if self.is_zero_at_precision() {
            return Rational::zero();
        }
        if self.val >= 0 {
            Rational::from(&self.unit * power(self.p, self.val))
        } else {
            Rational::new(self.unit.clone(), power(self.p, -self.val))
        }
    }

    fn assert_same_prime(&self, other: &Self) {
        assert_eq!(
            self.p, other.p,
            "p-adic arithmetic requires matching primes"
        );
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        self.assert_same_prime(rhs);
        let prec = self.prec.min(rhs.prec);
        let m = self.val.min(rhs.val);
        if m >= prec {
            return Self {
                p: self.p,
                prec,
                val: prec,
                unit: BigInt::zero(),
            };
        }
        let w = &self.unit * power(self.p, self.val - m) + &rhs.unit * power(self.p, rhs.val - m);
        Self::reduce(self.p, prec, m, w)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        self.assert_same_prime(rhs);
        let rel = self.relative_precision().min(rhs.relative_precision());
        let val = self.val + rhs.val;
        let prec = val + rel;
        if rel == 0 {
            return Self {
                p: self.p,
                prec,
                val: prec,
                unit: BigInt::zero(),
            };
        }
        let modulus = power(self.p, rel);
        let unit = (&self.unit * &rhs.unit).mod_floor(&modulus);
        Self {
            p: self.p,
            prec,
            val,
            unit,
        }
    }

    fn neg_impl(&self) -> Self {
        if self.is_zero_at_precision() {
            return self.clone();
        }
        let modulus = power(self.p, self.relative_precision());
        Self {
            p: self.p,
            prec: self.prec,
            val: self.val,
            unit: (-&self.unit).mod_floor(&modulus),
        }
    }

    /// The multiplicative inverse, carrying the same relative precision.
    pub fn inverse(&self) -> Result<Self, PadicError> {
        if self.is_zero_at_precision() {
            return Err(PadicError::DivideByZero {
                p: self.p,
                prec: self.prec,
            });
        }
        let rel = self.relative_precision();
        let modulus = power(self.p, rel);
        Ok(Self {
            p: self.p,
            prec: rel - self.val,
            val: -self.val,
            unit: invert_mod(&self.unit, &modulus),
        })
    }

    /// Integer powers; negative exponents invert first, so they require a
    /// value distinguishable from zero.
    pub fn pow(&self, e: i64) -> Result<Self, PadicError> {
        if e == 0 {
            let rel = self.relative_precision();
            return Ok(Self {
                p: self.p,
                prec: rel,
                val: 0.min(rel),
                unit: if rel > 0 { BigInt::one() } else { BigInt::zero() },
            });
        }
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = base.clone();
        for _ in 1..e.unsigned_abs() {
            acc = acc.mul_impl(&base);
        }
        Ok(acc)
    }

    /// Equality up to the smaller of the two stated precisions.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.add_impl(&other.neg_impl()).is_zero_at_precision()
    }
}

impl Add for &PadicNumber {
    type Output = PadicNumber;
    fn add(self, rhs: Self) -> PadicNumber {
        self.add_impl(rhs)
    }
}

impl Add for PadicNumber {
    type Output = PadicNumber;
    fn add(self, rhs: Self) -> PadicNumber {
        self.add_impl(&rhs)
    }
}

impl Sub for &PadicNumber {
    type Output = PadicNumber;
    fn sub(self, rhs: Self) -> PadicNumber {
        self.add_impl(&rhs.neg_impl())
    }
}

impl Sub for PadicNumber {
    type Output = PadicNumber;
    fn sub(self, rhs: Self) -> PadicNumber {
        self.add_impl(&rhs.neg_impl())
    }
}

impl Mul for &PadicNumber {
    type Output = PadicNumber;
    fn mul(self, rhs: Self) -> PadicNumber {
        self.mul_impl(rhs)
    }
}

impl Mul for PadicNumber {
    type Output = PadicNumber;
    fn mul(self, rhs: Self) -> PadicNumber {
        self.mul_impl(&rhs)
    }
}

impl Neg for &PadicNumber {
    type Output = PadicNumber;
    fn neg(self) -> PadicNumber {
        self.neg_impl()
    }
}

impl Neg for PadicNumber {
    type Output = PadicNumber;
    fn neg(self) -> PadicNumber {
        self.neg_impl()
    }
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero_at_precision() {
            write!(f, "O({}^{})", self.p, self.prec)
        } else if self.val == 0 {
            write!(f, "{} + O({}^{})", self.unit, self.p, self.prec)
        } else {
            write!(
                f,
                "{}^{}*{} + O({}^{})",
                self.p, self.val, self.unit, self.p, self.prec
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(p: u64, prec: i64, n: i64) -> PadicNumber {
        PadicNumber::from_integer(p, prec, n).unwrap()
    }

    #[test]
    fn representation_and_zero_detection() {
        let vanishing = int(5, 2, 25);
        assert!(vanishing.is_zero_at_precision());
        assert!(!vanishing.is_nonzero_at_precision());
        assert_eq!(vanishing.valuation(), None);
        assert_eq!(vanishing.representative(), Rational::zero());

        let unit = int(5, 2, 21);
        assert!(unit.is_nonzero_at_precision());
        assert_eq!(unit.valuation(), Some(0));
        assert_eq!(unit.representative(), Rational::from(BigInt::from(21)));

        let fifty = int(5, 3, 50);
        assert_eq!(fifty.valuation(), Some(2));
        assert_eq!(fifty.relative_precision(), 1);
        assert_eq!(fifty.representative(), Rational::from(BigInt::from(50)));

        let fifth = PadicNumber::from_rational(
            5,
            2,
            &Rational::new(BigInt::from(1), BigInt::from(5)),
        )
        .unwrap();
        assert_eq!(fifth.valuation(), Some(-1));
        assert_eq!(fifth.relative_precision(), 3);

        assert!(matches!(
            PadicNumber::from_integer(6, 2, 1),
            Err(PadicError::NotPrime { n: 6 })
        ));
        assert!(int(7, 0, 3).is_zero_at_precision());
    }

    #[test]
    fn products_track_relative_precision() {
        let x = int(5, 2, 21);
        let product = &x * &x;
        assert_eq!(product.precision(), 2);
        assert_eq!(
            product.representative(),
            Rational::from(BigInt::from(16)),
            "441 is only known modulo 25"
        );

        let ten = int(5, 4, 10);
        let fifteen = int(5, 4, 15);
        let both = &ten * &fifteen;
        assert_eq!(both.valuation(), Some(2));
        assert_eq!(
            both.precision(),
            5,
            "valuations add on top of the shared relative precision"
        );
        assert_eq!(both.representative(), Rational::from(BigInt::from(150)));
    }

    #[test]
    fn sums_track_absolute_precision() {
        let x = int(5, 2, 21);
        let coarse = PadicNumber::zero(5, 1).unwrap();
        assert_eq!((&x + &coarse).precision(), 1);
        assert!((&x - &x).is_zero_at_precision());
        assert!((&x + &int(5, 2, 29)).is_zero_at_precision(), "50 ≡ 0 mod 25");
        assert_eq!((&x + &int(5, 2, 30)).valuation(), Some(0));
    }

    #[test]
    fn inverse_and_powers() {
        let x = int(5, 4, 21);
        let one = int(5, 4, 1);
        assert!((&x.inverse().unwrap() * &x).agrees_with(&one));
        assert!(x
            .pow(-2)
            .unwrap()
            .agrees_with(&(x.inverse().unwrap() * x.inverse().unwrap())));
        assert!(x.pow(0).unwrap().agrees_with(&one));
        assert!(x.pow(3).unwrap().agrees_with(&(&(&x * &x) * &x)));

        let err = PadicNumber::zero(5, 2).unwrap().inverse().unwrap_err();
        assert_eq!(err, PadicError::DivideByZero { p: 5, prec: 2 });
    }

    #[test]
    fn agreement_is_precision_aware() {
        assert!(int(5, 2, 21).agrees_with(&int(5, 2, 46)));
        assert!(int(5, 1, 21).agrees_with(&int(5, 2, 16)));
        assert!(!int(5, 2, 21).agrees_with(&int(5, 2, 22)));
    }

    #[test]
    fn display_formats() {
        assert_eq!(PadicNumber::zero(5, 2).unwrap().to_string(), "O(5^2)");
        assert_eq!(int(5, 2, 21).to_string(), "21 + O(5^2)");
        let fifth = PadicNumber::from_rational(
            5,
            1,
            &Rational::new(BigInt::from(1), BigInt::from(5)),
        )
        .unwrap();
        assert_eq!(fifth.to_string(), "5^-1*1 + O(5^1)");
        assert_eq!(int(5, 4, 50).to_string(), "5^2*2 + O(5^4)");
    }

    fn arb_triple() -> impl Strategy<Value = (PadicNumber, PadicNumber, PadicNumber)> {
        prop_oneof![Just(3u64), Just(5), Just(7)].prop_flat_map(|p| {
            let value = (1i64..5, -200i64..200, 0u32..3).prop_map(move |(prec, n, k)| {
                let q = Rational::new(BigInt::from(n), BigInt::from(p).pow(k));
                PadicNumber::from_rational(p, prec, &q).unwrap()
            });
            (value.clone(), value.clone(), value)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms((x, y, z) in arb_triple()) {
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert!((&x * &(&y + &z)).agrees_with(&(&(&x * &y) + &(&x * &z))));

            let zero = PadicNumber::zero(x.prime(), x.precision()).unwrap();
            // An exact one must carry at least x's relative precision to
            // leave x unchanged under the pessimistic product rule.
            let one = PadicNumber::from_integer(x.prime(), x.relative_precision(), 1).unwrap();
            prop_assert_eq!(&x + &zero, x.clone());
            prop_assert_eq!(&x * &one, x.clone());
            prop_assert!((&x + &(-&x)).is_zero_at_precision());
        }
    }
}
