//! Lyndon words, the Chen–Fox–Lyndon factorization, and the polynomial
//! structure of the shuffle algebra over Lyndon generators.
//!
//! Every element decomposes uniquely as a polynomial in Lyndon words under the
//! shuffle product. The change of basis is triangular: the shuffle expansion
//! of a monomial `L1^a1 ⧢ … ⧢ Lk^ak` (factors in nonincreasing order) has
//! lexicographically largest word `L1^a1 … Lk^ak` (concatenated), with
//! coefficient `a1! · … · ak!`. Greedy elimination of the largest word
//! therefore converts elements to polynomials, and polynomial division gives
//! exact shuffle division.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::elem::{Coeff, ShuffleElem, shuffle_product};
use crate::error::ShuffleError;
use crate::word::Word;

/// Whether a letter sequence is a Lyndon word: nonempty and strictly smaller
/// than every proper rotation of itself.
pub fn is_lyndon(letters: &[crate::letter::Letter]) -> bool {
    if letters.is_empty() {
        return false;
    }
    for k in 1..letters.len() {
        let rotation = letters[k..].iter().chain(letters[..k].iter());
        if letters.iter().cmp(rotation) != Ordering::Less {
            return false;
        }
    }
    true
}

/// The Chen–Fox–Lyndon factorization of a word into a nonincreasing sequence
/// of Lyndon words (Duval's algorithm). The empty word factors into nothing.
pub fn chen_fox_lyndon(word: &Word) -> Vec<Word> {
    let w = word.letters();
    let n = w.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && w[k] <= w[j] {
            if w[k] < w[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            out.push(Word::unchecked(w[i..i + period].to_vec()));
            i += period;
        }
    }
    out
}

/// The number of Lyndon words of the given length over an alphabet of
/// `num_letters` symbols, by Möbius inversion of the necklace count.
pub fn count_lyndon_words(num_letters: u64, length: u64) -> u64 {
    assert!(length >= 1, "Lyndon words are nonempty");
    let mut total: i128 = 0;
    for d in 1..=length {
        if length % d == 0 {
            total += i128::from(moebius(d)) * (num_letters as i128).pow((length / d) as u32);
        }
    }
    (total / length as i128) as u64
}

fn moebius(n: u64) -> i8 {
    let mut n = n;
    let mut prime_count = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            prime_count += 1;
        }
        p += 1;
    }
    if n > 1 {
        prime_count += 1;
    }
    if prime_count % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A monomial in Lyndon-word indeterminates: distinct Lyndon factors in
/// decreasing word order, each with a positive exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LyndonMonomial {
    factors: Vec<(Word, u32)>,
}

impl LyndonMonomial {
    /// The empty monomial (the constant 1).
    pub fn one() -> LyndonMonomial {
        LyndonMonomial {
            factors: Vec::new(),
        }
    }

    /// Builds a monomial from factor/exponent pairs, merging duplicates.
    ///
    /// Panics if a factor is not a Lyndon word.
    pub fn new(factors: impl IntoIterator<Item = (Word, u32)>) -> LyndonMonomial {
        let mut merged: BTreeMap<Word, u32> = BTreeMap::new();
        for (w, e) in factors {
            assert!(is_lyndon(w.letters()), "factor {w} is not a Lyndon word");
            if e > 0 {
                *merged.entry(w).or_insert(0) += e;
            }
        }
        let factors = merged.into_iter().rev().collect();
        LyndonMonomial { factors }
    }

    /// Whether this is the constant monomial.
    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// The factor/exponent pairs in decreasing word order.
    pub fn factors(&self) -> &[(Word, u32)] {
        &self.factors
    }

    /// Total degree: the sum of the exponents.
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    /// Total weight: the exponent-weighted sum of factor weights.
    pub fn weight(&self) -> u32 {
        self.factors.iter().map(|(w, e)| w.weight() * e).sum()
    }

    /// The product of two monomials (exponents add).
    pub fn mul(&self, other: &LyndonMonomial) -> LyndonMonomial {
        let mut merged: BTreeMap<Word, u32> = BTreeMap::new();
        for (w, e) in self.factors.iter().chain(other.factors.iter()) {
            *merged.entry(w.clone()).or_insert(0) += e;
        }
        LyndonMonomial {
            factors: merged.into_iter().rev().collect(),
        }
    }

    /// The quotient monomial, or `None` when some exponent would go negative.
    pub fn try_div(&self, other: &LyndonMonomial) -> Option<LyndonMonomial> {
        let mut merged: BTreeMap<Word, u32> = self.factors.iter().cloned().collect();
        for (w, e) in &other.factors {
            let have = merged.remove(w)?;
            match have.cmp(e) {
                Ordering::Less => return None,
                Ordering::Equal => {}
                Ordering::Greater => {
                    merged.insert(w.clone(), have - e);
                }
            }
        }
        Some(LyndonMonomial {
            factors: merged.into_iter().rev().collect(),
        })
    }

    /// The exponent of a single Lyndon factor in this monomial.
    pub fn exponent_of(&self, w: &Word) -> u32 {
        self.factors
            .iter()
            .find(|(f, _)| f == w)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// The lexicographically largest word in the shuffle expansion: the
    /// factors concatenated in decreasing order with multiplicity.
    pub fn leading_word(&self) -> Word {
        let mut letters = Vec::new();
        for (w, e) in &self.factors {
            for _ in 0..*e {
                letters.extend_from_slice(w.letters());
            }
        }
        Word::new(letters).expect("factors of one monomial share an alphabet")
    }

    /// The coefficient of the leading word in the shuffle expansion: the
    /// product of the factorials of the exponents.
    pub fn leading_coefficient(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (_, e) in &self.factors {
            for i in 2..=*e {
                acc *= BigInt::from(i);
            }
        }
        acc
    }

    /// The shuffle expansion of the monomial back into words.
    pub fn expand(&self) -> Result<ShuffleElem, ShuffleError> {
        let mut acc = ShuffleElem::one();
        for (w, e) in &self.factors {
            let factor = ShuffleElem::from_word(w.clone());
            for _ in 0..*e {
                acc = shuffle_product(&acc, &factor)?;
            }
        }
        Ok(acc)
    }
}

impl Ord for LyndonMonomial {
    /// Graded order: first by total weight, then lexicographically on exponent
    /// vectors with larger Lyndon factors more significant. Multiplicative, so
    /// leading terms of products are products of leading terms.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| {
            let mut i = 0;
            let mut j = 0;
            loop {
                match (self.factors.get(i), other.factors.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some((wa, ea)), Some((wb, eb))) => match wa.cmp(wb) {
                        Ordering::Greater => return Ordering::Greater,
                        Ordering::Less => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(eb);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for LyndonMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LyndonMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (w, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "({w})")?;
            } else {
                write!(f, "({w})^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in Lyndon-word indeterminates with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LyndonPolynomial {
    terms: BTreeMap<LyndonMonomial, Coeff>,
}

impl LyndonPolynomial {
    /// The zero polynomial.
    pub fn zero() -> LyndonPolynomial {
        LyndonPolynomial::default()
    }

    /// Whether the polynomial is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The stored terms in increasing monomial order; coefficients are never zero.
    pub fn terms(&self) -> impl Iterator<Item = (&LyndonMonomial, &Coeff)> {
        self.terms.iter()
    }

    /// Number of monomials in the support.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of a monomial (zero when absent).
    pub fn coeff_of(&self, m: &LyndonMonomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Adds a single scaled monomial in place.
    pub fn add_term(&mut self, m: LyndonMonomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let sum = self.terms.remove(&m).unwrap_or_else(Coeff::zero) + c;
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    /// The largest monomial with its coefficient.
    pub fn leading_term(&self) -> Option<(LyndonMonomial, Coeff)> {
        self.terms
            .last_key_value()
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    /// The product of this polynomial by a single scaled monomial.
    pub fn mul_term(&self, m: &LyndonMonomial, c: &Coeff) -> LyndonPolynomial {
        let mut out = LyndonPolynomial::zero();
        for (mi, ci) in &self.terms {
            out.add_term(mi.mul(m), ci * c);
        }
        out
    }

    /// Difference of polynomials.
    pub fn sub(&self, other: &LyndonPolynomial) -> LyndonPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    /// Expands the polynomial into words via shuffle products.
    pub fn expand(&self) -> Result<ShuffleElem, ShuffleError> {
        let mut out = ShuffleElem::zero();
        for (m, c) in &self.terms {
            out = &out + &m.expand()?.scale(c);
        }
        Ok(out)
    }
}

impl fmt::Display for LyndonPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Leading terms first.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Rewrites an element as a polynomial in Lyndon words, by greedy elimination
/// of the lexicographically largest word.
pub fn lyndon_decompose(x: &ShuffleElem) -> LyndonPolynomial {
    let mut rem = x.clone();
    let mut out = LyndonPolynomial::zero();
    while let Some((w, c)) = rem.max_term() {
        let factors = chen_fox_lyndon(&w);
        let mut pairs: Vec<(Word, u32)> = Vec::new();
        for f in factors {
            // Factors arrive nonincreasing, so equal factors are adjacent.
            match pairs.last_mut() {
                Some((prev, e)) if *prev == f => *e += 1,
                _ => pairs.push((f, 1)),
            }
        }
        let mono = LyndonMonomial::new(pairs);
        let coefficient = c / Coeff::from_integer(mono.leading_coefficient());
        let expansion = mono
            .expand()
            .expect("factors of one word share an alphabet")
            .scale(&coefficient);
        rem = &rem - &expansion;
        debug_assert!(
            rem.coeff_of(&w).is_zero(),
            "leading word must be eliminated"
        );
        debug_assert!(rem.max_term().map_or(true, |(w2, _)| w2 < w));
        out.add_term(mono, coefficient);
    }
    out
}

/// Exact shuffle division: returns `q` with `y ⧢ q = x` when it exists.
///
/// Division by zero is an error distinct from non-divisibility, which cannot
/// be masked by zero divisors: the shuffle algebra is an integral domain.
pub fn exact_divide(x: &ShuffleElem, y: &ShuffleElem) -> Result<ShuffleElem, ShuffleError> {
    if y.is_zero() {
        return Err(ShuffleError::ZeroDivisor);
    }
    if x.is_zero() {
        return Ok(ShuffleElem::zero());
    }
    let mut px = lyndon_decompose(x);
    let py = lyndon_decompose(y);
    let (my, cy) = py.leading_term().expect("nonzero divisor");
    let mut q = LyndonPolynomial::zero();
    while let Some((mx, cx)) = px.leading_term() {
        let Some(mq) = mx.try_div(&my) else {
            return Err(ShuffleError::NotDivisible);
        };
        let cq = cx / &cy;
        px = px.sub(&py.mul_term(&mq, &cq));
        debug_assert!(px.leading_term().map_or(true, |(m, _)| m < mx));
        q.add_term(mq, cq);
    }
    q.expand()
}
