//! Rational linear combinations of words, the shuffle product, and the
//! deconcatenation coproduct.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ShuffleError;
use crate::letter::{Alphabet, Letter};
use crate::word::Word;

/// The exact rational coefficient field.
pub type Coeff = BigRational;

/// An integer as a coefficient.
pub fn coeff(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

/// A ratio of integers as a coefficient.
pub fn coeff_ratio(num: i64, den: i64) -> Coeff {
    Coeff::new(BigInt::from(num), BigInt::from(den))
}

fn add_into(terms: &mut BTreeMap<Word, Coeff>, w: Word, c: Coeff) {
    if c.is_zero() {
        return;
    }
    match terms.entry(w) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// A finitely supported map from words to rational coefficients.
///
/// Elements are graded by word weight; the weight-`n` projections [`pr_weight`]
/// are idempotent and mutually orthogonal. Under the shuffle product the
/// algebra is a polynomial ring on Lyndon words, so it has no zero divisors.
///
/// [`pr_weight`]: ShuffleElem::pr_weight
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ShuffleElem {
    terms: BTreeMap<Word, Coeff>,
}

impl ShuffleElem {
    /// The zero element.
    pub fn zero() -> ShuffleElem {
        ShuffleElem::default()
    }

    /// The unit: the empty word with coefficient 1.
    pub fn one() -> ShuffleElem {
        ShuffleElem::from_word(Word::empty())
    }

    /// A single word with coefficient 1.
    pub fn from_word(w: Word) -> ShuffleElem {
        ShuffleElem::term(w, Coeff::one())
    }

    /// A single letter sequence with coefficient 1; rejects mixed alphabets.
    pub fn from_letters(letters: &[Letter]) -> Result<ShuffleElem, ShuffleError> {
        Ok(ShuffleElem::from_word(Word::new(letters.to_vec())?))
    }

    /// A single scaled word.
    pub fn term(w: Word, c: Coeff) -> ShuffleElem {
        let mut terms = BTreeMap::new();
        add_into(&mut terms, w, c);
        ShuffleElem { terms }
    }

    /// Whether the element is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The stored terms in word order; coefficients are never zero.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coeff)> {
        self.terms.iter()
    }

    /// Number of words in the support.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of a word (zero when absent).
    pub fn coeff_of(&self, w: &Word) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_else(Coeff::zero)
    }

    /// The lexicographically largest word with its coefficient.
    pub fn max_term(&self) -> Option<(Word, Coeff)> {
        self.terms
            .last_key_value()
            .map(|(w, c)| (w.clone(), c.clone()))
    }

    /// The alphabet of the first non-empty word in the support, if any.
    pub fn alphabet(&self) -> Option<Alphabet> {
        self.terms.keys().find_map(|w| w.alphabet())
    }

    /// The largest word weight in the support (zero for the zero element).
    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|w| w.weight()).max().unwrap_or(0)
    }

    /// Adds a single scaled word in place.
    pub fn add_term(&mut self, w: Word, c: Coeff) {
        add_into(&mut self.terms, w, c);
    }

    /// The projection onto words of weight `n`.
    pub fn pr_weight(&self, n: u32) -> ShuffleElem {
        let terms = self
            .terms
            .iter()
            .filter(|(w, _)| w.weight() == n)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        ShuffleElem { terms }
    }

    /// The distinct word weights present, ascending.
    pub fn weights(&self) -> Vec<u32> {
        let mut ws: Vec<u32> = self.terms.keys().map(|w| w.weight()).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Coeff) -> ShuffleElem {
        if c.is_zero() {
            return ShuffleElem::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, v)| (w.clone(), v * c))
            .collect();
        ShuffleElem { terms }
    }

    /// Shuffle power `self ⧢ … ⧢ self` (`k` factors); `k = 0` gives the unit.
    pub fn shuffle_pow(&self, k: u32) -> Result<ShuffleElem, ShuffleError> {
        let mut acc = ShuffleElem::one();
        for _ in 0..k {
            acc = shuffle_product(&acc, self)?;
        }
        Ok(acc)
    }
}

impl Add for &ShuffleElem {
    type Output = ShuffleElem;

    fn add(self, rhs: &ShuffleElem) -> ShuffleElem {
        let mut terms = self.terms.clone();
        for (w, c) in &rhs.terms {
            add_into(&mut terms, w.clone(), c.clone());
        }
        ShuffleElem { terms }
    }
}

impl Sub for &ShuffleElem {
    type Output = ShuffleElem;

    fn sub(self, rhs: &ShuffleElem) -> ShuffleElem {
        let mut terms = self.terms.clone();
        for (w, c) in &rhs.terms {
            add_into(&mut terms, w.clone(), -c);
        }
        ShuffleElem { terms }
    }
}

impl Neg for &ShuffleElem {
    type Output = ShuffleElem;

    fn neg(self) -> ShuffleElem {
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect();
        ShuffleElem { terms }
    }
}

impl Add for ShuffleElem {
    type Output = ShuffleElem;

    fn add(self, rhs: ShuffleElem) -> ShuffleElem {
        &self + &rhs
    }
}

impl Sub for ShuffleElem {
    type Output = ShuffleElem;

    fn sub(self, rhs: ShuffleElem) -> ShuffleElem {
        &self - &rhs
    }
}

impl Neg for ShuffleElem {
    type Output = ShuffleElem;

    fn neg(self) -> ShuffleElem {
        -&self
    }
}

/// The bilinear extension of the riffle shuffle of words.
///
/// Commutative and associative with the empty word as unit; terms over
/// different alphabets are rejected.
pub fn shuffle_product(x: &ShuffleElem, y: &ShuffleElem) -> Result<ShuffleElem, ShuffleError> {
    let mut out = BTreeMap::new();
    for (wx, cx) in &x.terms {
        for (wy, cy) in &y.terms {
            if let (Some(a), Some(b)) = (wx.alphabet(), wy.alphabet()) {
                if a != b {
                    return Err(ShuffleError::MixedAlphabets);
                }
            }
            let scale = cx * cy;
            let mut prefix = Vec::with_capacity(wx.len() + wy.len());
            riffle(&mut prefix, wx.letters(), wy.letters(), &scale, &mut out);
        }
    }
    Ok(ShuffleElem { terms: out })
}

fn riffle(
    prefix: &mut Vec<Letter>,
    u: &[Letter],
    v: &[Letter],
    scale: &Coeff,
    out: &mut BTreeMap<Word, Coeff>,
) {
    if u.is_empty() && v.is_empty() {
        add_into(out, Word::unchecked(prefix.clone()), scale.clone());
        return;
    }
    if let Some((&a, rest)) = u.split_first() {
        prefix.push(a);
        riffle(prefix, rest, v, scale, out);
        prefix.pop();
    }
    if let Some((&b, rest)) = v.split_first() {
        prefix.push(b);
        riffle(prefix, u, rest, scale, out);
        prefix.pop();
    }
}

/// An element of the tensor square: a sparse sum of `left ⊗ right` word pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElem {
    terms: BTreeMap<(Word, Word), Coeff>,
}

impl TensorElem {
    /// The zero tensor.
    pub fn zero() -> TensorElem {
        TensorElem::default()
    }

    /// Whether the tensor is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The stored terms in pair order; coefficients are never zero.
    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Coeff)> {
        self.terms.iter()
    }

    /// Adds a single scaled pair in place.
    pub fn add_term(&mut self, left: Word, right: Word, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// The projection onto terms of bidegree `(m, n)` (left weight, right weight).
    pub fn pr_bidegree(&self, m: u32, n: u32) -> TensorElem {
        let terms = self
            .terms
            .iter()
            .filter(|((l, r), _)| l.weight() == m && r.weight() == n)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        TensorElem { terms }
    }

    /// The coefficient of a pair (zero when absent).
    pub fn coeff_of(&self, left: &Word, right: &Word) -> Coeff {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }
}

impl Add for &TensorElem {
    type Output = TensorElem;

    fn add(self, rhs: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        for ((l, r), c) in &rhs.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TensorElem {
    type Output = TensorElem;

    fn sub(self, rhs: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        for ((l, r), c) in &rhs.terms {
            out.add_term(l.clone(), r.clone(), -c);
        }
        out
    }
}

/// The reduced (deconcatenation) coproduct: each word maps to the sum of its
/// proper splits `prefix ⊗ suffix`. Single letters and the empty word map to zero.
pub fn deconcat_coproduct(x: &ShuffleElem) -> TensorElem {
    let mut out = TensorElem::zero();
    for (w, c) in &x.terms {
        let letters = w.letters();
        for k in 1..letters.len() {
            out.add_term(
                Word::unchecked(letters[..k].to_vec()),
                Word::unchecked(letters[k..].to_vec()),
                c.clone(),
            );
        }
    }
    out
}

/// The full coproduct: each word maps to the sum of all its splits, so that
/// `Δ(x) = x ⊗ 1 + 1 ⊗ x + Δ'(x)` on words of positive length and `Δ(1) = 1 ⊗ 1`.
pub fn full_coproduct(x: &ShuffleElem) -> TensorElem {
    let mut out = TensorElem::zero();
    for (w, c) in &x.terms {
        for (left, right) in w.splits() {
            out.add_term(left, right, c.clone());
        }
    }
    out
}

/// Componentwise shuffle product of tensors:
/// `(a ⊗ b) ⧢ (c ⊗ d) = (a ⧢ c) ⊗ (b ⧢ d)`.
pub fn tensor_shuffle(x: &TensorElem, y: &TensorElem) -> Result<TensorElem, ShuffleError> {
    let mut out = TensorElem::zero();
    for ((xl, xr), cx) in &x.terms {
        for ((yl, yr), cy) in &y.terms {
            let left = shuffle_product(
                &ShuffleElem::from_word(xl.clone()),
                &ShuffleElem::from_word(yl.clone()),
            )?;
            let right = shuffle_product(
                &ShuffleElem::from_word(xr.clone()),
                &ShuffleElem::from_word(yr.clone()),
            )?;
            let scale = cx * cy;
            for (lw, lc) in left.terms() {
                for (rw, rc) in right.terms() {
                    out.add_term(lw.clone(), rw.clone(), lc * rc * &scale);
                }
            }
        }
    }
    Ok(out)
}

impl fmt::Display for ShuffleElem {
    /// Formats as `coeff*word ± …` with exact rationals, e.g. `pi0.pi1 - 1/2*tau`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if w.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{magnitude}*{w}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for ShuffleElem {
    type Err = ShuffleError;

    /// Parses `coeff*word ± …`; bare words mean coefficient 1, bare rationals
    /// scale the empty word, and `0` is the zero element.
    fn from_str(s: &str) -> Result<ShuffleElem, ShuffleError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ShuffleError::Parse("empty element text".into()));
        }
        let mut chunks: Vec<(i32, String)> = Vec::new();
        let mut sign = 1;
        let mut cur = String::new();
        for ch in s.chars() {
            match ch {
                '+' | '-' => {
                    if cur.trim().is_empty() {
                        if ch == '-' {
                            sign = -sign;
                        }
                    } else {
                        chunks.push((sign, std::mem::take(&mut cur)));
                        sign = if ch == '-' { -1 } else { 1 };
                    }
                }
                _ => cur.push(ch),
            }
        }
        if cur.trim().is_empty() {
            return Err(ShuffleError::Parse(format!("dangling sign in {s:?}")));
        }
        chunks.push((sign, cur));

        let mut out = ShuffleElem::zero();
        for (sign, chunk) in chunks {
            let chunk = chunk.trim();
            let (c, w) = match chunk.split_once('*') {
                Some((ctext, wtext)) => {
                    let c = Coeff::from_str(ctext.trim()).map_err(|e| {
                        ShuffleError::Parse(format!("bad coefficient {:?}: {e}", ctext.trim()))
                    })?;
                    (c, wtext.trim().parse::<Word>()?)
                }
                None => match Coeff::from_str(chunk) {
                    Ok(c) => (c, Word::empty()),
                    Err(_) => (Coeff::one(), chunk.parse::<Word>()?),
                },
            };
            out.add_term(w, c * coeff(sign as i64));
        }
        Ok(out)
    }
}
