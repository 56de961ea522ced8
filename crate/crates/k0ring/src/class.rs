//! Irreducible classes and sparse integer combinations of them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::K0Error;

/// The irreducible class with symmetric-power index `a` and twist index `b`.
///
/// The ordering is lexicographic on `(a, b)`, which is also the leading-term
/// order used by character decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrrClass {
    /// Symmetric-power index, non-negative.
    pub a: u32,
    /// Twist index, any sign.
    pub b: i32,
}

impl IrrClass {
    /// Builds the class `M_{a,b}`.
    pub fn new(a: u32, b: i32) -> IrrClass {
        IrrClass { a, b }
    }

    /// The weight `-a - 2b`.
    pub fn weight(&self) -> i64 {
        -(self.a as i64) - 2 * (self.b as i64)
    }

    /// The dimension `a + 1`.
    pub fn dim(&self) -> i64 {
        self.a as i64 + 1
    }

    /// Whether the class is anti-effective, i.e. `b >= 0`.
    pub fn is_anti_effective(&self) -> bool {
        self.b >= 0
    }
}

impl fmt::Display for IrrClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[M_{{{},{}}}]", self.a, self.b)
    }
}

/// A sparse integer combination of irreducible classes.
///
/// Zero multiplicities are never stored, so structural equality is equality
/// of classes. The weight projections `pr_weight` are orthogonal idempotents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct K0Class {
    terms: BTreeMap<IrrClass, i64>,
}

impl K0Class {
    /// The zero class.
    pub fn zero() -> K0Class {
        K0Class::default()
    }

    /// The unit class `[M_{0,0}]`.
    pub fn one() -> K0Class {
        K0Class::irr(0, 0)
    }

    /// The single irreducible `[M_{a,b}]`.
    pub fn irr(a: u32, b: i32) -> K0Class {
        K0Class::term(IrrClass::new(a, b), 1)
    }

    /// A single scaled irreducible.
    pub fn term(m: IrrClass, mult: i64) -> K0Class {
        let mut out = K0Class::zero();
        out.add_term(m, mult);
        out
    }

    /// Whether the class is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The stored terms in increasing `(a, b)` order; multiplicities are never zero.
    pub fn terms(&self) -> impl Iterator<Item = (&IrrClass, &i64)> {
        self.terms.iter()
    }

    /// Number of distinct irreducibles in the support.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// The multiplicity of one irreducible (zero when absent).
    pub fn mult_of(&self, m: &IrrClass) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Adds a single scaled irreducible in place.
    pub fn add_term(&mut self, m: IrrClass, mult: i64) {
        if mult == 0 {
            return;
        }
        let sum = self.terms.remove(&m).unwrap_or(0) + mult;
        if sum != 0 {
            self.terms.insert(m, sum);
        }
    }

    /// Sum of classes.
    pub fn add(&self, other: &K0Class) -> K0Class {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, *c);
        }
        out
    }

    /// Difference of classes.
    pub fn sub(&self, other: &K0Class) -> K0Class {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    /// Integer scalar multiple.
    pub fn scale(&self, n: i64) -> K0Class {
        if n == 0 {
            return K0Class::zero();
        }
        let terms = self.terms.iter().map(|(m, c)| (*m, c * n)).collect();
        K0Class { terms }
    }

    /// The linear extension of `dim M_{a,b} = a + 1`.
    pub fn dim(&self) -> i64 {
        self.terms.iter().map(|(m, c)| m.dim() * c).sum()
    }

    /// Whether every multiplicity is non-negative (a genuine representation).
    pub fn is_representation(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// Whether every term is anti-effective.
    pub fn is_anti_effective(&self) -> bool {
        self.terms.keys().all(|m| m.is_anti_effective())
    }

    /// Keeps exactly the terms of weight `n`.
    pub fn pr_weight(&self, n: i64) -> K0Class {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.weight() == n)
            .map(|(m, c)| (*m, *c))
            .collect();
        K0Class { terms }
    }

    /// The distinct weights present, ascending.
    pub fn weights(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.terms.keys().map(|m| m.weight()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl fmt::Display for K0Class {
    /// Formats leading terms first, e.g. `[M_{3,0}] + 2[M_{1,1}]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = *c < 0;
            let magnitude = c.unsigned_abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if magnitude != 1 {
                write!(f, "{magnitude}")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for K0Class {
    type Err = K0Error;

    /// Parses `c[M_{a,b}] ± …`; a bare integer scales `[M_{0,0}]`.
    fn from_str(s: &str) -> Result<K0Class, K0Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(K0Error::Parse("empty class text".into()));
        }
        if s == "0" {
            return Ok(K0Class::zero());
        }
        let mut out = K0Class::zero();
        let mut rest = s;
        let mut sign = 1i64;
        let mut first = true;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if !first || rest.starts_with('+') || rest.starts_with('-') {
                if !first && !(rest.starts_with('+') || rest.starts_with('-')) {
                    return Err(K0Error::Parse(format!("expected sign near {rest:?}")));
                }
                if let Some(r) = rest.strip_prefix('+') {
                    sign = 1;
                    rest = r.trim_start();
                } else if let Some(r) = rest.strip_prefix('-') {
                    sign = -1;
                    rest = r.trim_start();
                }
            }
            first = false;
            // Optional integer multiplicity.
            let digits_end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            let (mult, after_digits) = if digits_end > 0 {
                let mult: i64 = rest[..digits_end]
                    .parse()
                    .map_err(|e| K0Error::Parse(format!("bad multiplicity: {e}")))?;
                (mult, rest[digits_end..].trim_start())
            } else {
                (1, rest)
            };
            if let Some(r) = after_digits.strip_prefix("[M_{") {
                let end = r
                    .find("}]")
                    .ok_or_else(|| K0Error::Parse(format!("unterminated class near {r:?}")))?;
                let body = &r[..end];
                let (a_txt, b_txt) = body
                    .split_once(',')
                    .ok_or_else(|| K0Error::Parse(format!("expected a,b in {body:?}")))?;
                let a: u32 = a_txt
                    .trim()
                    .parse()
                    .map_err(|e| K0Error::Parse(format!("bad index a: {e}")))?;
                let b: i32 = b_txt
                    .trim()
                    .parse()
                    .map_err(|e| K0Error::Parse(format!("bad index b: {e}")))?;
                out.add_term(IrrClass::new(a, b), sign * mult);
                rest = r[end + 2..].trim_start();
            } else if digits_end > 0 {
                // A bare integer means a multiple of the unit class.
                out.add_term(IrrClass::new(0, 0), sign * mult);
                rest = after_digits;
            } else {
                return Err(K0Error::Parse(format!("expected term near {rest:?}")));
            }
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    a: u32,
    b: i32,
    mult: i64,
}

impl Serialize for K0Class {
    /// Serializes as a `(a, b)`-sorted list of `{"a", "b", "mult"}` rows.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                a: m.a,
                b: m.b,
                mult: *c,
            })
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for K0Class {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<K0Class, D::Error> {
        let rows = Vec::<TermJson>::deserialize(deserializer)?;
        let mut out = K0Class::zero();
        for row in rows {
            if row.mult == 0 {
                return Err(D::Error::custom("zero multiplicities are never stored"));
            }
            out.add_term(IrrClass::new(row.a, row.b), row.mult);
        }
        Ok(out)
    }
}
