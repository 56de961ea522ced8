//! Tables of modular-symbol values on exact rationals.

use crate::error::PadicError;
use crate::padic::{check_prime, Rational};
use num_bigint::BigInt;
use serde::Deserialize;
use std::collections::BTreeMap;

/// Largest summation range (`p^prec` terms) the sum will attempt.
pub(crate) const TERM_LIMIT: u64 = 1_000_000;

/// Computes the summation range `p^prec`, guarding size and precision.
pub(crate) fn term_range(p: u64, prec: u32) -> Result<u64, PadicError> {
    if prec == 0 {
        return Err(PadicError::InvalidPrecision { prec });
    }
    match p.checked_pow(prec) {
        Some(n) if n <= TERM_LIMIT => Ok(n),
        _ => Err(PadicError::RangeTooLarge {
            p,
            prec,
            limit: TERM_LIMIT,
        }),
    }
}

/// Sign of the symbol space a table was drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolParity {
    /// Symbols odd under complex conjugation.
    Minus,
    /// Symbols even under complex conjugation.
    Plus,
}

/// A finite table `r ↦ φ(r)` of exact rational symbol values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularSymbolTable {
    parity: SymbolParity,
    entries: BTreeMap<Rational, Rational>,
}

impl ModularSymbolTable {
    /// An empty table with the given parity tag.
    pub fn new(parity: SymbolParity) -> Self {
        Self {
            parity,
            entries: BTreeMap::new(),
        }
    }

    /// The parity tag.
    pub fn parity(&self) -> SymbolParity {
        self.parity
    }

    /// Number of recorded values.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Whether the table holds no values.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Records `φ(r) = value`. Re-recording the same value is accepted;
    /// a conflicting value is an error.
    pub fn insert(&mut self, r: Rational, value: Rational) -> Result<(), PadicError> {
        if let Some(existing) = self.entries.get(&r) {
            if *existing != value {
                return Err(PadicError::ConflictingSymbol { r: r.to_string() });
            }
            return Ok(());
        }
        self.entries.insert(r, value);
        Ok(())
    }

    /// The recorded value at `r`, if any.
    pub fn get(&self, r: &Rational) -> Option<&Rational> {
        self.entries.get(r)
    }

    /// The recorded value at `r`, or an error naming the uncovered
    /// argument.
    pub fn evaluate(&self, r: &Rational) -> Result<&Rational, PadicError> {
        self.entries.get(r).ok_or_else(|| PadicError::MissingSymbol {
            r: r.to_string(),
        })
    }

    /// The arguments the special-value sum at `(p, prec)` reads:
    /// `a/p^prec` and `a/p^(prec−1)` for every `a` in `[0, p^prec)`
    /// coprime to `p`.
    pub fn required_arguments(p: u64, prec: u32) -> Result<Vec<Rational>, PadicError> {
        check_prime(p)?;
        let range = term_range(p, prec)?;
        let deep = BigInt::from(p).pow(prec);
        let shallow = BigInt::from(p).pow(prec - 1);
        let mut out = Vec::new();
        for a in 0..range {
            if a % p != 0 {
                out.push(Rational::new(BigInt::from(a), deep.clone()));
                out.push(Rational::new(BigInt::from(a), shallow.clone()));
            }
        }
        Ok(out)
    }

    /// Confirms every argument of the sum at `(p, prec)` is covered.
    pub fn check_coverage(&self, p: u64, prec: u32) -> Result<(), PadicError> {
        for r in Self::required_arguments(p, prec)? {
            if !self.entries.contains_key(&r) {
                return Err(PadicError::MissingSymbol { r: r.to_string() });
            }
        }
        Ok(())
    }
}

/// Parses a JSON array of `{"r": "num/den", "phi": "num/den"}` entries
/// into a table with the given parity tag.
pub fn parse_symbols(text: &str, parity: SymbolParity) -> Result<ModularSymbolTable, PadicError> {
    #[derive(Deserialize)]
    struct RawEntry {
        r: String,
        phi: String,
    }

    let parse_rational = |s: &str| -> Result<Rational, PadicError> {
        s.trim()
            .parse::<Rational>()
            .map_err(|e| PadicError::SymbolFormat {
                detail: format!("bad rational {s:?}: {e}"),
            })
    };

    let raw: Vec<RawEntry> =
        serde_json::from_str(text).map_err(|e| PadicError::SymbolFormat {
            detail: e.to_string(),
        })?;
    let mut table = ModularSymbolTable::new(parity);
    for entry in raw {
        table.insert(parse_rational(&entry.r)?, parse_rational(&entry.phi)?)?;
    }
    Ok(table)
}
