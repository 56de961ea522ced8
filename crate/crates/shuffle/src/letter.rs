//! Weighted letters and the two generating alphabets.

use std::fmt;

/// The alphabet a letter belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Alphabet {
    /// The two-letter alphabet `{e0, e1}` of fundamental-group coordinates.
    E,
    /// The five-letter alphabet `{pi0, pi1, tau, sigma0, sigma1}` of dual generators.
    A,
}

impl Alphabet {
    /// The letters of this alphabet in their fixed order.
    pub fn letters(self) -> &'static [Letter] {
        match self {
            Alphabet::E => &[Letter::E0, Letter::E1],
            Alphabet::A => &[
                Letter::Pi0,
                Letter::Pi1,
                Letter::Tau,
                Letter::Sigma0,
                Letter::Sigma1,
            ],
        }
    }
}

/// A generator letter carrying a positive integer weight.
///
/// The declaration order fixes the letter order used throughout:
/// `e0 < e1` and `pi0 < pi1 < tau < sigma0 < sigma1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    E0,
    E1,
    Pi0,
    Pi1,
    Tau,
    Sigma0,
    Sigma1,
}

impl Letter {
    /// The weight of the letter: `e`- and `pi`-letters 1, `tau` 2, `sigma`-letters 3.
    pub fn weight(self) -> u32 {
        match self {
            Letter::E0 | Letter::E1 | Letter::Pi0 | Letter::Pi1 => 1,
            Letter::Tau => 2,
            Letter::Sigma0 | Letter::Sigma1 => 3,
        }
    }

    /// The alphabet the letter belongs to.
    pub fn alphabet(self) -> Alphabet {
        match self {
            Letter::E0 | Letter::E1 => Alphabet::E,
            _ => Alphabet::A,
        }
    }

    /// The plain-text name used in word syntax.
    pub fn name(self) -> &'static str {
        match self {
            Letter::E0 => "e0",
            Letter::E1 => "e1",
            Letter::Pi0 => "pi0",
            Letter::Pi1 => "pi1",
            Letter::Tau => "tau",
            Letter::Sigma0 => "sigma0",
            Letter::Sigma1 => "sigma1",
        }
    }

    /// Looks a letter up by its plain-text name.
    pub fn from_name(name: &str) -> Option<Letter> {
        match name {
            "e0" => Some(Letter::E0),
            "e1" => Some(Letter::E1),
            "pi0" => Some(Letter::Pi0),
            "pi1" => Some(Letter::Pi1),
            "tau" => Some(Letter::Tau),
            "sigma0" => Some(Letter::Sigma0),
            "sigma1" => Some(Letter::Sigma1),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
