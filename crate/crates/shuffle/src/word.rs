//! Words over a single alphabet, graded by total letter weight.

use std::fmt;
use std::str::FromStr;

use crate::error::ShuffleError;
use crate::letter::{Alphabet, Letter};

/// A finite sequence of letters drawn from a single alphabet.
///
/// The derived ordering is lexicographic with a proper prefix comparing
/// smaller, matching the letter order of [`Letter`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    /// Builds a word, rejecting letter sequences that mix the two alphabets.
    pub fn new(letters: Vec<Letter>) -> Result<Word, ShuffleError> {
        let mut seen: Option<Alphabet> = None;
        for l in &letters {
            match seen {
                None => seen = Some(l.alphabet()),
                Some(a) if a == l.alphabet() => {}
                Some(_) => return Err(ShuffleError::MixedAlphabets),
            }
        }
        Ok(Word(letters))
    }

    /// Builds a word from letters already known to share one alphabet.
    pub(crate) fn unchecked(letters: Vec<Letter>) -> Word {
        debug_assert!(Word::new(letters.clone()).is_ok());
        Word(letters)
    }

    /// The empty word (the unit of both concatenation and shuffle).
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// The one-letter word on `l`.
    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    /// The underlying letter sequence.
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether this is the empty word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total weight: the sum of the letter weights.
    pub fn weight(&self) -> u32 {
        self.0.iter().map(|l| l.weight()).sum()
    }

    /// The alphabet of the word, or `None` for the empty word.
    pub fn alphabet(&self) -> Option<Alphabet> {
        self.0.first().map(|l| l.alphabet())
    }

    /// Concatenation, rejecting mixed alphabets.
    pub fn concat(&self, other: &Word) -> Result<Word, ShuffleError> {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word::new(letters)
    }

    /// All splits `self = prefix · suffix`, including the two trivial ones.
    pub fn splits(&self) -> impl Iterator<Item = (Word, Word)> + '_ {
        (0..=self.len()).map(move |k| {
            (
                Word::unchecked(self.0[..k].to_vec()),
                Word::unchecked(self.0[k..].to_vec()),
            )
        })
    }

    /// All words of the given weight over one alphabet, in lexicographic order.
    pub fn all_of_weight(alphabet: Alphabet, weight: u32) -> Vec<Word> {
        if weight == 0 {
            return vec![Word::empty()];
        }
        let mut out = Vec::new();
        for &l in alphabet.letters() {
            if l.weight() > weight {
                continue;
            }
            for tail in Word::all_of_weight(alphabet, weight - l.weight()) {
                let mut letters = Vec::with_capacity(1 + tail.len());
                letters.push(l);
                letters.extend_from_slice(tail.letters());
                out.push(Word(letters));
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ShuffleError;

    /// Parses dot-separated letter names, e.g. `pi0.tau.pi0`; `1` is the empty word.
    fn from_str(s: &str) -> Result<Word, ShuffleError> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for name in s.split('.') {
            let name = name.trim();
            let l = Letter::from_name(name)
                .ok_or_else(|| ShuffleError::Parse(format!("unknown letter name {name:?}")))?;
            letters.push(l);
        }
        Word::new(letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn mixed_alphabets_rejected() {
        assert_eq!(
            Word::new(vec![Letter::E0, Letter::Tau]),
            Err(ShuffleError::MixedAlphabets)
        );
        assert_eq!("e0.pi0".parse::<Word>(), Err(ShuffleError::MixedAlphabets));
    }

    #[test]
    fn weight_sums_letter_weights() {
        assert_eq!(w("pi0.tau.pi0").weight(), 4);
        assert_eq!(w("sigma1.tau").weight(), 5);
        assert_eq!(Word::empty().weight(), 0);
    }

    #[test]
    fn display_and_parse_round_trip() {
        for text in ["1", "e0", "pi0.tau.pi0", "sigma0.sigma1", "e1.e0.e1"] {
            assert_eq!(w(text).to_string(), text);
        }
        assert!("pi0.zeta".parse::<Word>().is_err());
    }

    #[test]
    fn splits_enumerate_all_cuts() {
        let word = w("pi0.pi1.tau");
        let splits: Vec<_> = word.splits().collect();
        assert_eq!(splits.len(), 4);
        assert_eq!(splits[0], (Word::empty(), word.clone()));
        assert_eq!(splits[2], (w("pi0.pi1"), w("tau")));
        assert_eq!(splits[3], (word.clone(), Word::empty()));
    }

    #[test]
    fn word_counts_by_weight() {
        // Over {e0,e1} every letter has weight 1, so there are 2^n words.
        for n in 0..8u32 {
            assert_eq!(Word::all_of_weight(Alphabet::E, n).len(), 1 << n);
        }
        // Over the five-letter alphabet the counts obey
        // W(n) = 2W(n-1) + W(n-2) + 2W(n-3).
        let counts: Vec<usize> = (0..9)
            .map(|n| Word::all_of_weight(Alphabet::A, n).len())
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 37, 98, 261, 694, 1845]);
        for n in 3..counts.len() {
            assert_eq!(
                counts[n],
                2 * counts[n - 1] + counts[n - 2] + 2 * counts[n - 3]
            );
        }
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free() {
        let words = Word::all_of_weight(Alphabet::A, 4);
        for pair in words.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }
}
