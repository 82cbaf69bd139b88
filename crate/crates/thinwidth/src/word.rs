//! Morse words and their width calculus.
//!
//! A Morse word records the critical points of a knot embedding read from
//! bottom to top: `a` for a local minimum, `b` for a local maximum. The
//! running count of strands on the regular level just above critical point
//! `i` is the prefix sum `prefix[i]` (each minimum opens two strands, each
//! maximum closes two), and the width of the word is the sum of all prefix
//! values. Positions are 1-indexed throughout.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A single critical point: a local minimum (`a`) or maximum (`b`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Letter {
    /// Local minimum, rendered `a`; opens two strands.
    Min,
    /// Local maximum, rendered `b`; closes two strands.
    Max,
}

impl Letter {
    /// Strand-count increment contributed by this letter.
    pub fn phi(self) -> i64 {
        match self {
            Letter::Min => 2,
            Letter::Max => -2,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::Min => 'a',
            Letter::Max => 'b',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::Min),
            'b' => Some(Letter::Max),
            _ => None,
        }
    }

    /// Lowercase name, matching the JSON rendering.
    pub fn name(self) -> &'static str {
        match self {
            Letter::Min => "min",
            Letter::Max => "max",
        }
    }

    /// The letter of the same critical point seen upside down.
    pub fn flipped(self) -> Letter {
        match self {
            Letter::Min => Letter::Max,
            Letter::Max => Letter::Min,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Classification of a Morse word by how close it comes to the profile of a
/// genuine knot embedding.
///
/// - `Formal`: any letter sequence (final strand count nonzero).
/// - `Balanced`: final strand count zero (equal minima and maxima), but some
///   interior level meets fewer than two strands, so the profile belongs to a
///   split configuration rather than a single closed curve.
/// - `Nonnegative`: every prefix is nonnegative but the word is not balanced.
/// - `Knot`: balanced, at least two letters, and every interior level meets
///   at least two strands — the profile of a connected closed curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Validity {
    Formal,
    Balanced,
    Nonnegative,
    Knot,
}

impl fmt::Display for Validity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Validity::Formal => "formal",
            Validity::Balanced => "balanced",
            Validity::Nonnegative => "nonnegative",
            Validity::Knot => "knot",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    /// Input text contains a character other than `a` or `b`.
    /// The index is 1-based, counted in characters.
    #[error("invalid character {found:?} at index {index} (expected 'a' or 'b')")]
    InvalidCharacter { index: usize, found: char },
    /// The word has unequal numbers of minima and maxima.
    #[error("word is not balanced (final strand count {final_prefix})")]
    NotBalanced { final_prefix: i64 },
    /// The word would exceed the supported length; widths beyond this bound
    /// could not be computed in 64-bit integers without wrapping.
    #[error("word length {len} exceeds the supported maximum {max}")]
    TooLong { len: usize, max: usize },
}

/// A finite sequence of critical-point letters, ordered by increasing height.
///
/// Any sequence is representable; see [`Validity`] for the classification.
/// Construction enforces [`MorseWord::MAX_LEN`] so that every width fits in
/// an `i64` exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MorseWord {
    letters: Vec<Letter>,
}

impl MorseWord {
    /// Longest supported word. The width of a word of length `t` is bounded
    /// in magnitude by `t(t+1)`, which stays below `i64::MAX` for all
    /// lengths up to this cap.
    pub const MAX_LEN: usize = (1 << 31) - 1;

    pub fn new(letters: Vec<Letter>) -> Result<MorseWord, WordError> {
        if letters.len() > Self::MAX_LEN {
            return Err(WordError::TooLong {
                len: letters.len(),
                max: Self::MAX_LEN,
            });
        }
        Ok(MorseWord { letters })
    }

    /// Internal constructor for words already known to be within bounds
    /// (results of deletions, slices of validated words, and so on).
    pub(crate) fn from_vec_unchecked(letters: Vec<Letter>) -> MorseWord {
        debug_assert!(letters.len() <= Self::MAX_LEN);
        MorseWord { letters }
    }

    /// Parse a word from lowercase `a`/`b` text. The empty string is the
    /// empty word.
    pub fn parse(text: &str) -> Result<MorseWord, WordError> {
        let mut letters = Vec::with_capacity(text.len());
        for (k, c) in text.chars().enumerate() {
            match Letter::from_char(c) {
                Some(letter) => letters.push(letter),
                None => {
                    return Err(WordError::InvalidCharacter {
                        index: k + 1,
                        found: c,
                    })
                }
            }
        }
        MorseWord::new(letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Letter at 1-based position `pos`, or `None` when out of range.
    pub fn letter(&self, pos: usize) -> Option<Letter> {
        if pos == 0 {
            return None;
        }
        self.letters.get(pos - 1).copied()
    }

    /// Strand counts on the regular levels just above each critical point:
    /// entry `i` of the result (0-based) is the prefix sum after letter
    /// `i + 1`.
    pub fn prefix_sums(&self) -> Vec<i64> {
        let mut acc = 0i64;
        self.letters
            .iter()
            .map(|l| {
                acc += l.phi();
                acc
            })
            .collect()
    }

    /// Final strand count, `2 (#min - #max)`; zero exactly for balanced words.
    pub fn final_prefix(&self) -> i64 {
        self.letters.iter().map(|l| l.phi()).sum()
    }

    /// Width: the sum of all prefix values. May be negative for words whose
    /// prefixes go negative.
    pub fn width(&self) -> i64 {
        let mut acc = 0i64;
        let mut total = 0i64;
        for l in &self.letters {
            acc += l.phi();
            total += acc;
        }
        total
    }

    pub fn is_balanced(&self) -> bool {
        self.final_prefix() == 0
    }

    pub fn is_nonnegative(&self) -> bool {
        let mut acc = 0i64;
        self.letters.iter().all(|l| {
            acc += l.phi();
            acc >= 0
        })
    }

    /// See [`Validity`]. The empty word is `Balanced`.
    pub fn validity(&self) -> Validity {
        self.profile_parts().1
    }

    /// Half the number of critical points.
    pub fn bridge_number(&self) -> Result<u32, WordError> {
        let final_prefix = self.final_prefix();
        if final_prefix != 0 {
            return Err(WordError::NotBalanced { final_prefix });
        }
        Ok((self.len() / 2) as u32)
    }

    /// Full report: prefix sums, width, bridge number (when balanced), and
    /// validity class.
    pub fn profile(&self) -> WidthProfile {
        let (prefix, validity) = self.profile_parts();
        let width = prefix.iter().sum();
        let bridge = if prefix.last().copied().unwrap_or(0) == 0 {
            Some((self.len() / 2) as u32)
        } else {
            None
        };
        WidthProfile {
            word: self.clone(),
            prefix,
            width,
            bridge,
            validity,
        }
    }

    fn profile_parts(&self) -> (Vec<i64>, Validity) {
        let prefix = self.prefix_sums();
        let t = prefix.len();
        let balanced = prefix.last().copied().unwrap_or(0) == 0;
        let nonnegative = prefix.iter().all(|&p| p >= 0);
        let knot = t >= 2 && balanced && prefix[..t - 1].iter().all(|&p| p >= 2);
        let validity = if knot {
            Validity::Knot
        } else if balanced {
            Validity::Balanced
        } else if nonnegative {
            Validity::Nonnegative
        } else {
            Validity::Formal
        };
        (prefix, validity)
    }

    /// The word of the same embedding turned upside down: reverse the letter
    /// order and exchange minima with maxima. For balanced words this
    /// preserves width and validity; in general the width changes by
    /// `-(t + 1)` times the final prefix.
    pub fn flipped(&self) -> MorseWord {
        MorseWord::from_vec_unchecked(self.letters.iter().rev().map(|l| l.flipped()).collect())
    }
}

impl fmt::Display for MorseWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for MorseWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MorseWord::parse(s)
    }
}

impl Serialize for MorseWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MorseWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        MorseWord::parse(&text).map_err(D::Error::custom)
    }
}

/// Prefix sums, width, bridge number, and validity class of one word.
///
/// Invariants: `prefix[i] = prefix[i-1] + phi(letter i)` with `prefix[0] = 0`
/// implied, `width` is the sum of all prefix entries, and `bridge` is
/// `len / 2` exactly when the final prefix is zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WidthProfile {
    pub word: MorseWord,
    pub prefix: Vec<i64>,
    pub width: i64,
    pub bridge: Option<u32>,
    pub validity: Validity,
}
