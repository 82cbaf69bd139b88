//! Braid-satellite word construction and lower-bound accounting.
//!
//! `blowup` replaces each letter of a companion-loop word by `n` copies of
//! itself, modeling a braid pattern with winding number `n`; for balanced
//! input the width scales by exactly `n^2`. `lower_bound` computes the
//! per-critical-point contributions `n^2 w_j + n(n-1)` (minima) and
//! `n^2 w_j - n(n-1)` (maxima), where `w_j` is the strand count just above
//! critical point `j` of the loop word; the signed correction terms cancel
//! for balanced words, so the total is `n^2` times the loop width.

use serde::Serialize;
use thiserror::Error;

use crate::word::{Letter, MorseWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatelliteError {
    /// Winding number 0 leaves no braid pattern word to construct.
    #[error("winding number must be at least 1")]
    BadWinding,
    #[error("word {word:?} is not balanced (final strand count {final_prefix})")]
    NotBalanced { word: String, final_prefix: i64 },
    #[error("blowup of length {len} by {n} exceeds the supported word length {max}")]
    TooLong { len: usize, n: u32, max: usize },
    #[error("width arithmetic overflows 64-bit integers for winding number {n}")]
    Overflow { n: u32 },
}

/// One critical point's share of the satellite width bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundTerm {
    /// 1-based position in the loop word.
    pub index: usize,
    pub kind: Letter,
    /// Strand count on the regular level just above this critical point.
    pub omega: i64,
    /// `n^2 * omega + n(n-1)` for minima, `n^2 * omega - n(n-1)` for maxima.
    pub contribution: i64,
}

/// Per-critical-point breakdown of the `n^2 w` satellite lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: u32,
    pub loop_word: MorseWord,
    pub terms: Vec<BoundTerm>,
    pub total: i64,
    /// Whether `total = n^2 * width(loop_word)`; holds for every balanced
    /// input because the signed `n(n-1)` corrections cancel.
    pub identity_holds: bool,
}

/// Repeat each letter of `word` `n` times in place.
pub fn blowup(word: &MorseWord, n: u32) -> Result<MorseWord, SatelliteError> {
    if n == 0 {
        return Err(SatelliteError::BadWinding);
    }
    let new_len = word
        .len()
        .checked_mul(n as usize)
        .filter(|&l| l <= MorseWord::MAX_LEN)
        .ok_or(SatelliteError::TooLong {
            len: word.len(),
            n,
            max: MorseWord::MAX_LEN,
        })?;
    let mut letters = Vec::with_capacity(new_len);
    for &l in word.letters() {
        letters.extend(std::iter::repeat_n(l, n as usize));
    }
    Ok(MorseWord::from_vec_unchecked(letters))
}

/// Per-critical-point lower-bound accounting for a satellite with winding
/// number `n` over the balanced loop word.
pub fn lower_bound(loop_word: &MorseWord, n: u32) -> Result<BoundReport, SatelliteError> {
    if n == 0 {
        return Err(SatelliteError::BadWinding);
    }
    require_balanced(loop_word)?;
    let n_i64 = i64::from(n);
    let n_squared = n_i64
        .checked_mul(n_i64)
        .ok_or(SatelliteError::Overflow { n })?;
    let correction = n_i64 * (n_i64 - 1);

    let prefix = loop_word.prefix_sums();
    let mut terms = Vec::with_capacity(loop_word.len());
    let mut total = 0i64;
    for (k, &letter) in loop_word.letters().iter().enumerate() {
        let omega = prefix[k];
        let scaled = n_squared
            .checked_mul(omega)
            .ok_or(SatelliteError::Overflow { n })?;
        let signed = match letter {
            Letter::Min => correction,
            Letter::Max => -correction,
        };
        let contribution = scaled
            .checked_add(signed)
            .ok_or(SatelliteError::Overflow { n })?;
        total = total
            .checked_add(contribution)
            .ok_or(SatelliteError::Overflow { n })?;
        terms.push(BoundTerm {
            index: k + 1,
            kind: letter,
            omega,
            contribution,
        });
    }

    let expected = n_squared
        .checked_mul(loop_word.width())
        .ok_or(SatelliteError::Overflow { n })?;
    Ok(BoundReport {
        n,
        loop_word: loop_word.clone(),
        terms,
        total,
        identity_holds: total == expected,
    })
}

/// `width(satellite_word) - n^2 * width(loop_word)`. Reports the slack of
/// the satellite inequality; nonnegativity is a premise about where the
/// satellite word came from, not something this function can check.
pub fn theorem_gap(
    satellite_word: &MorseWord,
    loop_word: &MorseWord,
    n: u32,
) -> Result<i64, SatelliteError> {
    if n == 0 {
        return Err(SatelliteError::BadWinding);
    }
    require_balanced(satellite_word)?;
    require_balanced(loop_word)?;
    let n_i64 = i64::from(n);
    let bound = n_i64
        .checked_mul(n_i64)
        .and_then(|n2| n2.checked_mul(loop_word.width()))
        .ok_or(SatelliteError::Overflow { n })?;
    satellite_word
        .width()
        .checked_sub(bound)
        .ok_or(SatelliteError::Overflow { n })
}

fn require_balanced(word: &MorseWord) -> Result<(), SatelliteError> {
    let final_prefix = word.final_prefix();
    if final_prefix != 0 {
        return Err(SatelliteError::NotBalanced {
            word: word.to_string(),
            final_prefix,
        });
    }
    Ok(())
}
