//! The two width-monotone word operations and sequence replay.
//!
//! A type-1 operation deletes a minimum at position `i` together with a
//! maximum at a later position `j`; its exact width drop is
//! `prefix[i] + prefix[j] + 2 (j - i - 1)`. On words with nonnegative
//! prefixes the drop is nonnegative, so the operation never increases
//! width; it additionally keeps the prefixes nonnegative exactly when every
//! level strictly between the deleted pair meets at least two strands
//! (knot words always satisfy this; a merely nonnegative word need not —
//! see the unit tests for the four-letter counterexample). A type-2
//! operation exchanges adjacent letters at positions `i`, `i + 1` provided
//! the pair is not (max, min); it drops the width by exactly 4 when the
//! pair is (min, max) and leaves it unchanged otherwise.
//!
//! Monotone replay chains only apply type-1 steps to nonnegative words;
//! without that premise a legal deletion can raise the width.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{Letter, MorseWord, Validity};

/// One rewriting step. Positions are 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum OpStep {
    /// Delete the minimum at `i` and the maximum at `j`, `i < j`.
    Type1 { i: usize, j: usize },
    /// Exchange the letters at `i` and `i + 1`.
    Type2 { i: usize },
}

impl OpStep {
    pub fn apply(&self, word: &MorseWord) -> Result<MorseWord, OpError> {
        match *self {
            OpStep::Type1 { i, j } => type1_delete(word, i, j),
            OpStep::Type2 { i } => type2_swap(word, i),
        }
    }
}

impl fmt::Display for OpStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpStep::Type1 { i, j } => write!(f, "type1@({i},{j})"),
            OpStep::Type2 { i } => write!(f, "type2@{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpError {
    #[error("position {pos} out of range for word of length {len}")]
    BadPosition { pos: usize, len: usize },
    #[error("type-1 positions must satisfy i < j, got i={i}, j={j}")]
    BadOrder { i: usize, j: usize },
    #[error("expected {expected} at position {pos}, found {found}")]
    BadLetter {
        pos: usize,
        expected: Letter,
        found: Letter,
    },
    #[error("swap at {i} would exchange (max, min), which may raise the width")]
    ExcludedSwap { i: usize },
}

/// Error from replaying a sequence: the first failing step (1-indexed) and
/// its cause.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("step {step}: {source}")]
pub struct SequenceError {
    pub step: usize,
    #[source]
    pub source: OpError,
}

/// Width and validity after one replayed step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub step: OpStep,
    pub width: i64,
    pub validity: Validity,
}

/// Result of replaying an operation sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceTrace {
    pub final_word: MorseWord,
    pub trace: Vec<TraceEntry>,
}

impl SequenceTrace {
    pub fn widths(&self) -> Vec<i64> {
        self.trace.iter().map(|e| e.width).collect()
    }
}

/// Delete the minimum at position `i` and the maximum at position `j`.
pub fn type1_delete(word: &MorseWord, i: usize, j: usize) -> Result<MorseWord, OpError> {
    let len = word.len();
    check_position(i, len)?;
    check_position(j, len)?;
    if i >= j {
        return Err(OpError::BadOrder { i, j });
    }
    check_letter(word, i, Letter::Min)?;
    check_letter(word, j, Letter::Max)?;
    let letters = word
        .letters()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i - 1 && k != j - 1)
        .map(|(_, &l)| l)
        .collect();
    Ok(MorseWord::from_vec_unchecked(letters))
}

/// Exchange the letters at positions `i` and `i + 1`. Equal-letter swaps are
/// permitted no-ops; the (max, min) pair is refused.
pub fn type2_swap(word: &MorseWord, i: usize) -> Result<MorseWord, OpError> {
    let len = word.len();
    check_position(i, len)?;
    if i + 1 > len {
        return Err(OpError::BadPosition { pos: i + 1, len });
    }
    let a = word.letter(i).expect("position checked");
    let b = word.letter(i + 1).expect("position checked");
    if (a, b) == (Letter::Max, Letter::Min) {
        return Err(OpError::ExcludedSwap { i });
    }
    let mut letters = word.letters().to_vec();
    letters.swap(i - 1, i);
    Ok(MorseWord::from_vec_unchecked(letters))
}

/// Replay `steps` from `word`, recording width and validity after each step.
/// Fails on the first invalid step, reporting its 1-based index.
pub fn apply_sequence(word: &MorseWord, steps: &[OpStep]) -> Result<SequenceTrace, SequenceError> {
    let mut current = word.clone();
    let mut trace = Vec::with_capacity(steps.len());
    for (k, step) in steps.iter().enumerate() {
        current = step.apply(&current).map_err(|source| SequenceError {
            step: k + 1,
            source,
        })?;
        trace.push(TraceEntry {
            step: *step,
            width: current.width(),
            validity: current.validity(),
        });
    }
    Ok(SequenceTrace {
        final_word: current,
        trace,
    })
}

/// Exact width drop of a legal type-1 deletion, from the prefix sums of the
/// input word: `prefix[i] + prefix[j] + 2 (j - i - 1)`.
pub fn type1_drop(word: &MorseWord, i: usize, j: usize) -> Result<i64, OpError> {
    let len = word.len();
    check_position(i, len)?;
    check_position(j, len)?;
    if i >= j {
        return Err(OpError::BadOrder { i, j });
    }
    check_letter(word, i, Letter::Min)?;
    check_letter(word, j, Letter::Max)?;
    let prefix = word.prefix_sums();
    Ok(prefix[i - 1] + prefix[j - 1] + 2 * (j - i - 1) as i64)
}

fn check_position(pos: usize, len: usize) -> Result<(), OpError> {
    if pos == 0 || pos > len {
        return Err(OpError::BadPosition { pos, len });
    }
    Ok(())
}

fn check_letter(word: &MorseWord, pos: usize, expected: Letter) -> Result<(), OpError> {
    let found = word.letter(pos).expect("position checked");
    if found != expected {
        return Err(OpError::BadLetter {
            pos,
            expected,
            found,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(text: &str) -> MorseWord {
        MorseWord::parse(text).unwrap()
    }

    #[test]
    fn type1_examples() {
        // Drops frozen by recomputation: 8 - 2 = 6 = 4 + 2 + 0.
        let w = word("aabb");
        let r = type1_delete(&w, 2, 3).unwrap();
        assert_eq!(r, word("ab"));
        assert_eq!(w.width() - r.width(), 6);
        assert_eq!(type1_drop(&w, 2, 3), Ok(6));

        let r = type1_delete(&word("ab"), 1, 2).unwrap();
        assert_eq!(r, word(""));
        assert_eq!(r.width(), 0);

        // 14 - 8 = 6 = 4 + 2 + 0.
        let w = word("aababb");
        let r = type1_delete(&w, 4, 5).unwrap();
        assert_eq!(r, word("aabb"));
        assert_eq!(w.width() - r.width(), 6);
        assert_eq!(type1_drop(&w, 4, 5), Ok(6));
    }

    #[test]
    fn type1_rejections() {
        let w = word("aabb");
        assert_eq!(
            type1_delete(&w, 3, 4),
            Err(OpError::BadLetter {
                pos: 3,
                expected: Letter::Min,
                found: Letter::Max
            })
        );
        assert_eq!(
            type1_delete(&w, 1, 2),
            Err(OpError::BadLetter {
                pos: 2,
                expected: Letter::Max,
                found: Letter::Min
            })
        );
        assert_eq!(
            type1_delete(&w, 3, 2),
            Err(OpError::BadOrder { i: 3, j: 2 })
        );
        assert_eq!(
            type1_delete(&w, 0, 2),
            Err(OpError::BadPosition { pos: 0, len: 4 })
        );
        assert_eq!(
            type1_delete(&w, 1, 5),
            Err(OpError::BadPosition { pos: 5, len: 4 })
        );
    }

    #[test]
    fn type2_examples() {
        let r = type2_swap(&word("aabb"), 2).unwrap();
        assert_eq!(r, word("abab"));
        assert_eq!(r.width(), 4);
        assert_eq!(r.validity(), Validity::Balanced);

        // Equal letters: a permitted no-op.
        let r = type2_swap(&word("aabb"), 1).unwrap();
        assert_eq!(r, word("aabb"));
        assert_eq!(r.width(), 8);

        assert_eq!(
            type2_swap(&word("abab"), 2),
            Err(OpError::ExcludedSwap { i: 2 })
        );
        assert_eq!(
            type2_swap(&word("aabb"), 4),
            Err(OpError::BadPosition { pos: 5, len: 4 })
        );
        assert_eq!(
            type2_swap(&word("aabb"), 0),
            Err(OpError::BadPosition { pos: 0, len: 4 })
        );
    }

    #[test]
    fn sequence_examples() {
        let steps = [OpStep::Type2 { i: 2 }, OpStep::Type1 { i: 1, j: 2 }];
        let out = apply_sequence(&word("aabb"), &steps).unwrap();
        assert_eq!(out.final_word, word("ab"));
        assert_eq!(out.widths(), vec![4, 2]);

        let out = apply_sequence(&word("aabb"), &[]).unwrap();
        assert_eq!(out.final_word, word("aabb"));
        assert!(out.trace.is_empty());

        let err = apply_sequence(&word("aabb"), &[OpStep::Type1 { i: 3, j: 4 }]).unwrap_err();
        assert_eq!(err.step, 1);
        assert_eq!(
            err.source,
            OpError::BadLetter {
                pos: 3,
                expected: Letter::Min,
                found: Letter::Max
            }
        );
    }

    #[test]
    fn type1_can_increase_width_without_nonnegative_prefixes() {
        // Legal deletion on a word with negative prefixes: width -12 -> -6.
        // This is why monotone chains require nonnegative inputs.
        let w = word("bbab");
        assert_eq!(w.width(), -12);
        let r = type1_delete(&w, 3, 4).unwrap();
        assert_eq!(r, word("bb"));
        assert_eq!(r.width(), -6);
        assert_eq!(type1_drop(&w, 3, 4), Ok(-6));
    }

    #[test]
    fn type1_can_break_nonnegativity_across_a_thin_level() {
        // Levels strictly between the deleted pair lose two strands, so a
        // level carrying only two goes negative: nonnegative input is not
        // enough to keep the result nonnegative.
        let w = word("abab");
        assert!(w.is_nonnegative());
        let r = type1_delete(&w, 1, 4).unwrap();
        assert_eq!(r, word("ba"));
        assert!(!r.is_nonnegative());
        // The width still drops (4 -> -2): monotonicity is unaffected.
        assert_eq!(type1_drop(&w, 1, 4), Ok(6));
    }

    #[test]
    fn opstep_json_schema() {
        let t1 = OpStep::Type1 { i: 1, j: 4 };
        assert_eq!(
            serde_json::to_string(&t1).unwrap(),
            r#"{"kind":"type1","i":1,"j":4}"#
        );
        let t2: OpStep = serde_json::from_str(r#"{"kind":"type2","i":2}"#).unwrap();
        assert_eq!(t2, OpStep::Type2 { i: 2 });
        let steps: Vec<OpStep> =
            serde_json::from_str(r#"[{"kind":"type2","i":2},{"kind":"type1","i":1,"j":2}]"#)
                .unwrap();
        assert_eq!(steps.len(), 2);
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = MorseWord> {
        proptest::string::string_regex(&format!("[ab]{{0,{max_len}}}"))
            .unwrap()
            .prop_map(|s| MorseWord::parse(&s).unwrap())
    }

    proptest! {
        #[test]
        fn type1_drop_matches_recomputation(w in arb_word(24), i in 1usize..24, j in 1usize..24) {
            if let Ok(result) = type1_delete(&w, i, j) {
                let drop = type1_drop(&w, i, j).unwrap();
                prop_assert_eq!(w.width() - result.width(), drop);
                if w.is_nonnegative() {
                    prop_assert!(drop >= 0);
                    // Preservation holds exactly when the straddled levels
                    // all carry at least two strands.
                    let prefix = w.prefix_sums();
                    let thick = ((i + 1)..j).all(|p| prefix[p - 1] >= 2);
                    prop_assert_eq!(result.is_nonnegative(), thick);
                }
            }
        }

        #[test]
        fn type2_touches_one_prefix(w in arb_word(24), i in 1usize..24) {
            if let Ok(result) = type2_swap(&w, i) {
                let before = w.prefix_sums();
                let after = result.prefix_sums();
                let drop = w.width() - result.width();
                prop_assert!(drop == 0 || drop == 4);
                for k in 0..before.len() {
                    if k == i - 1 {
                        prop_assert_eq!(before[k] - after[k], drop);
                    } else {
                        prop_assert_eq!(before[k], after[k]);
                    }
                }
            }
        }
    }
}
