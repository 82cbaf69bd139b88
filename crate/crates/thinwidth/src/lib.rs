//! Width calculus for Morse words.
//!
//! A knot embedding in general position meets the horizontal levels between
//! consecutive critical values in a number of strands; the sum of those
//! strand counts is the embedding's width. Reading the critical points from
//! bottom to top as a word over `{a, b}` (minimum, maximum) turns width
//! into prefix-sum arithmetic on words, and this crate implements that
//! calculus end to end:
//!
//! - [`word`]: words, prefix sums, width, bridge number, validity classes;
//! - [`ops`]: the two width-monotone word operations and sequence replay;
//! - [`satellite`]: braid-pattern blowups, the `n^2 w` lower-bound
//!   accounting, and gap reports;
//! - [`gamma`]: leveled slab graphs of sliced solid tori, unique-loop
//!   extraction, vertex classification, and loop words;
//! - [`enumerate`]: exhaustive enumeration of knot words by bridge number,
//!   minimum-width tables, and the verification suites that scan every
//!   invariant family at desk scale.
//!
//! ```
//! use thinwidth::{blowup, MorseWord};
//!
//! let companion = MorseWord::parse("aabb")?;
//! assert_eq!(companion.width(), 8);
//! assert_eq!(companion.bridge_number(), Ok(2));
//!
//! // A braid pattern with winding number 3 scales the width by 9.
//! let satellite = blowup(&companion, 3)?;
//! assert_eq!(satellite.to_string(), "aaaaaabbbbbb");
//! assert_eq!(satellite.width(), 9 * companion.width());
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```
//!
//! All values are immutable and all operations are pure functions, so the
//! whole API is safe to use from any number of threads.

pub mod enumerate;
pub mod gamma;
pub mod ops;
pub mod satellite;
pub mod word;

pub use enumerate::{
    enumerate_knot_words, min_width_table, run_property_suite, EnumerateError, EnumerationResult,
    Suite, SuiteLimits, SuiteReport, TableRow, DEFAULT_MAX_BRIDGE,
};
pub use gamma::{
    classify, find_unique_loop, load_spec, GammaError, LoopAnalysis, TubeSpec, TubeVertex,
    VertexClass,
};
pub use ops::{
    apply_sequence, type1_delete, type2_swap, OpError, OpStep, SequenceError, SequenceTrace,
};
pub use satellite::{blowup, lower_bound, theorem_gap, BoundReport, BoundTerm, SatelliteError};
pub use word::{Letter, MorseWord, Validity, WidthProfile, WordError};
