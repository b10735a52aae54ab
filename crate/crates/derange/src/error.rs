//! Crate-wide error type.
//!
//! Every fallible operation in this crate returns [`enum@Error`]. Variants are
//! deliberately fine-grained so that the CLI can map them onto exit codes and
//! position-annotated messages without string matching.

use thiserror::Error;

/// Errors produced by construction, parsing, classification, and the
/// injection/inversion routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A one-line or window entry falls outside the legal range for the degree.
    #[error("entry {value} at position {position} is out of range for degree {degree}")]
    EntryOutOfRange {
        /// The offending entry as written.
        value: i64,
        /// 1-based position of the entry.
        position: usize,
        /// Degree of the object being built.
        degree: usize,
    },

    /// Two entries share the same (absolute) value.
    #[error("duplicate value {value} at position {position}")]
    DuplicateEntry {
        /// The repeated (absolute) value.
        value: i64,
        /// 1-based position of the second occurrence.
        position: usize,
    },

    /// Text input could not be parsed; `position` is a 0-based byte offset.
    #[error("parse error at byte {position}: {message}")]
    Parse {
        /// Byte offset of the first unusable character.
        position: usize,
        /// What was expected there.
        message: String,
    },

    /// Two objects that must share a degree do not.
    #[error("degree mismatch: expected {expected}, got {actual}")]
    DegreeMismatch {
        /// Degree required by the operation.
        expected: usize,
        /// Degree supplied.
        actual: usize,
    },

    /// An insertion slot lies outside its admissible interval.
    #[error("slot {slot} out of range [1, {max}]")]
    SlotOutOfRange {
        /// The slot supplied.
        slot: usize,
        /// Largest admissible slot.
        max: usize,
    },

    /// An operation that requires a derangement received one with a fixed point.
    #[error("not a derangement: fixed point at position {position}")]
    NotADerangement {
        /// 1-based position of the first fixed point.
        position: usize,
    },

    /// A pair was handed to a sub-map whose class predicate it does not satisfy.
    #[error("pair is in class {found}, but {expected} is required")]
    WrongClass {
        /// Class required by the sub-map.
        expected: &'static str,
        /// Class actually detected.
        found: String,
    },

    /// The pair lies outside the (strict) image of the injection being inverted.
    #[error("pair is not in the image of the injection")]
    NotInImage,

    /// A parity map was applied outside its domain.
    #[error("domain violation: {0}")]
    Domain(String),

    /// An enumeration request exceeded the configured cap.
    #[error("enumeration cap exceeded: requested {requested}, cap {cap}")]
    CapExceeded {
        /// Degree requested.
        requested: usize,
        /// Largest supported degree.
        cap: usize,
    },

    /// A log-convexity window contains a non-positive term.
    #[error("sequence term at index {index} is not positive")]
    NonPositiveTerm {
        /// Absolute sequence index of the offending term.
        index: usize,
    },

    /// The degree is outside the range an operation is defined for.
    #[error("degree {degree} unsupported: {reason}")]
    UnsupportedDegree {
        /// Degree supplied.
        degree: usize,
        /// Why it is rejected.
        reason: &'static str,
    },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
