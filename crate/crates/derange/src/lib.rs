//! Derangement combinatorics for unsigned and signed permutations.
//!
//! The crate provides:
//!
//! - [`perm`]: unsigned permutations in one-line form, cycle notation,
//!   derangement enumeration, and inversion counting.
//! - [`factor`]: the slot/inner factorisation of a derangement through the
//!   two lower degrees, in both directions.
//! - [`type_a`]: an explicit injection from pairs of degree-`n`
//!   derangements into pairs of degree-`n−1` and degree-`n+1`
//!   derangements, with a strict inverse on its image.
//! - [`signed`]: signed permutations (windows), the signed derangement
//!   predicate, sub-family predicates, statistics, and enumeration.
//! - [`type_bd`]: the analogous explicit injection for signed derangement
//!   pairs, preserving negative-count parity componentwise, with a strict
//!   inverse on its image.
//! - [`seq`]: the counting sequences for all of the above — recurrences,
//!   closed forms, enumeration cross-checks, the even/odd split, and a
//!   log-convexity scanner.
//! - [`parity`]: sign-flip bijections pairing even with odd windows under
//!   two different parity statistics.
//! - [`verify`]: named exhaustive verification suites over every map and
//!   identity, used by the CLI and the acceptance tests.
//!
//! Injectivity of the pair maps is established here by finite verification
//! at small degree (see [`verify`]), not asserted for all degrees.

// parity tests read better as matched `% 2 == 0` / `% 2 == 1` pairs
#![allow(clippy::manual_is_multiple_of)]

pub mod error;
pub mod factor;
pub mod parity;
pub mod perm;
pub mod seq;
pub mod signed;
pub mod type_a;
pub mod type_bd;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{cycle_compose, enumerate_derangements, CycleDecomposition, Permutation};
pub use signed::{enumerate_signed_derangements, SignedFamily, SignedPermutation};
