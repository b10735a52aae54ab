//! Exact integer sequences of derangement counts: recurrences and closed
//! forms for the unsigned family, enumerated counts for the signed
//! families, log-convexity verdicts, and the two polynomial expressions
//! that control the even/odd split.
//!
//! All values are arbitrary precision ([`Nat`]); `h_30` already overflows
//! 64-bit words. Identities are checked exactly, never with tolerances.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::enumerate_derangements;
use crate::signed::{enumerate_signed_derangements, SignedFamily};

/// Arbitrary-precision nonnegative integer; the value type of every table.
pub type Nat = BigUint;

/// `h_1..h_n` by the two-term recurrence `h_n = (n−1)(h_{n−1} + h_{n−2})`.
fn h_values(n_max: usize) -> Vec<Nat> {
    let mut v: Vec<Nat> = Vec::with_capacity(n_max);
    if n_max >= 1 {
        v.push(Nat::zero());
    }
    if n_max >= 2 {
        v.push(Nat::one());
    }
    for n in 3..=n_max {
        let sum = &v[n - 2] + &v[n - 3];
        v.push(sum * Nat::from(n - 1));
    }
    v
}

/// The unsigned derangement count by the two-term recurrence
/// (`h_1 = 0`, `h_2 = 1`, `h_n = (n−1)(h_{n−1} + h_{n−2})`).
pub fn h_rec(n: usize) -> Result<Nat> {
    if n == 0 {
        return Err(Error::UnsupportedDegree {
            degree: 0,
            reason: "the derangement sequence starts at n = 1",
        });
    }
    Ok(h_values(n).pop().expect("nonempty for n >= 1"))
}

/// The unsigned derangement count by the one-term recurrence
/// `h_n = n·h_{n−1} + (−1)^n`.
pub fn h_reduced(n: usize) -> Result<Nat> {
    if n < 2 {
        return Err(Error::UnsupportedDegree {
            degree: n,
            reason: "the one-term recurrence starts at n = 2",
        });
    }
    let prev = BigInt::from(h_rec(n - 1)?);
    let sign: BigInt = if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let value = BigInt::from(n) * prev + sign;
    Ok(value.to_biguint().expect("count is nonnegative"))
}

/// Signed helper: `(−1)^{n−1}·(n−1)`, the exact gap between the even and
/// odd derangement counts.
fn parity_gap(n: usize) -> BigInt {
    let gap = BigInt::from(n as i64 - 1);
    if n % 2 == 1 {
        gap
    } else {
        -gap
    }
}

/// The number of degree-`n` derangements with evenly many inversions,
/// by the closed form `(h_n + (−1)^{n−1}(n−1)) / 2`.
pub fn h_plus(n: usize) -> Result<Nat> {
    let total = BigInt::from(h_rec(n)?);
    let value = (total + parity_gap(n)) / BigInt::from(2);
    Ok(value.to_biguint().expect("count is nonnegative"))
}

/// The number of degree-`n` derangements with oddly many inversions,
/// by the closed form `(h_n − (−1)^{n−1}(n−1)) / 2`.
pub fn h_minus(n: usize) -> Result<Nat> {
    let total = BigInt::from(h_rec(n)?);
    let value = (total - parity_gap(n)) / BigInt::from(2);
    Ok(value.to_biguint().expect("count is nonnegative"))
}

/// `n·h_{n−1}·(h_{n−1} + (−1)^n(n²+n−4)) + n²−4`: equals
/// `4(h⁺_{n+1}h⁺_{n−1} − (h⁺_n)²)`, so its sign settles log-convexity of
/// the even-derangement sequence at index `n`.
pub fn even_expr(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::UnsupportedDegree {
            degree: n,
            reason: "the expression needs n >= 2",
        });
    }
    let h1 = BigInt::from(h_rec(n - 1)?);
    let nn = BigInt::from(n);
    let sign: BigInt = if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let inner = &h1 + sign * BigInt::from(n * n + n - 4);
    Ok(nn * &h1 * inner + BigInt::from(n * n) - BigInt::from(4))
}

/// `n·h_{n−1}·(h_{n−1} − (−1)^n(n²+n−2)) − n²`: equals
/// `4(h⁻_{n+1}h⁻_{n−1} − (h⁻_n)²)`, the odd-derangement analogue of
/// [`even_expr`].
pub fn odd_expr(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::UnsupportedDegree {
            degree: n,
            reason: "the expression needs n >= 2",
        });
    }
    let h1 = BigInt::from(h_rec(n - 1)?);
    let nn = BigInt::from(n);
    let sign: BigInt = if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let inner = &h1 - sign * BigInt::from(n * n + n - 2);
    Ok(nn * &h1 * inner - BigInt::from(n * n))
}

/// The ten sequence families the library knows how to tabulate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqFamily {
    /// Unsigned derangements.
    H,
    /// Signed derangements.
    HB,
    /// Signed derangements with evenly many negative entries.
    HD,
    /// Signed derangements with oddly many negative entries.
    HBminusD,
    /// Unsigned derangements with even inversion count.
    HPlus,
    /// Unsigned derangements with odd inversion count.
    HMinus,
    /// Signed derangements with even `inv_b`.
    HBPlus,
    /// Signed derangements with odd `inv_b`.
    HBMinus,
    /// Even-negative signed derangements with even `inv_d`.
    HDPlus,
    /// Even-negative signed derangements with odd `inv_d`.
    HDMinus,
}

impl SeqFamily {
    /// The canonical family name used in tables, CSV, and the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            SeqFamily::H => "h",
            SeqFamily::HB => "hB",
            SeqFamily::HD => "hD",
            SeqFamily::HBminusD => "hBminusD",
            SeqFamily::HPlus => "hPlus",
            SeqFamily::HMinus => "hMinus",
            SeqFamily::HBPlus => "hBPlus",
            SeqFamily::HBMinus => "hBMinus",
            SeqFamily::HDPlus => "hDPlus",
            SeqFamily::HDMinus => "hDMinus",
        }
    }

    /// All families, in display order.
    pub fn all() -> [SeqFamily; 10] {
        [
            SeqFamily::H,
            SeqFamily::HB,
            SeqFamily::HD,
            SeqFamily::HBminusD,
            SeqFamily::HPlus,
            SeqFamily::HMinus,
            SeqFamily::HBPlus,
            SeqFamily::HBMinus,
            SeqFamily::HDPlus,
            SeqFamily::HDMinus,
        ]
    }

    /// True for the families living on signed permutations.
    pub fn is_signed(&self) -> bool {
        matches!(
            self,
            SeqFamily::HB
                | SeqFamily::HD
                | SeqFamily::HBminusD
                | SeqFamily::HBPlus
                | SeqFamily::HBMinus
                | SeqFamily::HDPlus
                | SeqFamily::HDMinus
        )
    }

    /// Largest degree [`enumerated_table`] will brute-force: signed windows
    /// up to 7, unsigned up to 9.
    pub fn enumeration_cap(&self) -> usize {
        if self.is_signed() {
            7
        } else {
            9
        }
    }

    /// True when a closed form is available ([`table`] prefers it).
    pub fn has_closed_form(&self) -> bool {
        matches!(self, SeqFamily::H | SeqFamily::HPlus | SeqFamily::HMinus)
    }

    fn signed_family(&self) -> Option<SignedFamily> {
        match self {
            SeqFamily::HB => Some(SignedFamily::B),
            SeqFamily::HD => Some(SignedFamily::D),
            SeqFamily::HBminusD => Some(SignedFamily::BminusD),
            SeqFamily::HBPlus => Some(SignedFamily::BPlus),
            SeqFamily::HBMinus => Some(SignedFamily::BMinus),
            SeqFamily::HDPlus => Some(SignedFamily::DPlus),
            SeqFamily::HDMinus => Some(SignedFamily::DMinus),
            _ => None,
        }
    }
}

impl fmt::Display for SeqFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeqFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeqFamily::all()
            .into_iter()
            .find(|fam| fam.name() == s)
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!(
                    "unknown family {s:?}; expected one of {}",
                    SeqFamily::all().map(|f| f.name()).join(", ")
                ),
            })
    }
}

/// A named run of sequence values starting at `start_index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    pub name: String,
    pub start_index: usize,
    pub values: Vec<Nat>,
}

#[derive(Serialize)]
struct TableJson<'a> {
    family: &'a str,
    start_index: usize,
    values: Vec<String>,
}

impl SequenceTable {
    /// The value at absolute index `n`, if tabulated.
    pub fn get(&self, n: usize) -> Option<&Nat> {
        n.checked_sub(self.start_index)
            .and_then(|off| self.values.get(off))
    }

    /// The absolute index of the last tabulated value.
    pub fn end_index(&self) -> usize {
        self.start_index + self.values.len() - 1
    }

    /// CSV with header `family,n,value` and one row per index.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("family,n,value\n");
        for (off, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{},{},{}\n", self.name, self.start_index + off, v));
        }
        out
    }

    fn json_repr(&self) -> TableJson<'_> {
        TableJson {
            family: &self.name,
            start_index: self.start_index,
            values: self.values.iter().map(|v| v.to_string()).collect(),
        }
    }

    /// A single JSON object with the values as decimal strings.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.json_repr()).expect("table serializes")
    }
}

/// CSV for several tables under one header.
pub fn tables_to_csv(tables: &[SequenceTable]) -> String {
    let mut out = String::from("family,n,value\n");
    for t in tables {
        for (off, v) in t.values.iter().enumerate() {
            out.push_str(&format!("{},{},{}\n", t.name, t.start_index + off, v));
        }
    }
    out
}

/// JSON array with one object per family.
pub fn tables_to_json(tables: &[SequenceTable]) -> String {
    let reprs: Vec<_> = tables.iter().map(|t| t.json_repr()).collect();
    serde_json::to_string(&reprs).expect("tables serialize")
}

/// Outcome of a log-convexity scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    LogConvex,
    /// Absolute index `n` of the first middle term with `a_n² > a_{n−1}a_{n+1}`.
    ViolationAt(usize),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::LogConvex => f.write_str("log-convex"),
            Verdict::ViolationAt(n) => write!(f, "violation at n={n}"),
        }
    }
}

/// Checks `a_n² ≤ a_{n−1}·a_{n+1}` at every interior index of the table.
/// The definition requires positive terms; a zero anywhere in the window is
/// reported as [`Error::NonPositiveTerm`] with its absolute index.
pub fn is_log_convex(table: &SequenceTable) -> Result<Verdict> {
    for (off, v) in table.values.iter().enumerate() {
        if v.is_zero() {
            return Err(Error::NonPositiveTerm {
                index: table.start_index + off,
            });
        }
    }
    for k in 1..table.values.len().saturating_sub(1) {
        let middle = &table.values[k] * &table.values[k];
        let ends = &table.values[k - 1] * &table.values[k + 1];
        if middle > ends {
            return Ok(Verdict::ViolationAt(table.start_index + k));
        }
    }
    Ok(Verdict::LogConvex)
}

/// Tabulates `family` on `1..=n_max` by brute-force enumeration.
///
/// Signed families are capped at degree 7 and unsigned at 9 (the next
/// degree is minutes, not seconds); [`Error::CapExceeded`] past that.
pub fn enumerated_table(family: SeqFamily, n_max: usize) -> Result<SequenceTable> {
    let cap = family.enumeration_cap();
    if n_max > cap {
        return Err(Error::CapExceeded {
            requested: n_max,
            cap,
        });
    }
    let mut values = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let count = match family {
            SeqFamily::H => enumerate_derangements(n).count(),
            SeqFamily::HPlus => enumerate_derangements(n).filter(|p| p.is_even()).count(),
            SeqFamily::HMinus => enumerate_derangements(n).filter(|p| !p.is_even()).count(),
            _ => {
                let signed = family
                    .signed_family()
                    .expect("remaining families are signed");
                enumerate_signed_derangements(n, signed).len()
            }
        };
        values.push(Nat::from(count));
    }
    Ok(SequenceTable {
        name: family.name().to_string(),
        start_index: 1,
        values,
    })
}

/// Tabulates `family` on `1..=n_max` from the closed forms; only the
/// unsigned families (`h`, `hPlus`, `hMinus`) have one.
pub fn closed_table(family: SeqFamily, n_max: usize) -> Result<SequenceTable> {
    if n_max == 0 {
        return Err(Error::UnsupportedDegree {
            degree: 0,
            reason: "tables start at n = 1",
        });
    }
    let values: Vec<Nat> = match family {
        SeqFamily::H => h_values(n_max),
        SeqFamily::HPlus => (1..=n_max).map(|n| h_plus(n).expect("n >= 1")).collect(),
        SeqFamily::HMinus => (1..=n_max).map(|n| h_minus(n).expect("n >= 1")).collect(),
        other => {
            return Err(Error::Domain(format!(
                "family {other} has no closed form; use enumerated_table"
            )))
        }
    };
    Ok(SequenceTable {
        name: family.name().to_string(),
        start_index: 1,
        values,
    })
}

/// The preferred table for a family: closed form when available (any
/// `n_max`), enumeration otherwise (capped).
pub fn table(family: SeqFamily, n_max: usize) -> Result<SequenceTable> {
    if family.has_closed_form() {
        closed_table(family, n_max)
    } else {
        enumerated_table(family, n_max)
    }
}
