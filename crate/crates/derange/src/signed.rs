//! Signed permutations in window notation, their derangement families, and
//! the window statistics used by the signed injections and parity maps.
//!
//! A signed permutation of degree `n` sends `k ↦ ±π(k)` with the absolute
//! values forming an ordinary permutation of `[n]`; oddness
//! `π(−k) = −π(k)` is definitional and never stored. The window
//! `[π(1), …, π(n)]` is the canonical text form, e.g. `[-1,-6,-3,5,-4,-2]`.
//!
//! A *derangement* here means `π(k) ≠ k` for all `k`; `π(k) = −k` is
//! allowed. The families carved out of the derangement set are listed in
//! [`SignedFamily`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::parse_bracketed;

/// A signed permutation of `{±1, …, ±n}` stored as its window
/// `[π(1), …, π(n)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    window: Vec<i64>,
}

impl SignedPermutation {
    /// Builds a signed permutation from its window, validating that the
    /// absolute values form a permutation of `1..=n`.
    pub fn from_window(window: Vec<i64>) -> Result<Self> {
        let n = window.len() as i64;
        let mut seen = vec![false; window.len()];
        for (idx, &v) in window.iter().enumerate() {
            if v == 0 || v.abs() > n {
                return Err(Error::EntryOutOfRange {
                    value: v,
                    position: idx + 1,
                    degree: window.len(),
                });
            }
            let a = v.unsigned_abs() as usize;
            if seen[a - 1] {
                return Err(Error::DuplicateEntry {
                    value: v,
                    position: idx + 1,
                });
            }
            seen[a - 1] = true;
        }
        Ok(SignedPermutation { window })
    }

    /// The longest element `w₀ = [−1, −2, …, −n]`.
    pub fn w0(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i64).map(|k| -k).collect(),
        }
    }

    /// The degree `n`.
    pub fn degree(&self) -> usize {
        self.window.len()
    }

    /// The window `[π(1), …, π(n)]`.
    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// The image of `k`, for `k ∈ {±1, …, ±n}`, using `π(−k) = −π(k)`.
    ///
    /// Panics if `k` is out of range; callers validate degrees.
    pub fn image(&self, k: i64) -> i64 {
        let a = k.unsigned_abs() as usize;
        assert!(k != 0 && a <= self.window.len(), "argument out of range");
        k.signum() * self.window[a - 1]
    }

    /// True iff `π(k) ≠ k` for every `k ∈ [n]` (`π(k) = −k` is allowed).
    pub fn is_derangement_b(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(idx, &v)| v != (idx + 1) as i64)
    }

    /// The number of negative window entries.
    pub fn neg_count(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    /// True iff the negative-entry count is even (membership in the
    /// index-two subgroup).
    pub fn is_in_d(&self) -> bool {
        self.neg_count() % 2 == 0
    }

    /// The unique slot `k` with `|π(k)| = n`.
    pub fn kappa(&self) -> usize {
        let n = self.window.len() as i64;
        self.window
            .iter()
            .position(|&v| v.abs() == n)
            .expect("some window slot holds ±n")
            + 1
    }

    /// The smallest `k ∈ [n−1]` with `π(k) ≠ −k`, or `0` when no such slot
    /// exists; over derangements, `τ(π) = 0` exactly for `w₀`.
    pub fn tau(&self) -> usize {
        let n = self.window.len();
        (1..n)
            .find(|&k| self.window[k - 1] != -(k as i64))
            .unwrap_or(0)
    }

    /// Inversion count `|{i<j: π(i)>π(j)}| + |{i<j: −π(i)>π(j)}| + #negatives`.
    pub fn inv_b(&self) -> u64 {
        self.inv_d() + self.neg_count() as u64
    }

    /// Inversion count without the negative-entry term:
    /// `|{i<j: π(i)>π(j)}| + |{i<j: −π(i)>π(j)}|`.
    pub fn inv_d(&self) -> u64 {
        let w = &self.window;
        let mut count = 0u64;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
                if -w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, v) in self.window.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses window text such as `[-1,-6,-3,5,-4,-2]`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = parse_bracketed(s, '[', ']')?;
        let n = entries.len() as i64;
        let mut seen: Vec<Option<usize>> = vec![None; entries.len()];
        for &(pos, v) in &entries {
            if v == 0 || v.abs() > n {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("entry {v} out of range for degree {n}"),
                });
            }
            let a = v.unsigned_abs() as usize;
            if let Some(first) = seen[a - 1] {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("absolute value {a} already used at byte {first}"),
                });
            }
            seen[a - 1] = Some(pos);
        }
        SignedPermutation::from_window(entries.into_iter().map(|(_, v)| v).collect())
    }
}

impl PartialOrd for SignedPermutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignedPermutation {
    /// Lexicographic order on windows, comparing entries as signed integers.
    fn cmp(&self, other: &Self) -> Ordering {
        self.window.cmp(&other.window)
    }
}

/// The representative of `a + b` in `{1, …, k}` (cyclic addition, with
/// negative `b` allowed).
pub fn cyclic_add(a: i64, b: i64, k: i64) -> i64 {
    (a + b - 1).rem_euclid(k) + 1
}

/// The derangement families over signed permutations.
///
/// `B` is the full signed derangement set; `D` / `BminusD` split it by
/// negative-entry parity; `BPlus` / `BMinus` split it by `inv_b` parity;
/// `DPlus` / `DMinus` split `D` by `inv_d` parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignedFamily {
    B,
    D,
    BminusD,
    BPlus,
    BMinus,
    DPlus,
    DMinus,
}

impl SignedFamily {
    /// Membership predicate over signed derangements.
    pub fn contains(&self, p: &SignedPermutation) -> bool {
        if !p.is_derangement_b() {
            return false;
        }
        match self {
            SignedFamily::B => true,
            SignedFamily::D => p.neg_count() % 2 == 0,
            SignedFamily::BminusD => p.neg_count() % 2 == 1,
            SignedFamily::BPlus => p.inv_b() % 2 == 0,
            SignedFamily::BMinus => p.inv_b() % 2 == 1,
            SignedFamily::DPlus => p.neg_count() % 2 == 0 && p.inv_d() % 2 == 0,
            SignedFamily::DMinus => p.neg_count() % 2 == 0 && p.inv_d() % 2 == 1,
        }
    }
}

impl fmt::Display for SignedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SignedFamily::B => "B",
            SignedFamily::D => "D",
            SignedFamily::BminusD => "BminusD",
            SignedFamily::BPlus => "Bplus",
            SignedFamily::BMinus => "Bminus",
            SignedFamily::DPlus => "Dplus",
            SignedFamily::DMinus => "Dminus",
        };
        f.write_str(name)
    }
}

impl FromStr for SignedFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" => Ok(SignedFamily::B),
            "D" => Ok(SignedFamily::D),
            "BminusD" => Ok(SignedFamily::BminusD),
            "Bplus" => Ok(SignedFamily::BPlus),
            "Bminus" => Ok(SignedFamily::BMinus),
            "Dplus" => Ok(SignedFamily::DPlus),
            "Dminus" => Ok(SignedFamily::DMinus),
            _ => Err(Error::Parse {
                position: 0,
                message: format!(
                    "unknown family {s:?}; expected one of B, D, BminusD, Bplus, Bminus, Dplus, Dminus"
                ),
            }),
        }
    }
}

/// All degree-`n` signed derangements in `family`, each exactly once, in
/// lexicographic window order (entries compared as signed integers).
pub fn enumerate_signed_derangements(n: usize, family: SignedFamily) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    let mut window: Vec<i64> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(n, &mut window, &mut used, family, &mut out);
    out
}

/// Depth-first extension in ascending entry order `−n, …, −1, 1, …, n`,
/// which makes the output lexicographic without a sort.
fn extend(
    n: usize,
    window: &mut Vec<i64>,
    used: &mut Vec<bool>,
    family: SignedFamily,
    out: &mut Vec<SignedPermutation>,
) {
    if window.len() == n {
        let p = SignedPermutation {
            window: window.clone(),
        };
        if family.contains(&p) {
            out.push(p);
        }
        return;
    }
    let slot = (window.len() + 1) as i64;
    for v in (-(n as i64)..=n as i64).filter(|&v| v != 0) {
        if v == slot || used[v.unsigned_abs() as usize - 1] {
            continue;
        }
        used[v.unsigned_abs() as usize - 1] = true;
        window.push(v);
        extend(n, window, used, family, out);
        window.pop();
        used[v.unsigned_abs() as usize - 1] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(text: &str) -> SignedPermutation {
        text.parse().unwrap()
    }

    #[test]
    fn derangement_predicate() {
        assert!(sp("[-1,-2]").is_derangement_b());
        assert!(!sp("[-1,2]").is_derangement_b());
        assert!(sp("[2,1]").is_derangement_b());
    }

    #[test]
    fn negative_entry_counting() {
        assert_eq!(sp("[1,2]").neg_count(), 0);
        assert!(sp("[1,2]").is_in_d());
        assert_eq!(sp("[-2,1]").neg_count(), 1);
        assert!(!sp("[-2,1]").is_in_d());
        assert_eq!(sp("[-1,-2]").neg_count(), 2);
        assert!(sp("[-1,-2]").is_in_d());
    }

    #[test]
    fn kappa_locates_the_top_letter() {
        assert_eq!(sp("[-1,-6,-3,5,-4,-2]").kappa(), 2);
        assert_eq!(sp("[2,1]").kappa(), 1);
        assert_eq!(SignedPermutation::w0(5).kappa(), 5);
    }

    #[test]
    fn tau_scans_the_first_unfixed_slot() {
        assert_eq!(SignedPermutation::w0(6).tau(), 0);
        assert_eq!(sp("[2,3,1,-5,4,-6]").tau(), 1);
        assert_eq!(sp("[-1,-2,6,-5,3,-4]").tau(), 3);
    }

    #[test]
    fn cyclic_addition_examples() {
        assert_eq!(cyclic_add(6, 7, 8), 5);
        assert_eq!(cyclic_add(2, -2, 8), 8);
        assert_eq!(cyclic_add(1, 1, 2), 2);
        assert_eq!(cyclic_add(4, 1, 4), 1);
        assert_eq!(cyclic_add(1, -1, 4), 4);
    }

    #[test]
    fn inversion_statistics() {
        assert_eq!(sp("[1,2]").inv_b(), 0);
        assert_eq!(sp("[-2,1]").inv_b(), 2);
        assert_eq!(sp("[-1,-2]").inv_b(), 4);
        assert_eq!(sp("[1,2]").inv_d(), 0);
        assert_eq!(sp("[-1,-2]").inv_d(), 2);
        assert_eq!(sp("[2,1]").inv_d(), 1);
        // the longest element has inv_b = n²
        assert_eq!(SignedPermutation::w0(4).inv_b(), 16);
    }

    #[test]
    fn flipping_one_sign_flips_inv_b_parity() {
        for p in enumerate_signed_derangements(3, SignedFamily::B) {
            for slot in 0..3 {
                let mut w = p.window().to_vec();
                w[slot] = -w[slot];
                let q = SignedPermutation::from_window(w).unwrap();
                assert_ne!(p.inv_b() % 2, q.inv_b() % 2, "{p} flipped at {slot}");
            }
        }
    }

    #[test]
    fn enumeration_order_and_counts() {
        let b2: Vec<String> = enumerate_signed_derangements(2, SignedFamily::B)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(b2, ["[-2,-1]", "[-2,1]", "[-1,-2]", "[2,-1]", "[2,1]"]);
        assert_eq!(enumerate_signed_derangements(2, SignedFamily::D).len(), 3);
        assert_eq!(
            enumerate_signed_derangements(2, SignedFamily::BPlus).len(),
            3
        );
        let b1 = enumerate_signed_derangements(1, SignedFamily::B);
        assert_eq!(b1.len(), 1);
        assert_eq!(b1[0].to_string(), "[-1]");
        // degree-3 family sizes
        assert_eq!(enumerate_signed_derangements(3, SignedFamily::B).len(), 29);
        assert_eq!(enumerate_signed_derangements(3, SignedFamily::D).len(), 14);
        assert_eq!(
            enumerate_signed_derangements(3, SignedFamily::BminusD).len(),
            15
        );
    }

    #[test]
    fn window_text_round_trips() {
        for text in ["[-1,-6,-3,5,-4,-2]", "[2,1]", "[-1]"] {
            assert_eq!(sp(text).to_string(), text);
        }
        assert!(matches!(
            "[1,0,3]".parse::<SignedPermutation>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "[1,-1]".parse::<SignedPermutation>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "[5,2]".parse::<SignedPermutation>(),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn image_uses_odd_extension() {
        let p = sp("[-1,-6,-3,5,-4,-2]");
        assert_eq!(p.image(2), -6);
        assert_eq!(p.image(-2), 6);
        assert_eq!(p.image(4), 5);
    }
}
