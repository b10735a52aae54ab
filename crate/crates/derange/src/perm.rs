//! Unsigned permutations of `[n] = {1, …, n}`.
//!
//! A [`Permutation`] is stored in one-line form: entry `k` holds `π(k)`.
//! All public semantics are 1-based; storage offsets never leak. The module
//! also provides the canonical cycle form ([`CycleDecomposition`]), the
//! inversion statistic, the derangement predicate, and exhaustive
//! derangement enumeration in lexicographic one-line order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `[n]` in one-line form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line images `[π(1), …, π(n)]`,
    /// rejecting out-of-range and duplicate entries.
    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for (idx, &v) in images.iter().enumerate() {
            if v < 1 || v > n {
                return Err(Error::EntryOutOfRange {
                    value: v as i64,
                    position: idx + 1,
                    degree: n,
                });
            }
            if seen[v] {
                return Err(Error::DuplicateEntry {
                    value: v as i64,
                    position: idx + 1,
                });
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    /// The identity permutation of degree `n`.
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// Degree `n`.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `π(k)` for 1-based `k`.
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    /// The one-line images `[π(1), …, π(n)]`.
    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (idx, &v) in self.images.iter().enumerate() {
            inv[v - 1] = idx + 1;
        }
        Self { images: inv }
    }

    /// Functional composition: `(self ∘ other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                actual: other.degree(),
            });
        }
        let images = other.images.iter().map(|&v| self.images[v - 1]).collect();
        Ok(Self { images })
    }

    /// True iff `π(k) ≠ k` for every `k`.
    pub fn is_derangement(&self) -> bool {
        self.images.iter().enumerate().all(|(idx, &v)| v != idx + 1)
    }

    /// Number of inversions `|{(i, j) : i < j, π(i) > π(j)}|`.
    pub fn inversion_count(&self) -> u64 {
        let mut count = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// True iff the inversion count is even.
    pub fn is_even(&self) -> bool {
        self.inversion_count() % 2 == 0
    }

    /// Canonical cycle form: each cycle led by its largest element, cycles
    /// ordered by decreasing leader, fixed points omitted.
    pub fn cycle_decompose(&self) -> CycleDecomposition {
        let n = self.images.len();
        let mut visited = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start] || self.image(start) == start {
                visited[start] = true;
                continue;
            }
            let mut orbit = Vec::new();
            let mut k = start;
            while !visited[k] {
                visited[k] = true;
                orbit.push(k);
                k = self.image(k);
            }
            cycles.push(orbit);
        }
        CycleDecomposition::canonicalize(cycles)
            .expect("orbits of a valid permutation are disjoint")
    }

    /// Parses either one-line form `[2,3,1]` (degree fixed by the entry count)
    /// or cycle form `(5,2)(4,1,3)` completed to degree `n` with fixed points.
    pub fn parse_with_degree(text: &str, n: usize) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('[') {
            let p: Permutation = trimmed.parse()?;
            if p.degree() != n {
                return Err(Error::DegreeMismatch {
                    expected: n,
                    actual: p.degree(),
                });
            }
            Ok(p)
        } else {
            let c: CycleDecomposition = trimmed.parse()?;
            cycle_compose(&c, n)
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, v) in self.images.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses one-line form `[2,3,1]`: square brackets, comma-separated,
    /// no spaces required. Errors carry the byte offset of the failure.
    fn from_str(s: &str) -> Result<Self> {
        let entries = parse_bracketed(s, '[', ']')?;
        let images = entries
            .into_iter()
            .map(|(pos, v)| {
                usize::try_from(v).map_err(|_| Error::Parse {
                    position: pos,
                    message: "expected a positive integer".into(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_one_line(images)
    }
}

/// A permutation presented as disjoint cycles.
///
/// Canonical form: every cycle starts with its largest element and cycles are
/// sorted by decreasing leading element. Fixed points may be represented as
/// singleton cycles but are omitted by [`Permutation::cycle_decompose`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    /// Canonicalizes raw cycles: rotates each so its largest element leads,
    /// sorts by decreasing leader, and rejects repeated elements.
    pub fn canonicalize(cycles: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        let mut canon = Vec::with_capacity(cycles.len());
        for cycle in cycles {
            if cycle.is_empty() {
                continue;
            }
            for (idx, &v) in cycle.iter().enumerate() {
                if v == 0 {
                    return Err(Error::EntryOutOfRange {
                        value: 0,
                        position: idx + 1,
                        degree: 0,
                    });
                }
                if !seen.insert(v) {
                    return Err(Error::DuplicateEntry {
                        value: v as i64,
                        position: idx + 1,
                    });
                }
            }
            let lead = cycle
                .iter()
                .enumerate()
                .max_by_key(|&(_, &v)| v)
                .map(|(idx, _)| idx)
                .expect("cycle is nonempty");
            let mut rotated = Vec::with_capacity(cycle.len());
            rotated.extend_from_slice(&cycle[lead..]);
            rotated.extend_from_slice(&cycle[..lead]);
            canon.push(rotated);
        }
        canon.sort_by(|a, b| b[0].cmp(&a[0]));
        Ok(Self { cycles: canon })
    }

    /// The canonical cycles, largest leader first.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// The largest element mentioned in any cycle (0 when empty).
    pub fn max_element(&self) -> usize {
        self.cycles.first().map_or(0, |c| c[0])
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (idx, v) in cycle.iter().enumerate() {
                if idx > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl FromStr for CycleDecomposition {
    type Err = Error;

    /// Parses cycle form `(5,2)(4,1,3)`; `()` is the empty decomposition.
    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut cycles = Vec::new();
        while pos < bytes.len() {
            if bytes[pos].is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            if bytes[pos] != b'(' {
                return Err(Error::Parse {
                    position: pos,
                    message: "expected '('".into(),
                });
            }
            let close = s[pos..]
                .find(')')
                .map(|off| pos + off)
                .ok_or(Error::Parse {
                    position: s.len(),
                    message: "expected ')'".into(),
                })?;
            let inner = &s[pos + 1..close];
            if !inner.trim().is_empty() {
                let mut cycle = Vec::new();
                let mut entry_pos = pos + 1;
                for piece in inner.split(',') {
                    let first_non_ws = entry_pos + piece.len() - piece.trim_start().len();
                    let v: usize = piece.trim().parse().map_err(|_| Error::Parse {
                        position: first_non_ws,
                        message: "expected a positive integer".into(),
                    })?;
                    cycle.push(v);
                    entry_pos += piece.len() + 1;
                }
                cycles.push(cycle);
            }
            pos = close + 1;
        }
        CycleDecomposition::canonicalize(cycles)
    }
}

/// Rebuilds the one-line permutation of degree `n` from disjoint cycles;
/// elements not mentioned become fixed points.
pub fn cycle_compose(c: &CycleDecomposition, n: usize) -> Result<Permutation> {
    let mut images: Vec<usize> = (1..=n).collect();
    for cycle in c.cycles() {
        for (idx, &v) in cycle.iter().enumerate() {
            if v > n {
                return Err(Error::EntryOutOfRange {
                    value: v as i64,
                    position: idx + 1,
                    degree: n,
                });
            }
            let next = cycle[(idx + 1) % cycle.len()];
            images[v - 1] = next;
        }
    }
    Permutation::from_one_line(images)
}

/// Shorthand for [`Permutation::cycle_decompose`].
pub fn cycle_decompose(p: &Permutation) -> CycleDecomposition {
    p.cycle_decompose()
}

/// Number of inversions of `p`.
pub fn inversion_count(p: &Permutation) -> u64 {
    p.inversion_count()
}

/// True iff `p` has an even number of inversions.
pub fn is_even(p: &Permutation) -> bool {
    p.is_even()
}

/// True iff `p` has no fixed point.
pub fn is_derangement(p: &Permutation) -> bool {
    p.is_derangement()
}

/// Iterator over all derangements of `[n]` in lexicographic one-line order.
pub fn enumerate_derangements(n: usize) -> Derangements {
    Derangements {
        next: Some((1..=n).collect()),
    }
}

/// Lexicographic derangement stream; see [`enumerate_derangements`].
pub struct Derangements {
    next: Option<Vec<usize>>,
}

impl Iterator for Derangements {
    type Item = Permutation;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let current = self.next.as_mut()?;
            let fixed_free = current.iter().enumerate().all(|(idx, &v)| v != idx + 1);
            let item = if fixed_free {
                Some(Permutation {
                    images: current.clone(),
                })
            } else {
                None
            };
            if !advance_lex(current) {
                self.next = None;
            }
            if let Some(p) = item {
                return Some(p);
            }
            self.next.as_ref()?;
        }
    }
}

/// Advances `v` to its lexicographic successor in place; false at the last one.
fn advance_lex(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Parses `prefix`-delimited comma-separated integers, returning each entry
/// with the byte offset where it starts (for error reporting).
pub(crate) fn parse_bracketed(s: &str, open: char, close: char) -> Result<Vec<(usize, i64)>> {
    let trimmed_start = s.len() - s.trim_start().len();
    let body = s.trim();
    if !body.starts_with(open) {
        return Err(Error::Parse {
            position: trimmed_start,
            message: format!("expected '{open}'"),
        });
    }
    if !body.ends_with(close) {
        return Err(Error::Parse {
            position: trimmed_start + body.len(),
            message: format!("expected '{close}'"),
        });
    }
    let inner = &body[open.len_utf8()..body.len() - close.len_utf8()];
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut entry_pos = trimmed_start + open.len_utf8();
    for piece in inner.split(',') {
        let first_non_ws = entry_pos + piece.len() - piece.trim_start().len();
        let v: i64 = piece.trim().parse().map_err(|_| Error::Parse {
            position: first_non_ws,
            message: "expected an integer".into(),
        })?;
        out.push((first_non_ws, v));
        entry_pos += piece.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_one_line(images.to_vec()).unwrap()
    }

    #[test]
    fn rejects_invalid_one_line() {
        assert!(matches!(
            Permutation::from_one_line(vec![1, 3]),
            Err(Error::EntryOutOfRange {
                value: 3,
                position: 2,
                ..
            })
        ));
        assert!(matches!(
            Permutation::from_one_line(vec![2, 2, 1]),
            Err(Error::DuplicateEntry {
                value: 2,
                position: 2
            })
        ));
    }

    #[test]
    fn cycle_decompose_follows_orbits_with_largest_leaders() {
        assert_eq!(p(&[2, 3, 1]).cycle_decompose().to_string(), "(3,1,2)");
        assert_eq!(p(&[1, 2, 3]).cycle_decompose().cycles().len(), 0);
        assert_eq!(p(&[1, 2, 3]).cycle_decompose().to_string(), "()");
        // two orbits: 1→2→1 and 3→5→4→3
        assert_eq!(
            p(&[2, 1, 5, 3, 4]).cycle_decompose().to_string(),
            "(5,4,3)(2,1)"
        );
    }

    #[test]
    fn cycle_compose_restores_one_line_forms() {
        let c: CycleDecomposition = "(3,1,2)".parse().unwrap();
        assert_eq!(cycle_compose(&c, 3).unwrap(), p(&[2, 3, 1]));
        let empty: CycleDecomposition = "()".parse().unwrap();
        assert_eq!(cycle_compose(&empty, 3).unwrap(), p(&[1, 2, 3]));
        // π(5)=2, π(2)=5, π(4)=1, π(1)=3, π(3)=4
        let c: CycleDecomposition = "(5,2)(4,1,3)".parse().unwrap();
        assert_eq!(cycle_compose(&c, 5).unwrap(), p(&[3, 5, 4, 1, 2]));
    }

    #[test]
    fn compose_then_decompose_round_trips_exhaustively_to_degree_7() {
        for n in 1..=7 {
            let mut current: Vec<usize> = (1..=n).collect();
            loop {
                let perm = Permutation::from_one_line(current.clone()).unwrap();
                let back = cycle_compose(&perm.cycle_decompose(), n).unwrap();
                assert_eq!(back, perm);
                if !advance_lex(&mut current) {
                    break;
                }
            }
        }
    }

    #[test]
    fn inversion_count_matches_pair_scan() {
        assert_eq!(p(&[2, 1]).inversion_count(), 1);
        assert_eq!(p(&[1, 2, 3]).inversion_count(), 0);
        assert_eq!(p(&[2, 3, 1]).inversion_count(), 2);
    }

    #[test]
    fn parity_examples() {
        assert!(p(&[1, 2, 3]).is_even());
        assert!(!p(&[2, 1]).is_even());
        assert!(p(&[2, 3, 1]).is_even());
    }

    #[test]
    fn parity_is_multiplicative_under_composition() {
        let n = 5;
        let mut all = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            all.push(Permutation::from_one_line(current.clone()).unwrap());
            if !advance_lex(&mut current) {
                break;
            }
        }
        for a in &all {
            for b in &all {
                let c = a.compose(b).unwrap();
                assert_eq!(c.is_even(), a.is_even() == b.is_even());
            }
        }
    }

    #[test]
    fn derangement_predicate() {
        assert!(p(&[2, 3, 1]).is_derangement());
        assert!(!p(&[1, 3, 2]).is_derangement());
        assert!(p(&[2, 1, 4, 3]).is_derangement());
    }

    #[test]
    fn derangement_enumeration_counts_and_order() {
        assert_eq!(enumerate_derangements(1).count(), 0);
        let two: Vec<_> = enumerate_derangements(2).collect();
        assert_eq!(two, vec![p(&[2, 1])]);
        assert_eq!(enumerate_derangements(3).count(), 2);
        assert_eq!(enumerate_derangements(4).count(), 9);
        assert_eq!(enumerate_derangements(5).count(), 44);
        let four: Vec<_> = enumerate_derangements(4).collect();
        let mut sorted = four.clone();
        sorted.sort();
        assert_eq!(four, sorted);
    }

    #[test]
    fn inverse_and_compose_agree() {
        let q = p(&[3, 5, 4, 1, 2]);
        assert_eq!(q.compose(&q.inverse()).unwrap(), Permutation::identity(5));
        assert_eq!(q.inverse().compose(&q).unwrap(), Permutation::identity(5));
    }

    #[test]
    fn one_line_text_round_trip() {
        let q: Permutation = "[2,3,1]".parse().unwrap();
        assert_eq!(q, p(&[2, 3, 1]));
        assert_eq!(q.to_string(), "[2,3,1]");
        let err = "[2,x,1]".parse::<Permutation>().unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                position: 3,
                message: "expected an integer".into()
            }
        );
    }

    #[test]
    fn cycle_text_round_trip() {
        let c: CycleDecomposition = "(5,2)(4,1,3)".parse().unwrap();
        assert_eq!(c.to_string(), "(5,2)(4,1,3)");
        // non-canonical input is canonicalized
        let c: CycleDecomposition = "(1,3,4)(2,5)".parse().unwrap();
        assert_eq!(c.to_string(), "(5,2)(4,1,3)");
        assert!(matches!(
            "(1,2".parse::<CycleDecomposition>(),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn parse_with_degree_accepts_both_notations() {
        let a = Permutation::parse_with_degree("[3,5,4,1,2]", 5).unwrap();
        let b = Permutation::parse_with_degree("(5,2)(4,1,3)", 5).unwrap();
        assert_eq!(a, b);
        assert!(matches!(
            Permutation::parse_with_degree("[2,1]", 3),
            Err(Error::DegreeMismatch {
                expected: 3,
                actual: 2
            })
        ));
    }
}
