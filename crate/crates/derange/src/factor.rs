//! Degree-changing factorization of derangements.
//!
//! Every derangement of `[n]` arises in exactly one way from a pair
//! `(slot, inner)` where `slot ∈ [n−1]` and `inner` is a derangement of
//! degree `n−1` or `n−2`:
//!
//! * degree `n−1` (*insert* branch): `n` is spliced into `inner`'s cycle
//!   immediately after `slot`, so `n` ends up on a cycle of length ≥ 3;
//! * degree `n−2` (*adjoin* branch): `inner` is relabelled to live on
//!   `[n−1] \ {slot}` (entries ≥ `slot` shift up by one) and the 2-cycle
//!   `(n, slot)` is adjoined, so `n` ends up on a 2-cycle.
//!
//! [`f_map`] builds the degree-`n` derangement, [`g_map`] recovers the pair;
//! they are mutually inverse bijections between `[n−1] × (H_{n−1} ∪ H_{n−2})`
//! and `H_n`, which is the engine behind the recurrence
//! `h_n = (n−1)(h_{n−1} + h_{n−2})` and the degree-shifting pair injection.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Builds a degree-`n` derangement from `slot ∈ [n−1]` and a derangement of
/// degree `n−1` (insert branch) or `n−2` (adjoin branch).
pub fn f_map(n: usize, slot: usize, inner: &Permutation) -> Result<Permutation> {
    if n < 3 {
        return Err(Error::UnsupportedDegree {
            degree: n,
            reason: "factorization needs degree at least 3",
        });
    }
    if slot < 1 || slot > n - 1 {
        return Err(Error::SlotOutOfRange { slot, max: n - 1 });
    }
    if !inner.is_derangement() {
        let fixed = (1..=inner.degree())
            .find(|&k| inner.image(k) == k)
            .unwrap_or(0);
        return Err(Error::NotADerangement { position: fixed });
    }
    let d = inner.degree();
    if d == n - 1 {
        // splice n into the cycle right after `slot`: n inherits slot's image
        let mut images: Vec<usize> = inner.one_line().to_vec();
        images.push(inner.image(slot));
        images[slot - 1] = n;
        Permutation::from_one_line(images)
    } else if d == n - 2 {
        // shift entries ≥ slot up by one, then adjoin the 2-cycle (n, slot)
        let up = |x: usize| if x >= slot { x + 1 } else { x };
        let mut images = vec![0; n];
        for k in 1..=d {
            images[up(k) - 1] = up(inner.image(k));
        }
        images[slot - 1] = n;
        images[n - 1] = slot;
        Permutation::from_one_line(images)
    } else {
        Err(Error::DegreeMismatch {
            expected: n - 1,
            actual: d,
        })
    }
}

/// Recovers the unique `(slot, inner)` with `f_map(n, slot, inner) = p`.
/// The adjoin branch is detected by `n` lying on a 2-cycle of `p`.
pub fn g_map(n: usize, p: &Permutation) -> Result<(usize, Permutation)> {
    if n < 3 {
        return Err(Error::UnsupportedDegree {
            degree: n,
            reason: "factorization needs degree at least 3",
        });
    }
    if p.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            actual: p.degree(),
        });
    }
    if !p.is_derangement() {
        let fixed = (1..=n).find(|&k| p.image(k) == k).unwrap_or(0);
        return Err(Error::NotADerangement { position: fixed });
    }
    let i = p.image(n);
    if p.image(i) == n {
        // n sits on the 2-cycle (n, i): remove it and shift entries > i down
        let down = |x: usize| if x > i { x - 1 } else { x };
        let mut images = vec![0; n - 2];
        for k in 1..=n - 1 {
            if k == i {
                continue;
            }
            images[down(k) - 1] = down(p.image(k));
        }
        Ok((i, Permutation::from_one_line(images)?))
    } else {
        // n sits on a longer cycle: unsplice it from after its preimage
        let i = p.inverse().image(n);
        let mut images: Vec<usize> = p.one_line()[..n - 1].to_vec();
        images[i - 1] = p.image(n);
        Ok((i, Permutation::from_one_line(images)?))
    }
}
