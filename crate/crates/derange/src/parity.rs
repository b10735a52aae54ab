//! Sign-flip bijections between parity classes of signed derangements.
//!
//! Negating a single window entry flips the parity of `inv_b`, and the
//! parity of the negative-entry count. Flipping at the scan slot `τ` keeps
//! the window a derangement and is self-inverse, which makes one map serve
//! two purposes: [`f_parity`] pairs even-`inv_b` derangements with
//! odd-`inv_b` ones, and [`g_parity`] pairs even-negative-count
//! derangements with odd ones. The all-negative window `w₀` has `τ = 0`
//! (no flip slot) and is excluded from both domains; counting its class
//! membership accounts for the `(−1)^n` gap between the paired families.

use crate::error::{Error, Result};
use crate::signed::SignedPermutation;

/// A sign flip at the scan slot, with the slot recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipResult {
    pub image: SignedPermutation,
    /// The flipped window slot, `τ(input) ∈ [n−1]`.
    pub flipped_index: usize,
}

fn validate(p: &SignedPermutation) -> Result<usize> {
    if !p.is_derangement_b() {
        let fixed = (1..=p.degree())
            .find(|&k| p.window()[k - 1] == k as i64)
            .unwrap_or(0);
        return Err(Error::NotADerangement { position: fixed });
    }
    let t = p.tau();
    if t == 0 {
        return Err(Error::Domain(
            "the all-negative window has no flip slot and is excluded".into(),
        ));
    }
    Ok(t)
}

/// Negates the window entry at slot `τ(p)`. Defined on signed derangements
/// other than `w₀`; the image is again a derangement and flipping twice
/// returns the input.
pub fn pi_minus(p: &SignedPermutation) -> Result<FlipResult> {
    let t = validate(p)?;
    let mut w = p.window().to_vec();
    w[t - 1] = -w[t - 1];
    let image = SignedPermutation::from_window(w).expect("a sign flip keeps the window valid");
    debug_assert!(image.is_derangement_b());
    Ok(FlipResult {
        image,
        flipped_index: t,
    })
}

/// The flip restricted to derangements with even `inv_b` (excluding `w₀`);
/// lands in the odd-`inv_b` derangements (excluding `w₀`), bijectively.
pub fn f_parity(p: &SignedPermutation) -> Result<SignedPermutation> {
    validate(p)?;
    if p.inv_b() % 2 != 0 {
        return Err(Error::Domain(
            "expected a derangement with even inv_b".into(),
        ));
    }
    Ok(pi_minus(p)?.image)
}

/// The flip restricted to derangements with an even negative-entry count
/// (excluding `w₀`); lands in the odd-count derangements (excluding `w₀`),
/// bijectively.
pub fn g_parity(p: &SignedPermutation) -> Result<SignedPermutation> {
    validate(p)?;
    if !p.is_in_d() {
        return Err(Error::Domain(
            "expected a derangement with evenly many negative entries".into(),
        ));
    }
    Ok(pi_minus(p)?.image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed::{enumerate_signed_derangements, SignedFamily};

    fn sp(text: &str) -> SignedPermutation {
        text.parse().unwrap()
    }

    #[test]
    fn flip_example() {
        let r = pi_minus(&sp("[-1,3,-2]")).unwrap();
        assert_eq!(r.image.to_string(), "[-1,-3,-2]");
        assert_eq!(r.flipped_index, 2);
    }

    #[test]
    fn all_negative_window_is_excluded() {
        assert!(matches!(
            pi_minus(&SignedPermutation::w0(3)),
            Err(Error::Domain(_))
        ));
        // w₀ at n=2 sits in both even classes, and is still excluded
        assert!(matches!(g_parity(&sp("[-1,-2]")), Err(Error::Domain(_))));
        assert!(matches!(f_parity(&sp("[-1,-2]")), Err(Error::Domain(_))));
    }

    #[test]
    fn flip_is_an_involution() {
        for n in 1..=4 {
            for p in enumerate_signed_derangements(n, SignedFamily::B) {
                if p == SignedPermutation::w0(n) {
                    continue;
                }
                let once = pi_minus(&p).unwrap();
                let twice = pi_minus(&once.image).unwrap();
                assert_eq!(twice.image, p);
                assert_eq!(twice.flipped_index, once.flipped_index);
            }
        }
    }

    #[test]
    fn degree_two_pairing() {
        // even-inv_b derangements minus w₀: [−2,1] and [2,−1]
        assert_eq!(f_parity(&sp("[-2,1]")).unwrap().to_string(), "[2,1]");
        assert_eq!(f_parity(&sp("[2,-1]")).unwrap().to_string(), "[-2,-1]");
        // the odd side is rejected
        assert!(matches!(f_parity(&sp("[2,1]")), Err(Error::Domain(_))));
        // odd negative count is rejected by the other restriction
        assert!(matches!(g_parity(&sp("[-2,1]")), Err(Error::Domain(_))));
    }
}
