//! The degree-shifting pair injection for unsigned derangements.
//!
//! [`psi`] maps a pair of degree-`n` derangements injectively into
//! `H_{n−1} × H_{n+1}`, witnessing `h_n² ≤ h_{n−1}·h_{n+1}` wherever the
//! mapping is verified exhaustively. Pairs are split into four classes by
//! how `n` sits inside the first component ([`classify_a`]); each class has
//! its own sub-map built from the [`crate::factor`] bijection:
//!
//! * `T1` — `n` is on a cycle of length ≥ 3 of `π`: unsplice `n` from `π`
//!   and splice it into `σ`.
//! * `T2` — `π` has a 2-cycle `(n, i)` with `i ≤ n−2`: strip it, re-insert
//!   at the same slot one degree down, and splice `n+1` into `σ` after `n`.
//! * `T3` — `π` has the 2-cycle `(n, n−1)` and `n` is on a long cycle of
//!   `σ`: drop `π`'s 2-cycle, re-insert at slot 1, and move `σ`'s factor up
//!   a degree.
//! * `T4` — both `π` and `σ` end in a 2-cycle through `n`: recurse two
//!   degrees down on the stripped pair, then restore a 2-cycle on the first
//!   output and lift the second.
//!
//! Degrees 3 and 4 use fixed base tables: degree 3 is a four-row table, and
//! degree 4 pairs the 81 degree-4 pairs with the first 81 of the 88 pairs in
//! `H_3 × H_5`, both sides in lexicographic one-line order. [`lambda_inv`]
//! reverses [`psi`] and rejects pairs outside the (strict) image with
//! [`Error::NotInImage`].

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::factor::{f_map, g_map};
use crate::perm::{enumerate_derangements, Permutation};

/// The four-way classification of a derangement pair; see the module docs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeAClass {
    /// `π(n) ≠ π⁻¹(n)`: `n` lies on a cycle of length ≥ 3 of `π`.
    T1,
    /// `π(n) = π⁻¹(n) ≤ n−2`: `π` has a 2-cycle `(n, i)` with `i ≤ n−2`.
    T2,
    /// `π(n) = π⁻¹(n) = n−1` and `σ(n) ≠ σ⁻¹(n)`.
    T3,
    /// `π(n) = π⁻¹(n) = n−1` and `σ(n) = σ⁻¹(n)`.
    T4,
}

impl fmt::Display for TypeAClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            TypeAClass::T1 => "T1",
            TypeAClass::T2 => "T2",
            TypeAClass::T3 => "T3",
            TypeAClass::T4 => "T4",
        };
        f.write_str(tag)
    }
}

fn validate_pair(n: usize, pi: &Permutation, sigma: &Permutation) -> Result<()> {
    if n < 3 {
        return Err(Error::UnsupportedDegree {
            degree: n,
            reason: "the pair injection starts at degree 3",
        });
    }
    for p in [pi, sigma] {
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
    }
    Ok(())
}

/// Assigns a derangement pair to exactly one of the four classes.
pub fn classify_a(pi: &Permutation, sigma: &Permutation) -> Result<TypeAClass> {
    let n = pi.degree();
    validate_pair(n, pi, sigma)?;
    let fwd = pi.image(n);
    let bwd = pi.inverse().image(n);
    if fwd != bwd {
        return Ok(TypeAClass::T1);
    }
    if fwd <= n - 2 {
        return Ok(TypeAClass::T2);
    }
    // π has the 2-cycle (n, n−1); split on how n sits inside σ
    if sigma.image(n) != sigma.inverse().image(n) {
        Ok(TypeAClass::T3)
    } else {
        Ok(TypeAClass::T4)
    }
}

/// One row of the degree-3 base table, in one-line form: `(π, σ, ζ, ξ)`.
type Base3Row = ([usize; 3], [usize; 3], [usize; 2], [usize; 4]);

const BASE3_ROWS: [Base3Row; 4] = [
    ([2, 3, 1], [2, 3, 1], [2, 1], [2, 3, 4, 1]),
    ([2, 3, 1], [3, 1, 2], [2, 1], [2, 4, 1, 3]),
    ([3, 1, 2], [3, 1, 2], [2, 1], [3, 4, 2, 1]),
    ([3, 1, 2], [2, 3, 1], [2, 1], [3, 1, 4, 2]),
];

type PairMap = HashMap<(Permutation, Permutation), (Permutation, Permutation)>;

fn base_tables(n: usize) -> &'static (PairMap, PairMap) {
    static BASE3: OnceLock<(PairMap, PairMap)> = OnceLock::new();
    static BASE4: OnceLock<(PairMap, PairMap)> = OnceLock::new();
    match n {
        3 => BASE3.get_or_init(|| {
            let mut fwd = PairMap::new();
            let mut rev = PairMap::new();
            for (p, s, z, x) in BASE3_ROWS {
                let key = (
                    Permutation::from_one_line(p.to_vec()).unwrap(),
                    Permutation::from_one_line(s.to_vec()).unwrap(),
                );
                let val = (
                    Permutation::from_one_line(z.to_vec()).unwrap(),
                    Permutation::from_one_line(x.to_vec()).unwrap(),
                );
                rev.insert(val.clone(), key.clone());
                fwd.insert(key, val);
            }
            (fwd, rev)
        }),
        4 => BASE4.get_or_init(|| {
            // pair the k-th degree-4 pair with the k-th pair of H_3 × H_5,
            // both in lexicographic one-line order (first-major)
            let h4: Vec<Permutation> = enumerate_derangements(4).collect();
            let h3: Vec<Permutation> = enumerate_derangements(3).collect();
            let h5: Vec<Permutation> = enumerate_derangements(5).collect();
            let mut targets = h3
                .iter()
                .flat_map(|z| h5.iter().map(move |x| (z.clone(), x.clone())));
            let mut fwd = PairMap::new();
            let mut rev = PairMap::new();
            for p in &h4 {
                for s in &h4 {
                    let val = targets.next().expect("81 source pairs fit into 88 targets");
                    rev.insert(val.clone(), (p.clone(), s.clone()));
                    fwd.insert((p.clone(), s.clone()), val);
                }
            }
            (fwd, rev)
        }),
        _ => unreachable!("base tables exist only for degrees 3 and 4"),
    }
}

fn truncate(p: &Permutation, m: usize) -> Result<Permutation> {
    Permutation::from_one_line(p.one_line()[..m].to_vec())
}

fn append_two_cycle(p: &Permutation, high: usize) -> Result<Permutation> {
    let mut images = p.one_line().to_vec();
    images.push(high);
    images.push(high - 1);
    Permutation::from_one_line(images)
}

/// Applies the injection to a pair of degree-`n` derangements, producing a
/// pair in `H_{n−1} × H_{n+1}`.
pub fn psi(n: usize, pi: &Permutation, sigma: &Permutation) -> Result<(Permutation, Permutation)> {
    validate_pair(n, pi, sigma)?;
    if n <= 4 {
        let (fwd, _) = base_tables(n);
        return Ok(fwd[&(pi.clone(), sigma.clone())].clone());
    }
    match classify_a(pi, sigma)? {
        TypeAClass::T1 => {
            let (slot, inner) = g_map(n, pi)?;
            let xi = f_map(n + 1, slot, sigma)?;
            Ok((inner, xi))
        }
        TypeAClass::T2 => {
            let (slot, inner) = g_map(n, pi)?;
            let zeta = f_map(n - 1, slot, &inner)?;
            let xi = f_map(n + 1, n, sigma)?;
            Ok((zeta, xi))
        }
        TypeAClass::T3 => {
            let pdown = truncate(pi, n - 2)?;
            let (slot, st) = g_map(n, sigma)?;
            let zeta = f_map(n - 1, 1, &pdown)?;
            let xi = f_map(n + 1, slot, &st)?;
            Ok((zeta, xi))
        }
        TypeAClass::T4 => {
            let pdown = truncate(pi, n - 2)?;
            let (slot, sdown) = g_map(n, sigma)?;
            let (z_rec, x_rec) = psi(n - 2, &pdown, &sdown)?;
            let zeta = append_two_cycle(&z_rec, n - 1)?;
            let xi = f_map(n + 1, slot, &x_rec)?;
            Ok((zeta, xi))
        }
    }
}

/// Recovers the unique preimage of a pair under [`psi`], or rejects it with
/// [`Error::NotInImage`]. Every accepted decode is confirmed by re-applying
/// [`psi`] before it is returned.
pub fn lambda_inv(
    n: usize,
    zeta: &Permutation,
    xi: &Permutation,
) -> Result<(Permutation, Permutation)> {
    if n < 3 {
        return Err(Error::UnsupportedDegree {
            degree: n,
            reason: "the pair injection starts at degree 3",
        });
    }
    if zeta.degree() != n - 1 {
        return Err(Error::DegreeMismatch {
            expected: n - 1,
            actual: zeta.degree(),
        });
    }
    if xi.degree() != n + 1 {
        return Err(Error::DegreeMismatch {
            expected: n + 1,
            actual: xi.degree(),
        });
    }
    if !zeta.is_derangement() || !xi.is_derangement() {
        return Err(Error::NotInImage);
    }
    if n <= 4 {
        let (_, rev) = base_tables(n);
        return rev
            .get(&(zeta.clone(), xi.clone()))
            .cloned()
            .ok_or(Error::NotInImage);
    }
    let candidate = decode(n, zeta, xi)?;
    if psi(n, &candidate.0, &candidate.1)? == (zeta.clone(), xi.clone()) {
        Ok(candidate)
    } else {
        Err(Error::NotInImage)
    }
}

/// Builds the unique decode candidate for degree ≥ 5; shape violations are
/// reported as [`Error::NotInImage`].
fn decode(n: usize, zeta: &Permutation, xi: &Permutation) -> Result<(Permutation, Permutation)> {
    let reject = |_| Error::NotInImage;
    let top = xi.image(n + 1);
    if xi.image(top) != n + 1 {
        // n+1 lies on a long cycle of ξ: the image came from T1 or T2
        let (slot, sigma) = g_map(n + 1, xi).map_err(reject)?;
        if slot < n {
            let pi = f_map(n, slot, zeta).map_err(reject)?;
            return Ok((pi, sigma));
        }
        // slot = n is reserved for T2; ζ must itself factor through insertion
        let (iz, inner) = g_map(n - 1, zeta).map_err(reject)?;
        if inner.degree() != n - 2 {
            return Err(Error::NotInImage);
        }
        let pi = f_map(n, iz, &inner).map_err(reject)?;
        return Ok((pi, sigma));
    }
    // n+1 lies on a 2-cycle of ξ: the image came from T3 or T4
    let (slot, st) = g_map(n + 1, xi).map_err(reject)?;
    if slot > n - 1 {
        return Err(Error::NotInImage);
    }
    if zeta.image(n - 1) == n - 2 && zeta.image(n - 2) == n - 1 {
        // ζ ends with the 2-cycle (n−1, n−2): unwind the T4 recursion
        let head = truncate(zeta, n - 3).map_err(reject)?;
        if !head.is_derangement() {
            return Err(Error::NotInImage);
        }
        let (pdown, sdown) = lambda_inv(n - 2, &head, &st)?;
        let pi = append_two_cycle(&pdown, n)?;
        let sigma = f_map(n, slot, &sdown).map_err(reject)?;
        return Ok((pi, sigma));
    }
    // T3: ζ must be the slot-1 insertion of a degree-(n−2) derangement
    let (iz, pdown) = g_map(n - 1, zeta).map_err(reject)?;
    if iz != 1 || pdown.degree() != n - 2 {
        return Err(Error::NotInImage);
    }
    let pi = append_two_cycle(&pdown, n)?;
    let sigma = f_map(n, slot, &st).map_err(reject)?;
    Ok((pi, sigma))
}
