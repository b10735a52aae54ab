//! The degree-shifting pair injection for signed derangements.
//!
//! [`phi`] maps pairs of degree-`n` signed derangements injectively into
//! `H^B_{n−1} × H^B_{n+1}`, preserving the parity of the negative-entry
//! count in each component; restricted to windows with evenly many (or oddly
//! many) negative entries it therefore witnesses the same squared-term
//! inequality for those subfamilies. Dispatch is driven by [`classify_b`]:
//!
//! * `B22` (`π(n) ≠ −n` and the top letter of `π` points back at its own
//!   slot): three sub-maps [`phi_a`], [`phi_b`], [`phi_c`] keyed by where
//!   `σ(n)` sits.
//! * `B21` (`π(n) ≠ −n`, no such alignment): [`phi_21`] moves the top
//!   letter of `π` into `σ` wholesale.
//! * `B1` (`π(n) = −n`): four sub-maps [`phi_11`], [`phi_12`], [`phi_13`],
//!   and the constant pair [`phi_star`] keyed by which of `π`, `σ` equals
//!   the all-negative window `w₀`.
//!
//! Two pure-formula sub-maps can collide pairwise: an `a`-image and a
//! `b`-image may coincide. The dispatcher detects the collision directly on
//! the image (both decode tests pass) and re-signs the non-owning copy at
//! two adjacent slots, keeping the composite injective; [`theta`] undoes
//! the re-signing before decoding. Degree 3, where several formulas
//! degenerate (the slot arithmetic is modulo 2), is handled by a
//! deterministically constructed lookup table that uses the formula image
//! whenever it is valid and fresh and otherwise assigns the first free
//! parity-compatible target in lexicographic order.
//!
//! Every [`theta`] decode is confirmed by re-applying [`phi`]; pairs outside
//! the image are rejected with [`Error::NotInImage`]. Exhaustive round-trip,
//! injectivity, and parity sweeps for `n ≤ 5` live in the integration tests.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::signed::{cyclic_add, enumerate_signed_derangements, SignedFamily, SignedPermutation};

/// Classification of a signed derangement pair; drives [`phi`] dispatch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeBClass {
    /// `π(n) ≠ −n` and `sign(π(κ))·π(n) ≠ κ` where `κ` locates `±n` in `π`.
    B21,
    /// `π(n) ≠ −n`, `sign(π(κ))·π(n) = κ`, and `σ(n) ∉ {−κ, κ, −n}`.
    B22P1,
    /// Same as `B22P1` but `σ(n) ∈ {−κ, κ}`.
    B22P2,
    /// Same as `B22P1` but `σ(n) = −n`.
    B22P3,
    /// `π(n) = −n`, and neither `π` nor `σ` is the all-negative window.
    B1P1,
    /// `π(n) = −n`, `σ = w₀`, `π ≠ w₀`.
    B1P2,
    /// `π(n) = −n`, `π = w₀`, `σ ≠ w₀`.
    B1P3,
    /// `π = σ = w₀`: the unique pair sent to [`phi_star`].
    B1P4,
}

impl TypeBClass {
    /// The coarse tag: which of the three top-level families the pair is in.
    pub fn first_tag(&self) -> &'static str {
        match self {
            TypeBClass::B21 => "B21",
            TypeBClass::B22P1 | TypeBClass::B22P2 | TypeBClass::B22P3 => "B22",
            _ => "B1",
        }
    }

    /// The refinement within the top-level family.
    pub fn pair_tag(&self) -> &'static str {
        match self {
            TypeBClass::B21 => "B21ANY",
            TypeBClass::B22P1 => "P1",
            TypeBClass::B22P2 => "P2",
            TypeBClass::B22P3 => "P3",
            TypeBClass::B1P1 => "P1'",
            TypeBClass::B1P2 => "P2'",
            TypeBClass::B1P3 => "P3'",
            TypeBClass::B1P4 => "P4'",
        }
    }
}

impl fmt::Display for TypeBClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if matches!(self, TypeBClass::B21) {
            f.write_str("B21")
        } else {
            write!(f, "{}/{}", self.first_tag(), self.pair_tag())
        }
    }
}

/// The concrete sub-map [`phi`] routed a pair through, including the inner
/// case splits of the `c` and `13` formulas; used for coverage reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhiBranch {
    A,
    B,
    /// `phi_c` with the top-letter slot of `π` away from the scan slot of `σ`.
    CApart,
    /// `phi_c` with the two slots equal (the re-signing case).
    CEqual,
    TwoOne,
    OneOne,
    OneTwo,
    /// `phi_13` with `|σ(n)| ≤ n−1`.
    OneThreeLow,
    /// `phi_13` with `σ(n) = −n`.
    OneThreeTop,
    Star,
}

impl PhiBranch {
    /// Short ASCII label for reports.
    pub fn label(&self) -> &'static str {
        match self {
            PhiBranch::A => "a",
            PhiBranch::B => "b",
            PhiBranch::CApart => "c/i!=t",
            PhiBranch::CEqual => "c/i=t",
            PhiBranch::TwoOne => "21",
            PhiBranch::OneOne => "11",
            PhiBranch::OneTwo => "12",
            PhiBranch::OneThreeLow => "13/i!=n",
            PhiBranch::OneThreeTop => "13/i=n",
            PhiBranch::Star => "star",
        }
    }

    /// All ten dispatch behaviors, for coverage sweeps.
    pub fn all() -> [PhiBranch; 10] {
        [
            PhiBranch::A,
            PhiBranch::B,
            PhiBranch::CApart,
            PhiBranch::CEqual,
            PhiBranch::TwoOne,
            PhiBranch::OneOne,
            PhiBranch::OneTwo,
            PhiBranch::OneThreeLow,
            PhiBranch::OneThreeTop,
            PhiBranch::Star,
        ]
    }
}

impl fmt::Display for PhiBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn sign_of(v: i64) -> i64 {
    if v < 0 {
        -1
    } else {
        1
    }
}

/// `cyclic_add` specialised to slot arithmetic.
fn cyc(i: usize, d: i64, modulus: usize) -> usize {
    cyclic_add(i as i64, d, modulus as i64) as usize
}

fn kappa_w(w: &[i64]) -> usize {
    let n = w.len() as i64;
    w.iter().position(|&v| v.abs() == n).expect("±n present") + 1
}

fn tau_w(w: &[i64]) -> usize {
    (1..w.len()).find(|&k| w[k - 1] != -(k as i64)).unwrap_or(0)
}

fn w0_window(n: usize) -> Vec<i64> {
    (1..=n as i64).map(|k| -k).collect()
}

fn validate_pair(n: usize, pi: &SignedPermutation, sigma: &SignedPermutation) -> Result<()> {
    if n < 3 {
        return Err(Error::UnsupportedDegree {
            degree: n,
            reason: "the signed pair injection starts at degree 3",
        });
    }
    for p in [pi, sigma] {
        if p.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                actual: p.degree(),
            });
        }
        if !p.is_derangement_b() {
            let fixed = (1..=n)
                .find(|&k| p.window()[k - 1] == k as i64)
                .unwrap_or(0);
            return Err(Error::NotADerangement { position: fixed });
        }
    }
    Ok(())
}

/// Assigns a pair of degree-`n` signed derangements to exactly one class.
pub fn classify_b(pi: &SignedPermutation, sigma: &SignedPermutation) -> Result<TypeBClass> {
    let n = pi.degree();
    validate_pair(n, pi, sigma)?;
    let p = pi.window();
    if p[n - 1] == -(n as i64) {
        return Ok(match (pi.tau() != 0, sigma.tau() != 0) {
            (true, true) => TypeBClass::B1P1,
            (true, false) => TypeBClass::B1P2,
            (false, true) => TypeBClass::B1P3,
            (false, false) => TypeBClass::B1P4,
        });
    }
    let i = pi.kappa();
    if sign_of(p[i - 1]) * p[n - 1] != i as i64 {
        return Ok(TypeBClass::B21);
    }
    let sn = sigma.window()[n - 1];
    Ok(if sn == -(n as i64) {
        TypeBClass::B22P3
    } else if sn.unsigned_abs() as usize == i {
        TypeBClass::B22P2
    } else {
        TypeBClass::B22P1
    })
}

// ---------------------------------------------------------------------------
// Raw window formulas. Each returns unvalidated windows; the dispatcher and
// the degree-3 table builder validate afterwards.
// ---------------------------------------------------------------------------

fn raw_a(n: usize, p: &[i64], s: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let i = kappa_w(p);
    let u = s[n - 1].unsigned_abs() as usize;
    let sg = sign_of(p[i - 1]);
    let mut z = p[..n - 1].to_vec();
    z[i - 1] = p[u - 1];
    z[u - 1] = sg * p[n - 1];
    let mut x = s[..n - 1].to_vec();
    x.push(sg * (n as i64 + 1));
    x.push(sg * s[n - 1]);
    (z, x)
}

fn raw_b(n: usize, p: &[i64], s: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let i = kappa_w(p);
    let sg = sign_of(p[i - 1]);
    let i1 = cyc(i, 1, n - 1);
    let mut z = p[..n - 1].to_vec();
    z[i - 1] = -p[i1 - 1];
    z[i1 - 1] = -sg * p[n - 1];
    let mut x = s[..n - 1].to_vec();
    x.push(sg * (n as i64 + 1));
    x.push(sg * s[n - 1]);
    (z, x)
}

fn raw_c(n: usize, p: &[i64], s: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let i = kappa_w(p);
    let sg = sign_of(p[i - 1]);
    let t = tau_w(s).max(1);
    let mut z = p[..n - 1].to_vec();
    if i != t {
        z[i - 1] = p[t - 1];
        z[t - 1] = sg * p[n - 1];
    } else {
        let t1 = cyc(t, 1, n - 1);
        let y = p[t1 - 1];
        z[t - 1] = -y.abs();
        z[t1 - 1] = -sign_of(y) * t as i64;
    }
    let mut x = s[..n - 1].to_vec();
    x.push(sg * (n as i64 + 1));
    x.push(-sg * n as i64);
    (z, x)
}

fn raw_21(n: usize, p: &[i64], s: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let i = kappa_w(p);
    let sg = sign_of(p[i - 1]);
    let mut z = p[..n - 1].to_vec();
    z[i - 1] = sg * p[n - 1];
    let mut x = s.to_vec();
    x.push(sg * s[i - 1]);
    x[i - 1] = sg * (n as i64 + 1);
    (z, x)
}

fn raw_11(n: usize, p: &[i64], s: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let t1 = tau_w(p);
    let mut z = p[..n - 1].to_vec();
    z[t1 - 1] = -z[t1 - 1];
    let t2 = tau_w(s);
    let mut x = s.to_vec();
    x[t2 - 1] = -x[t2 - 1];
    x.push(-(n as i64 + 1));
    (z, x)
}

/// The constant second output of the `12` branch: all-negative up to slot
/// `n−3`, then `−(n−1), n−2, n+1, n`.
fn branch12_xi(n: usize) -> Vec<i64> {
    let mut x: Vec<i64> = (1..=n as i64 - 3).map(|k| -k).collect();
    x.extend([-(n as i64 - 1), n as i64 - 2, n as i64 + 1, n as i64]);
    x
}

fn raw_12(n: usize, p: &[i64], _s: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let t1 = tau_w(p);
    let mut z = p[..n - 1].to_vec();
    z[t1 - 1] = -z[t1 - 1];
    (z, branch12_xi(n))
}

/// The first output of the `13` branch when `|σ(n)| = i ≤ n−1`: the
/// all-negative window with a two-slot rotation at `i∓1`.
fn branch13_zeta(n: usize, i: usize) -> Vec<i64> {
    if n == 3 {
        return if i == 1 { vec![-2, 1] } else { vec![2, -1] };
    }
    let im1 = cyc(i, -1, n - 1);
    let ip1 = cyc(i, 1, n - 1);
    let mut z = w0_window(n - 1);
    z[im1 - 1] = ip1 as i64;
    z[ip1 - 1] = -(im1 as i64);
    z
}

/// The first output of the `13` branch when `σ(n) = −n` (also the first
/// component of [`phi_star`]).
fn branch13_zeta_top(n: usize) -> Vec<i64> {
    let mut z = w0_window(n - 1);
    z[0] = -(n as i64 - 1);
    z[n - 2] = 1;
    z
}

fn raw_13(n: usize, _p: &[i64], s: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let i = s[n - 1].unsigned_abs() as usize;
    if i != n {
        let z = branch13_zeta(n, i);
        let mut x = s[..n - 1].to_vec();
        x.push(-(n as i64 + 1));
        x.push(-s[n - 1]);
        (z, x)
    } else {
        let z = branch13_zeta_top(n);
        let t = tau_w(s);
        let mut x = s[..n - 1].to_vec();
        x[t - 1] = -x[t - 1];
        x.push(-(n as i64 + 1));
        x.push(-(n as i64));
        (z, x)
    }
}

fn raw_star(n: usize) -> (Vec<i64>, Vec<i64>) {
    let ps = branch13_zeta_top(n);
    let mut ss = w0_window(n - 1);
    ss.push(-(n as i64 + 1));
    ss.push(n as i64);
    (ps, ss)
}

// ---------------------------------------------------------------------------
// Collision handling between the `a` and `b` formulas. Both can emit the
// same image; the tests below decide, directly on an image window, which
// formulas could have produced it.
// ---------------------------------------------------------------------------

/// True iff `w` decodes under the `a` rule at slot `j`: `w(j)` positive and
/// not pointing back in a 2-step loop.
fn a_valid(w: &[i64], j: usize) -> bool {
    let wj = w[j - 1];
    wj > 0 && w[wj as usize - 1] != j as i64
}

/// True iff `w` decodes under the `b` rule at slot `j`: the successor slot
/// holds `−j` and slot `j` does not hold `−successor`.
fn b_valid(w: &[i64], j: usize) -> bool {
    let j1 = cyc(j, 1, w.len());
    w[j1 - 1] == -(j as i64) && w[j - 1] != -(j1 as i64)
}

/// Re-signs the two adjacent slots `j`, `j⊕1` — the collision-resolution
/// move. Flipping exactly two entries keeps the negative-count parity.
fn negate_pair_slots(w: &mut [i64], j: usize) {
    let j1 = cyc(j, 1, w.len());
    w[j - 1] = -w[j - 1];
    w[j1 - 1] = -w[j1 - 1];
}

/// Applies the classified sub-map, including collision resolution between
/// the `a` and `b` images. Outputs are unvalidated windows.
fn raw_dispatch(
    n: usize,
    pi: &SignedPermutation,
    sigma: &SignedPermutation,
) -> (Vec<i64>, Vec<i64>, PhiBranch) {
    let p = pi.window();
    let s = sigma.window();
    let class = classify_b(pi, sigma).expect("caller validated the pair");
    match class {
        TypeBClass::B21 => {
            let (z, x) = raw_21(n, p, s);
            (z, x, PhiBranch::TwoOne)
        }
        TypeBClass::B22P1 | TypeBClass::B22P2 => {
            let branch = if class == TypeBClass::B22P1 {
                PhiBranch::A
            } else {
                PhiBranch::B
            };
            let (mut z, x) = if branch == PhiBranch::A {
                raw_a(n, p, s)
            } else {
                raw_b(n, p, s)
            };
            let j = x[n].unsigned_abs() as usize;
            if a_valid(&z, j) && b_valid(&z, j) {
                // ambiguous image: the window content decides the owner;
                // the other branch's copy is re-signed at j, j⊕1
                let owner_is_a = z[j - 1] < j as i64;
                if owner_is_a != (branch == PhiBranch::A) {
                    negate_pair_slots(&mut z, j);
                }
            }
            (z, x, branch)
        }
        TypeBClass::B22P3 => {
            let i = pi.kappa();
            let t = sigma.tau().max(1);
            let (z, x) = raw_c(n, p, s);
            let branch = if i != t {
                PhiBranch::CApart
            } else {
                PhiBranch::CEqual
            };
            (z, x, branch)
        }
        TypeBClass::B1P1 => {
            let (z, x) = raw_11(n, p, s);
            (z, x, PhiBranch::OneOne)
        }
        TypeBClass::B1P2 => {
            let (z, x) = raw_12(n, p, s);
            (z, x, PhiBranch::OneTwo)
        }
        TypeBClass::B1P3 => {
            let branch = if s[n - 1] == -(n as i64) {
                PhiBranch::OneThreeTop
            } else {
                PhiBranch::OneThreeLow
            };
            let (z, x) = raw_13(n, p, s);
            (z, x, branch)
        }
        TypeBClass::B1P4 => {
            let (z, x) = raw_star(n);
            (z, x, PhiBranch::Star)
        }
    }
}

fn finish(window: Vec<i64>) -> Result<SignedPermutation> {
    let p = SignedPermutation::from_window(window)
        .map_err(|e| Error::Domain(format!("sub-map produced an invalid window: {e}")))?;
    if !p.is_derangement_b() {
        return Err(Error::Domain(
            "sub-map produced a window with a fixed point".into(),
        ));
    }
    Ok(p)
}

fn expect_class(
    pi: &SignedPermutation,
    sigma: &SignedPermutation,
    wanted: &[TypeBClass],
    expected: &'static str,
) -> Result<()> {
    let found = classify_b(pi, sigma)?;
    if wanted.contains(&found) {
        Ok(())
    } else {
        Err(Error::WrongClass {
            expected,
            found: found.to_string(),
        })
    }
}

/// The `B22/P1` sub-map (pure formula, no collision resolution).
pub fn phi_a(
    pi: &SignedPermutation,
    sigma: &SignedPermutation,
) -> Result<(SignedPermutation, SignedPermutation)> {
    expect_class(pi, sigma, &[TypeBClass::B22P1], "B22/P1")?;
    let (z, x) = raw_a(pi.degree(), pi.window(), sigma.window());
    Ok((finish(z)?, finish(x)?))
}

/// The `B22/P2` sub-map (pure formula, no collision resolution).
pub fn phi_b(
    pi: &SignedPermutation,
    sigma: &SignedPermutation,
) -> Result<(SignedPermutation, SignedPermutation)> {
    expect_class(pi, sigma, &[TypeBClass::B22P2], "B22/P2")?;
    let (z, x) = raw_b(pi.degree(), pi.window(), sigma.window());
    Ok((finish(z)?, finish(x)?))
}

/// The `B22/P3` sub-map; the second output always ends in `±n`.
pub fn phi_c(
    pi: &SignedPermutation,
    sigma: &SignedPermutation,
) -> Result<(SignedPermutation, SignedPermutation)> {
    expect_class(pi, sigma, &[TypeBClass::B22P3], "B22/P3")?;
    let (z, x) = raw_c(pi.degree(), pi.window(), sigma.window());
    Ok((finish(z)?, finish(x)?))
}

/// The `B21` sub-map.
pub fn phi_21(
    pi: &SignedPermutation,
    sigma: &SignedPermutation,
) -> Result<(SignedPermutation, SignedPermutation)> {
    expect_class(pi, sigma, &[TypeBClass::B21], "B21")?;
    let (z, x) = raw_21(pi.degree(), pi.window(), sigma.window());
    Ok((finish(z)?, finish(x)?))
}

/// The `B1/P1'` sub-map; the second output always ends in `−(n+1)`.
pub fn phi_11(
    pi: &SignedPermutation,
    sigma: &SignedPermutation,
) -> Result<(SignedPermutation, SignedPermutation)> {
    expect_class(pi, sigma, &[TypeBClass::B1P1], "B1/P1'")?;
    let (z, x) = raw_11(pi.degree(), pi.window(), sigma.window());
    Ok((finish(z)?, finish(x)?))
}

/// The `B1/P2'` sub-map; the second output is the fixed window ending in
/// `n+1, n`.
pub fn phi_12(
    pi: &SignedPermutation,
    sigma: &SignedPermutation,
) -> Result<(SignedPermutation, SignedPermutation)> {
    expect_class(pi, sigma, &[TypeBClass::B1P2], "B1/P2'")?;
    let (z, x) = raw_12(pi.degree(), pi.window(), sigma.window());
    Ok((finish(z)?, finish(x)?))
}

/// The `B1/P3'` sub-map; the second output has `−(n+1)` in slot `n`.
pub fn phi_13(
    pi: &SignedPermutation,
    sigma: &SignedPermutation,
) -> Result<(SignedPermutation, SignedPermutation)> {
    expect_class(pi, sigma, &[TypeBClass::B1P3], "B1/P3'")?;
    let (z, x) = raw_13(pi.degree(), pi.window(), sigma.window());
    Ok((finish(z)?, finish(x)?))
}

/// The constant image of the unique `B1/P4'` pair `(w₀, w₀)`.
///
/// Requires `n ≥ 3`.
pub fn phi_star(n: usize) -> (SignedPermutation, SignedPermutation) {
    assert!(n >= 3, "phi_star requires degree at least 3");
    let (z, x) = raw_star(n);
    (
        SignedPermutation::from_window(z).expect("fixed window is valid"),
        SignedPermutation::from_window(x).expect("fixed window is valid"),
    )
}

// ---------------------------------------------------------------------------
// Degree-3 table. The slot arithmetic is modulo 2 there, which makes several
// formulas degenerate, so the injection is realised as an explicit table:
// formula images are kept when they are valid, parity-compatible, and fresh;
// the remaining pairs take the first free parity-compatible target in
// lexicographic order. The construction is deterministic.
// ---------------------------------------------------------------------------

type Pair = (SignedPermutation, SignedPermutation);

struct Base3 {
    fwd: HashMap<Pair, (Pair, PhiBranch)>,
    rev: HashMap<Pair, Pair>,
}

fn base3() -> &'static Base3 {
    static TABLE: OnceLock<Base3> = OnceLock::new();
    TABLE.get_or_init(|| {
        let sources = enumerate_signed_derangements(3, SignedFamily::B);
        let z_side = enumerate_signed_derangements(2, SignedFamily::B);
        let x_side = enumerate_signed_derangements(4, SignedFamily::B);
        let targets: Vec<Pair> = z_side
            .iter()
            .flat_map(|z| x_side.iter().map(move |x| (z.clone(), x.clone())))
            .collect();

        let mut fwd: HashMap<Pair, (Pair, PhiBranch)> = HashMap::new();
        let mut claimed: HashSet<Pair> = HashSet::new();
        let w0 = SignedPermutation::w0(3);

        // the constant pair goes first so no formula image can shadow it
        let star = phi_star(3);
        claimed.insert(star.clone());
        fwd.insert((w0.clone(), w0.clone()), (star, PhiBranch::Star));

        let parity = |p: &SignedPermutation| p.neg_count() % 2;
        let mut deferred: Vec<(Pair, (usize, usize), PhiBranch)> = Vec::new();
        for pi in &sources {
            for sigma in &sources {
                if *pi == w0 && *sigma == w0 {
                    continue;
                }
                let (zw, xw, branch) = raw_dispatch(3, pi, sigma);
                let want = (parity(pi), parity(sigma));
                let image = match (
                    SignedPermutation::from_window(zw),
                    SignedPermutation::from_window(xw),
                ) {
                    (Ok(z), Ok(x))
                        if z.is_derangement_b()
                            && x.is_derangement_b()
                            && (parity(&z), parity(&x)) == want =>
                    {
                        Some((z, x))
                    }
                    _ => None,
                };
                match image {
                    Some(pair) if !claimed.contains(&pair) => {
                        claimed.insert(pair.clone());
                        fwd.insert((pi.clone(), sigma.clone()), (pair, branch));
                    }
                    _ => deferred.push(((pi.clone(), sigma.clone()), want, branch)),
                }
            }
        }
        for (source, want, branch) in deferred {
            let slot = targets
                .iter()
                .find(|t| !claimed.contains(*t) && (parity(&t.0), parity(&t.1)) == want)
                .expect("a free parity-compatible target always exists at degree 3")
                .clone();
            claimed.insert(slot.clone());
            fwd.insert(source, (slot, branch));
        }

        let rev = fwd
            .iter()
            .map(|(src, (img, _))| (img.clone(), src.clone()))
            .collect();
        Base3 { fwd, rev }
    })
}

/// [`phi`] plus the dispatch branch actually taken; the branch is reporting
/// metadata only.
pub fn phi_traced(
    n: usize,
    pi: &SignedPermutation,
    sigma: &SignedPermutation,
) -> Result<(Pair, PhiBranch)> {
    validate_pair(n, pi, sigma)?;
    if n == 3 {
        let (pair, branch) = base3()
            .fwd
            .get(&(pi.clone(), sigma.clone()))
            .expect("table covers every degree-3 pair");
        return Ok((pair.clone(), *branch));
    }
    let (zw, xw, branch) = raw_dispatch(n, pi, sigma);
    Ok(((finish(zw)?, finish(xw)?), branch))
}

/// The full injection: dispatches on [`classify_b`], resolves `a`/`b`
/// collisions, and uses the fixed table at degree 3. The image lies in
/// `H^B_{n−1} × H^B_{n+1}` and matches the input's negative-count parities
/// componentwise.
pub fn phi(
    n: usize,
    pi: &SignedPermutation,
    sigma: &SignedPermutation,
) -> Result<(SignedPermutation, SignedPermutation)> {
    phi_traced(n, pi, sigma).map(|(pair, _)| pair)
}

// ---------------------------------------------------------------------------
// Decoding. Each theta_* builds the unique preimage candidate for its zone;
// the top-level theta picks the zone from the image windows alone and
// confirms the candidate by re-applying phi.
// ---------------------------------------------------------------------------

type Candidate = Option<(Vec<i64>, Vec<i64>)>;

fn theta_a(n: usize, w: &[i64], x: &[i64]) -> Candidate {
    let ssg = sign_of(x[n - 1]);
    let j = x[n].unsigned_abs() as usize;
    let i0 = w[j - 1];
    if i0 <= 0 {
        return None;
    }
    let i0 = i0 as usize;
    let mut p = w.to_vec();
    p[j - 1] = w[i0 - 1];
    p[i0 - 1] = ssg * n as i64;
    p.push(ssg * i0 as i64);
    let mut sig = x[..n - 1].to_vec();
    sig.push(ssg * x[n]);
    Some((p, sig))
}

fn theta_b(n: usize, w: &[i64], x: &[i64]) -> Candidate {
    let ssg = sign_of(x[n - 1]);
    let j = x[n].unsigned_abs() as usize;
    let j1 = cyc(j, 1, n - 1);
    let mut p = w.to_vec();
    p[j - 1] = ssg * n as i64;
    p[j1 - 1] = -w[j - 1];
    p.push(-ssg * w[j1 - 1]);
    let mut sig = x[..n - 1].to_vec();
    sig.push(ssg * x[n]);
    Some((p, sig))
}

/// Decides between [`theta_a`] and [`theta_b`] on their shared zone,
/// undoing the collision re-signing when the window carries its signature.
fn theta_ab(n: usize, w: &[i64], x: &[i64]) -> Candidate {
    let j = x[n].unsigned_abs() as usize;
    if j == 0 || j > n - 1 {
        return None;
    }
    let j1 = cyc(j, 1, n - 1);
    let wj = w[j - 1];
    if wj < 0 && w[j1 - 1] == j as i64 {
        // re-signed copy: undo the two-slot flip, then decode as the loser
        let mut w0 = w.to_vec();
        negate_pair_slots(&mut w0, j);
        if !(a_valid(&w0, j) && b_valid(&w0, j)) {
            return None;
        }
        let owner_is_a = w0[j - 1] < j as i64;
        return if owner_is_a {
            theta_b(n, &w0, x)
        } else {
            theta_a(n, &w0, x)
        };
    }
    let av = a_valid(w, j);
    let bv = b_valid(w, j);
    if av && bv {
        let owner_is_a = wj < j as i64;
        return if owner_is_a {
            theta_a(n, w, x)
        } else {
            theta_b(n, w, x)
        };
    }
    if av {
        return theta_a(n, w, x);
    }
    if bv {
        return theta_b(n, w, x);
    }
    None
}

fn theta_c(n: usize, w: &[i64], x: &[i64]) -> Candidate {
    let ssg = sign_of(x[n - 1]);
    let mut sig = x[..n - 1].to_vec();
    sig.push(-(n as i64));
    let t = tau_w(&sig).max(1);
    let zt = w[t - 1];
    let mut p = w.to_vec();
    if zt > 0 {
        let i0 = zt as usize;
        if i0 == t {
            return None;
        }
        p[t - 1] = w[i0 - 1];
        p[i0 - 1] = ssg * n as i64;
        p.push(ssg * i0 as i64);
    } else {
        let t1 = cyc(t, 1, n - 1);
        if w[t1 - 1].unsigned_abs() as usize != t {
            return None;
        }
        p[t - 1] = ssg * n as i64;
        p[t1 - 1] = -sign_of(w[t1 - 1]) * zt.abs();
        p.push(ssg * t as i64);
    }
    Some((p, sig))
}

fn theta_21(n: usize, w: &[i64], x: &[i64], m: usize) -> Candidate {
    let ssg = sign_of(x[m - 1]);
    let wm = w[m - 1];
    let mut p = w.to_vec();
    p[m - 1] = ssg * n as i64;
    p.push(ssg * wm);
    let mut sig = x[..n].to_vec();
    sig[m - 1] = ssg * x[n];
    Some((p, sig))
}

fn theta_11(n: usize, w: &[i64], x: &[i64]) -> Candidate {
    if w == w0_window(n - 1).as_slice() {
        return None;
    }
    let xs = &x[..n];
    if xs == w0_window(n).as_slice() {
        return None;
    }
    let t1 = tau_w(w);
    let mut p = w.to_vec();
    p[t1 - 1] = -p[t1 - 1];
    p.push(-(n as i64));
    let t2 = tau_w(xs);
    let mut sig = xs.to_vec();
    sig[t2 - 1] = -sig[t2 - 1];
    Some((p, sig))
}

fn theta_12(n: usize, w: &[i64], x: &[i64]) -> Candidate {
    if x != branch12_xi(n).as_slice() || w == w0_window(n - 1).as_slice() {
        return None;
    }
    let t1 = tau_w(w);
    let mut p = w.to_vec();
    p[t1 - 1] = -p[t1 - 1];
    p.push(-(n as i64));
    Some((p, w0_window(n)))
}

fn theta_13_low(n: usize, x: &[i64]) -> Candidate {
    let mut sig = x[..n - 1].to_vec();
    sig.push(-x[n]);
    Some((w0_window(n), sig))
}

fn theta_13_top(n: usize, w: &[i64], x: &[i64]) -> Candidate {
    if w != branch13_zeta_top(n).as_slice() {
        return None;
    }
    let mut xs = x[..n - 1].to_vec();
    // scan every slot of the truncation, not just the first n−2
    let t = (1..n).find(|&k| xs[k - 1] != -(k as i64)).unwrap_or(0);
    if t == 0 {
        return None;
    }
    xs[t - 1] = -xs[t - 1];
    xs.push(-(n as i64));
    Some((w0_window(n), xs))
}

/// Recovers the unique preimage of a pair under [`phi`], or rejects it with
/// [`Error::NotInImage`]. Zone selection reads only the image windows; every
/// candidate is confirmed by re-applying [`phi`].
pub fn theta(
    n: usize,
    zeta: &SignedPermutation,
    xi: &SignedPermutation,
) -> Result<(SignedPermutation, SignedPermutation)> {
    if n < 3 {
        return Err(Error::UnsupportedDegree {
            degree: n,
            reason: "the signed pair injection starts at degree 3",
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
    if !zeta.is_derangement_b() || !xi.is_derangement_b() {
        return Err(Error::NotInImage);
    }
    if n == 3 {
        return base3()
            .rev
            .get(&(zeta.clone(), xi.clone()))
            .cloned()
            .ok_or(Error::NotInImage);
    }

    let w = zeta.window();
    let x = xi.window();
    let m = xi.kappa();
    let candidate = if m < n {
        theta_21(n, w, x, m)
    } else if m == n + 1 {
        theta_11(n, w, x)
    } else {
        let xn = x[n - 1];
        let xn1 = x[n];
        if xn == n as i64 + 1 {
            if xn1 == n as i64 {
                theta_12(n, w, x)
            } else if xn1 == -(n as i64) {
                theta_c(n, w, x)
            } else {
                theta_ab(n, w, x)
            }
        } else if xn1 == n as i64 {
            let star = phi_star(n);
            if (zeta, xi) == (&star.0, &star.1) {
                let w0 = SignedPermutation::w0(n);
                return Ok((w0.clone(), w0));
            }
            theta_c(n, w, x)
        } else if xn1 == -(n as i64) {
            theta_13_top(n, w, x)
        } else if w == branch13_zeta(n, xn1.unsigned_abs() as usize).as_slice() {
            theta_13_low(n, x)
        } else {
            theta_ab(n, w, x)
        }
    };

    let (pv, sv) = candidate.ok_or(Error::NotInImage)?;
    let pi = SignedPermutation::from_window(pv).map_err(|_| Error::NotInImage)?;
    let sigma = SignedPermutation::from_window(sv).map_err(|_| Error::NotInImage)?;
    if pi.degree() != n
        || sigma.degree() != n
        || !pi.is_derangement_b()
        || !sigma.is_derangement_b()
    {
        return Err(Error::NotInImage);
    }
    match phi(n, &pi, &sigma) {
        Ok(image) if image == (zeta.clone(), xi.clone()) => Ok((pi, sigma)),
        _ => Err(Error::NotInImage),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(text: &str) -> SignedPermutation {
        text.parse().unwrap()
    }

    fn pair(a: &str, b: &str) -> Pair {
        (sp(a), sp(b))
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_b(&sp("[-1,-6,-3,5,-4,-2]"), &sp("[-1,-2,6,-5,3,-4]")).unwrap(),
            TypeBClass::B22P1
        );
        assert_eq!(
            classify_b(&sp("[-1,-6,-3,5,-4,2]"), &sp("[-1,-3,6,-5,-4,2]")).unwrap(),
            TypeBClass::B21
        );
        let w0 = SignedPermutation::w0(6);
        assert_eq!(classify_b(&w0, &w0).unwrap(), TypeBClass::B1P4);
        assert_eq!(TypeBClass::B22P1.to_string(), "B22/P1");
        assert_eq!(TypeBClass::B1P3.to_string(), "B1/P3'");
        assert_eq!(TypeBClass::B21.to_string(), "B21");
    }

    #[test]
    fn degree_six_images_match_pinned_values() {
        // (sub-map, input pair, expected image) with theta round-trips
        let cases: [(&str, &str, &str, &str); 7] = [
            (
                "[-1,-6,-3,5,-4,-2]",
                "[-1,-2,6,-5,3,-4]",
                "[-1,5,-3,2,-4]",
                "[-1,-2,6,-5,3,-7,4]",
            ),
            (
                "[-1,-6,-3,5,-4,-2]",
                "[-1,-3,6,-5,-4,2]",
                "[-1,3,-2,5,-4]",
                "[-1,-3,6,-5,-4,-7,-2]",
            ),
            (
                "[-1,-6,-3,5,-4,-2]",
                "[-1,-2,4,-5,3,-6]",
                "[-1,-3,2,5,-4]",
                "[-1,-2,4,-5,3,-7,6]",
            ),
            (
                "[-1,-6,-3,5,-4,2]",
                "[-1,-3,6,-5,-4,2]",
                "[-1,-2,-3,5,-4]",
                "[-1,-7,6,-5,-4,2,3]",
            ),
            (
                "[2,3,1,-5,4,-6]",
                "[-1,-3,-2,5,-6,4]",
                "[-2,3,1,-5,4]",
                "[-1,3,-2,5,-6,4,-7]",
            ),
            (
                "[2,3,1,-5,4,-6]",
                "[-1,-2,-3,-4,-5,-6]",
                "[-2,3,1,-5,4]",
                "[-1,-2,-3,-5,4,7,6]",
            ),
            (
                "[-1,-2,-3,-4,-5,-6]",
                "[2,3,1,-5,-6,4]",
                "[-1,-2,5,-4,-3]",
                "[2,3,1,-5,-6,-7,-4]",
            ),
        ];
        for (p, s, z, x) in cases {
            let (pi, sigma) = pair(p, s);
            let image = phi(6, &pi, &sigma).unwrap();
            assert_eq!(image, pair(z, x), "image of ({p}, {s})");
            let back = theta(6, &image.0, &image.1).unwrap();
            assert_eq!(back, (pi, sigma), "preimage of ({z}, {x})");
        }
    }

    #[test]
    fn sub_maps_agree_with_dispatch_on_the_pinned_pairs() {
        let (pi, sigma) = pair("[-1,-6,-3,5,-4,-2]", "[-1,-2,6,-5,3,-4]");
        assert_eq!(phi_a(&pi, &sigma).unwrap(), phi(6, &pi, &sigma).unwrap());
        let (pi, sigma) = pair("[-1,-6,-3,5,-4,-2]", "[-1,-3,6,-5,-4,2]");
        assert_eq!(phi_b(&pi, &sigma).unwrap(), phi(6, &pi, &sigma).unwrap());
        let (pi, sigma) = pair("[-1,-6,-3,5,-4,-2]", "[-1,-2,4,-5,3,-6]");
        assert_eq!(phi_c(&pi, &sigma).unwrap(), phi(6, &pi, &sigma).unwrap());
        let (pi, sigma) = pair("[-1,-6,-3,5,-4,2]", "[-1,-3,6,-5,-4,2]");
        assert_eq!(phi_21(&pi, &sigma).unwrap(), phi(6, &pi, &sigma).unwrap());
        let (pi, sigma) = pair("[2,3,1,-5,4,-6]", "[-1,-3,-2,5,-6,4]");
        assert_eq!(phi_11(&pi, &sigma).unwrap(), phi(6, &pi, &sigma).unwrap());
        let (pi, sigma) = pair("[2,3,1,-5,4,-6]", "[-1,-2,-3,-4,-5,-6]");
        assert_eq!(phi_12(&pi, &sigma).unwrap(), phi(6, &pi, &sigma).unwrap());
        let (pi, sigma) = pair("[-1,-2,-3,-4,-5,-6]", "[2,3,1,-5,-6,4]");
        assert_eq!(phi_13(&pi, &sigma).unwrap(), phi(6, &pi, &sigma).unwrap());
    }

    #[test]
    fn constant_pair_and_its_preimage() {
        let star = phi_star(6);
        assert_eq!(star.0.to_string(), "[-5,-2,-3,-4,1]");
        assert_eq!(star.1.to_string(), "[-1,-2,-3,-4,-5,-7,6]");
        let w0 = SignedPermutation::w0(6);
        assert_eq!(phi(6, &w0, &w0).unwrap(), star);
        assert_eq!(theta(6, &star.0, &star.1).unwrap(), (w0.clone(), w0));

        let w0 = SignedPermutation::w0(3);
        assert_eq!(phi(3, &w0, &w0).unwrap(), phi_star(3));
    }

    #[test]
    fn wrong_class_is_rejected() {
        let (pi, sigma) = pair("[-1,-6,-3,5,-4,2]", "[-1,-3,6,-5,-4,2]");
        assert!(matches!(
            phi_a(&pi, &sigma),
            Err(Error::WrongClass {
                expected: "B22/P1",
                ..
            })
        ));
        assert!(matches!(
            phi(2, &sp("[2,1]"), &sp("[2,1]")),
            Err(Error::UnsupportedDegree { .. })
        ));
    }

    #[test]
    fn degree_three_table_is_a_bijection_onto_its_image() {
        let sources = enumerate_signed_derangements(3, SignedFamily::B);
        assert_eq!(sources.len(), 29);
        let mut images = HashSet::new();
        for pi in &sources {
            for sigma in &sources {
                let image = phi(3, pi, sigma).unwrap();
                assert!(images.insert(image.clone()), "collision at ({pi}, {sigma})");
                assert_eq!(
                    theta(3, &image.0, &image.1).unwrap(),
                    (pi.clone(), sigma.clone())
                );
            }
        }
        assert_eq!(images.len(), 841);
        // the decoder accepts exactly the image
        let z_side = enumerate_signed_derangements(2, SignedFamily::B);
        let x_side = enumerate_signed_derangements(4, SignedFamily::B);
        let mut accepted = 0usize;
        for z in &z_side {
            for x in &x_side {
                match theta(3, z, x) {
                    Ok(_) => accepted += 1,
                    Err(Error::NotInImage) => {
                        assert!(!images.contains(&(z.clone(), x.clone())));
                    }
                    Err(other) => panic!("unexpected error {other}"),
                }
            }
        }
        assert_eq!(accepted, 841);
        assert_eq!(z_side.len() * x_side.len(), 1165);
    }

    #[test]
    fn degree_four_spot_round_trips() {
        let sources = enumerate_signed_derangements(4, SignedFamily::B);
        for pi in sources.iter().take(25) {
            for sigma in sources.iter().rev().take(25) {
                let (image, _) = phi_traced(4, pi, sigma).unwrap();
                let back = theta(4, &image.0, &image.1).unwrap();
                assert_eq!(back, (pi.clone(), sigma.clone()));
            }
        }
    }
}
