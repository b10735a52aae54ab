//! Named verification suites: exhaustive small-degree sweeps of every map
//! and identity the library implements, with per-check pass/fail results.
//!
//! The suites are the library's evidence base. They check finite,
//! exhaustively enumerable statements only — injectivity over every pair at
//! the covered degrees, exact integer identities over fixed windows — and
//! make no claim beyond the degrees they sweep.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::Error;
use crate::factor::{f_map, g_map};
use crate::parity::{f_parity, g_parity, pi_minus};
use crate::perm::{cycle_compose, enumerate_derangements, CycleDecomposition, Permutation};
use crate::seq::{
    enumerated_table, even_expr, h_minus, h_plus, h_rec, h_reduced, is_log_convex, odd_expr,
    SeqFamily, SequenceTable, Verdict,
};
use crate::signed::{enumerate_signed_derangements, SignedFamily, SignedPermutation};
use crate::type_a::{classify_a, lambda_inv, psi, TypeAClass};
use crate::type_bd::{phi, phi_star, phi_traced, theta, PhiBranch};

use num_bigint::BigInt;

/// One verified statement.
#[derive(Debug, Clone)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// A named batch of checks.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Line-oriented report: one `[PASS]`/`[FAIL]` line per check plus a
    /// suite summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{tag}] {}: {}\n", c.label, c.detail));
        }
        let verdict = if self.passed() { "ok" } else { "FAILED" };
        out.push_str(&format!(
            "suite {}: {verdict} ({} checks)\n",
            self.name,
            self.checks.len()
        ));
        out
    }
}

/// The suites the `verify` command can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    /// Pinned worked examples for every map.
    Examples,
    /// Unsigned factor bijection and pair injection.
    A,
    /// Signed pair injection.
    Bd,
    /// Sign-flip parity bijections.
    Parity,
    /// Sequence recurrences, identities, and convexity verdicts.
    Sequences,
}

impl SuiteKind {
    /// Default sweep ceiling for each suite (`--max-n` overrides).
    pub fn default_max_n(&self) -> usize {
        match self {
            SuiteKind::Examples => 6,
            SuiteKind::A => 6,
            SuiteKind::Bd => 4,
            SuiteKind::Parity => 6,
            SuiteKind::Sequences => 30,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SuiteKind::Examples => "examples",
            SuiteKind::A => "a",
            SuiteKind::Bd => "bd",
            SuiteKind::Parity => "parity",
            SuiteKind::Sequences => "sequences",
        }
    }
}

/// Runs one suite with an optional ceiling override.
pub fn run_suite(kind: SuiteKind, max_n: Option<usize>) -> SuiteReport {
    let max_n = max_n.unwrap_or_else(|| kind.default_max_n());
    match kind {
        SuiteKind::Examples => suite_examples(),
        SuiteKind::A => suite_a(max_n),
        SuiteKind::Bd => suite_bd(max_n),
        SuiteKind::Parity => suite_parity(max_n),
        SuiteKind::Sequences => suite_sequences(max_n),
    }
}

fn cyc(text: &str, n: usize) -> Permutation {
    let c: CycleDecomposition = text.parse().expect("fixture parses");
    cycle_compose(&c, n).expect("fixture composes")
}

fn ol(text: &str) -> Permutation {
    text.parse().expect("fixture parses")
}

fn sw(text: &str) -> SignedPermutation {
    text.parse().expect("fixture parses")
}

/// Pinned worked examples: the factor maps at degree 5, the unsigned pair
/// injection at degrees 3 and 5, and the signed pair injection at degree 6,
/// each confirmed in both directions where an inverse exists.
pub fn suite_examples() -> SuiteReport {
    let mut checks = Vec::new();

    // factor map at degree 5, both branches, both directions
    let f_cases = [
        (2usize, "(3,1,2)", 3usize, "(5,2)(4,1,3)"),
        (2, "(4,1,3,2)", 4, "(5,4,1,3,2)"),
    ];
    for (slot, inner, deg, image) in f_cases {
        let inner_p = cyc(inner, deg);
        let image_p = cyc(image, 5);
        let forward = f_map(5, slot, &inner_p).map(|p| p == image_p);
        let backward = g_map(5, &image_p).map(|(i, q)| i == slot && q == inner_p);
        checks.push(Check::new(
            format!("factor degree-5 ({slot}, {inner})"),
            forward == Ok(true) && backward == Ok(true),
            format!("f({slot}, {inner}) = {image} and back"),
        ));
    }

    // unsigned pair injection at degree 5: one example per class
    let psi_cases = [
        ("(5,4,1,3,2)", "(5,3)(4,1,2)", "(4,1,3,2)", "(6,4,1,2)(5,3)"),
        (
            "(5,2)(4,1,3)",
            "(5,3)(4,1,2)",
            "(4,3,1,2)",
            "(6,3,5)(4,1,2)",
        ),
        ("(5,4)(3,1,2)", "(5,4,1,3,2)", "(4,2,3,1)", "(6,2)(5,1,4,3)"),
        (
            "(5,4)(3,1,2)",
            "(5,2)(4,1,3)",
            "(4,3)(2,1)",
            "(6,2)(5,1,3,4)",
        ),
    ];
    for (p, s, z, x) in psi_cases {
        let input = (cyc(p, 5), cyc(s, 5));
        let expected = (cyc(z, 4), cyc(x, 6));
        let image = psi(5, &input.0, &input.1);
        let back = lambda_inv(5, &expected.0, &expected.1);
        checks.push(Check::new(
            format!("pair injection degree-5 ({p}, {s})"),
            image.as_ref() == Ok(&expected) && back == Ok(input),
            format!("image ({z}, {x}) and back"),
        ));
    }

    // unsigned base table at degree 3, all four rows
    let base3_cases = [
        ("[2,3,1]", "[2,3,1]", "[2,1]", "[2,3,4,1]"),
        ("[2,3,1]", "[3,1,2]", "[2,1]", "[2,4,1,3]"),
        ("[3,1,2]", "[3,1,2]", "[2,1]", "[3,4,2,1]"),
        ("[3,1,2]", "[2,3,1]", "[2,1]", "[3,1,4,2]"),
    ];
    for (p, s, z, x) in base3_cases {
        let image = psi(3, &ol(p), &ol(s));
        let expected = (ol(z), ol(x));
        checks.push(Check::new(
            format!("pair injection degree-3 ({p}, {s})"),
            image == Ok(expected),
            format!("image ({z}, {x})"),
        ));
    }

    // signed pair injection at degree 6: one example per sub-map
    let phi_cases = [
        (
            "a",
            "[-1,-6,-3,5,-4,-2]",
            "[-1,-2,6,-5,3,-4]",
            "[-1,5,-3,2,-4]",
            "[-1,-2,6,-5,3,-7,4]",
        ),
        (
            "b",
            "[-1,-6,-3,5,-4,-2]",
            "[-1,-3,6,-5,-4,2]",
            "[-1,3,-2,5,-4]",
            "[-1,-3,6,-5,-4,-7,-2]",
        ),
        (
            "c",
            "[-1,-6,-3,5,-4,-2]",
            "[-1,-2,4,-5,3,-6]",
            "[-1,-3,2,5,-4]",
            "[-1,-2,4,-5,3,-7,6]",
        ),
        (
            "21",
            "[-1,-6,-3,5,-4,2]",
            "[-1,-3,6,-5,-4,2]",
            "[-1,-2,-3,5,-4]",
            "[-1,-7,6,-5,-4,2,3]",
        ),
        (
            "11",
            "[2,3,1,-5,4,-6]",
            "[-1,-3,-2,5,-6,4]",
            "[-2,3,1,-5,4]",
            "[-1,3,-2,5,-6,4,-7]",
        ),
        (
            "12",
            "[2,3,1,-5,4,-6]",
            "[-1,-2,-3,-4,-5,-6]",
            "[-2,3,1,-5,4]",
            "[-1,-2,-3,-5,4,7,6]",
        ),
        (
            "13",
            "[-1,-2,-3,-4,-5,-6]",
            "[2,3,1,-5,-6,4]",
            "[-1,-2,5,-4,-3]",
            "[2,3,1,-5,-6,-7,-4]",
        ),
    ];
    for (tag, p, s, z, x) in phi_cases {
        let input = (sw(p), sw(s));
        let expected = (sw(z), sw(x));
        let image = phi(6, &input.0, &input.1);
        let back = theta(6, &expected.0, &expected.1);
        checks.push(Check::new(
            format!("signed pair injection degree-6 sub-map {tag}"),
            image.as_ref() == Ok(&expected) && back == Ok(input),
            format!("image ({z}, {x}) and back"),
        ));
    }

    // the constant pair and its unique preimage
    let star = phi_star(6);
    let w0 = SignedPermutation::w0(6);
    checks.push(Check::new(
        "signed pair injection degree-6 constant pair",
        star.0.to_string() == "[-5,-2,-3,-4,1]"
            && star.1.to_string() == "[-1,-2,-3,-4,-5,-7,6]"
            && phi(6, &w0, &w0).as_ref() == Ok(&star)
            && theta(6, &star.0, &star.1) == Ok((w0.clone(), w0.clone())),
        "(w0, w0) maps to the constant pair and back",
    ));

    SuiteReport {
        name: "examples".into(),
        checks,
    }
}

/// Exhaustive unsigned checks: the factor bijection at degrees 3–7 and the
/// pair injection with inverse, class-image separation, and range laws up
/// to `max_n`.
pub fn suite_a(max_n: usize) -> SuiteReport {
    let mut checks = Vec::new();

    // the factor map is a bijection onto the degree-n derangements
    for n in 3..=7usize {
        let hn: Vec<Permutation> = enumerate_derangements(n).collect();
        let failures = hn
            .par_iter()
            .filter(|p| match g_map(n, p) {
                Ok((slot, inner)) => f_map(n, slot, &inner).as_ref() != Ok(p),
                Err(_) => true,
            })
            .count();
        let domain = enumerate_derangements(n - 1).count() * (n - 1)
            + enumerate_derangements(n - 2).count() * (n - 1);
        checks.push(Check::new(
            format!("factor bijection n={n}"),
            failures == 0 && domain == hn.len(),
            format!(
                "{} derangements round-trip; domain size {} matches",
                hn.len(),
                domain
            ),
        ));
    }

    // on inputs whose 2-cycle partner of n is at most n−2, the factor
    // inverse returns that partner (never n−1) with a degree-(n−2) component
    for n in 3..=7usize {
        let mut inspected = 0usize;
        let mut ok = true;
        for p in enumerate_derangements(n) {
            let partner = p.image(n);
            if p.image(partner) == n && partner <= n - 2 {
                inspected += 1;
                match g_map(n, &p) {
                    Ok((slot, inner)) => {
                        ok &= slot == partner && slot <= n - 2 && inner.degree() == n - 2
                    }
                    Err(_) => ok = false,
                }
            }
        }
        checks.push(Check::new(
            format!("factor 2-cycle slot bound n={n}"),
            ok,
            format!("{inspected} two-cycle inputs keep slot <= n-2"),
        ));
    }

    // the pair injection: exhaustive injectivity, shape, inverse, and
    // class-image separation
    for n in 3..=max_n {
        let hn: Vec<Permutation> = enumerate_derangements(n).collect();
        let m = hn.len();
        let results: Vec<Option<((Permutation, Permutation), TypeAClass)>> = (0..m * m)
            .into_par_iter()
            .map(|k| {
                let (pi, sigma) = (&hn[k / m], &hn[k % m]);
                let class = classify_a(pi, sigma).ok()?;
                let (z, x) = psi(n, pi, sigma).ok()?;
                if z.degree() != n - 1
                    || x.degree() != n + 1
                    || !z.is_derangement()
                    || !x.is_derangement()
                {
                    return None;
                }
                if lambda_inv(n, &z, &x).ok()? != (pi.clone(), sigma.clone()) {
                    return None;
                }
                Some(((z, x), class))
            })
            .collect();

        let mut images: HashMap<(Permutation, Permutation), TypeAClass> = HashMap::new();
        let mut ok = true;
        let mut cross_class = 0usize;
        for r in &results {
            match r {
                Some((image, class)) => {
                    if let Some(prev) = images.insert(image.clone(), *class) {
                        ok = false;
                        if prev != *class {
                            cross_class += 1;
                        }
                    }
                }
                None => ok = false,
            }
        }
        ok &= images.len() == m * m;
        checks.push(Check::new(
            format!("pair injection exhaustive n={n}"),
            ok,
            format!(
                "{} pairs: images distinct, shaped, inverted; {} cross-class collisions",
                m * m,
                cross_class
            ),
        ));
    }

    // range laws of the recursive dispatch (the fixed degree-3/4 tables are
    // exempt by construction)
    for n in 5..=max_n {
        let hn: Vec<Permutation> = enumerate_derangements(n).collect();
        let m = hn.len();
        let violations = (0..m * m)
            .into_par_iter()
            .filter(|&k| {
                let (pi, sigma) = (&hn[k / m], &hn[k % m]);
                let class = classify_a(pi, sigma).unwrap();
                let (z, x) = psi(n, pi, sigma).unwrap();
                let top = x.image(n + 1);
                let top_paired = x.image(top) == n + 1;
                let zn = z.image(n - 1);
                let z_paired = z.image(zn) == n - 1 && zn != n - 1;
                match class {
                    TypeAClass::T1 => top_paired,
                    TypeAClass::T2 => {
                        top_paired
                            || g_map(n + 1, &x)
                                .map(|(slot, inner)| slot != n || inner.degree() != n)
                                .unwrap_or(true)
                    }
                    TypeAClass::T3 => !top_paired || z_paired,
                    TypeAClass::T4 => !top_paired || !z_paired,
                }
            })
            .count();
        checks.push(Check::new(
            format!("pair injection range laws n={n}"),
            violations == 0,
            format!("{} pairs satisfy the class image laws", m * m),
        ));
    }

    // squared-count inequality recomputed from the enumerated sets
    let mut ok = true;
    let mut detail = String::new();
    for n in 3..=max_n.min(6) {
        let sq = h_rec(n).unwrap().pow(2);
        let prod = h_rec(n - 1).unwrap() * h_rec(n + 1).unwrap();
        ok &= sq <= prod;
        detail.push_str(&format!("n={n}: {sq} <= {prod}; "));
    }
    checks.push(Check::new(
        "unsigned squared-count inequality",
        ok,
        detail.trim_end_matches("; ").to_string(),
    ));

    SuiteReport {
        name: "a".into(),
        checks,
    }
}

/// Exhaustive signed checks up to `max_n`: injectivity with parity
/// preservation and inverse, decode rejection of the complement, branch
/// coverage, and the negative control for the naive drop/append map.
pub fn suite_bd(max_n: usize) -> SuiteReport {
    let mut checks = Vec::new();
    let mut branch_totals: HashMap<&'static str, usize> = HashMap::new();

    for n in 3..=max_n {
        let source = enumerate_signed_derangements(n, SignedFamily::B);
        let m = source.len();
        let results: Vec<Option<((SignedPermutation, SignedPermutation), PhiBranch)>> = (0..m * m)
            .into_par_iter()
            .map(|k| {
                let (pi, sigma) = (&source[k / m], &source[k % m]);
                let ((z, x), branch) = phi_traced(n, pi, sigma).ok()?;
                if z.degree() != n - 1
                    || x.degree() != n + 1
                    || !z.is_derangement_b()
                    || !x.is_derangement_b()
                {
                    return None;
                }
                // componentwise negative-count parity preservation
                if z.neg_count() % 2 != pi.neg_count() % 2
                    || x.neg_count() % 2 != sigma.neg_count() % 2
                {
                    return None;
                }
                if theta(n, &z, &x).ok()? != (pi.clone(), sigma.clone()) {
                    return None;
                }
                Some(((z, x), branch))
            })
            .collect();

        let mut images: HashMap<(SignedPermutation, SignedPermutation), usize> = HashMap::new();
        let mut ok = true;
        for (k, r) in results.iter().enumerate() {
            match r {
                Some((image, branch)) => {
                    *branch_totals.entry(branch.label()).or_default() += 1;
                    if images.insert(image.clone(), k).is_some() {
                        ok = false;
                    }
                }
                None => ok = false,
            }
        }
        ok &= images.len() == m * m;
        checks.push(Check::new(
            format!("signed pair injection exhaustive n={n}"),
            ok,
            format!(
                "{} pairs: images distinct, parity-preserving, inverted",
                m * m
            ),
        ));

        // the decoder accepts exactly the image set
        let z_side = enumerate_signed_derangements(n - 1, SignedFamily::B);
        let x_side = enumerate_signed_derangements(n + 1, SignedFamily::B);
        let misses: usize = z_side
            .par_iter()
            .map(|z| {
                let mut bad = 0usize;
                for x in &x_side {
                    let in_image = images.contains_key(&(z.clone(), x.clone()));
                    match theta(n, z, x) {
                        Ok(pair) => {
                            if !in_image
                                || phi(n, &pair.0, &pair.1).ok().as_ref()
                                    != Some(&(z.clone(), x.clone()))
                            {
                                bad += 1;
                            }
                        }
                        Err(Error::NotInImage) => {
                            if in_image {
                                bad += 1;
                            }
                        }
                        Err(_) => bad += 1,
                    }
                }
                bad
            })
            .sum();
        checks.push(Check::new(
            format!("signed decode complement n={n}"),
            misses == 0,
            format!(
                "{} candidate pairs: {} in image accepted, {} rejected",
                z_side.len() * x_side.len(),
                m * m,
                z_side.len() * x_side.len() - m * m
            ),
        ));
    }

    // every dispatch behavior occurs somewhere in the sweep
    let mut missing: Vec<&str> = PhiBranch::all()
        .iter()
        .map(|b| b.label())
        .filter(|l| !branch_totals.contains_key(*l))
        .collect();
    missing.sort_unstable();
    let mut tally: Vec<(&str, usize)> = branch_totals.into_iter().collect();
    tally.sort_unstable();
    let tally_text = tally
        .iter()
        .map(|(l, c)| format!("{l}={c}"))
        .collect::<Vec<_>>()
        .join(", ");
    checks.push(Check::new(
        "signed dispatch coverage",
        missing.is_empty(),
        if missing.is_empty() {
            format!("all behaviors hit: {tally_text}")
        } else {
            format!("missing {missing:?}; hit {tally_text}")
        },
    ));

    // negative control: dropping −n from the first window and appending
    // −(n+1) to the second stays inside signed derangements but breaks
    // even-negative closure at degree 3
    let d3 = enumerate_signed_derangements(3, SignedFamily::D);
    let mut violations = 0usize;
    let mut applicable = 0usize;
    for pi in &d3 {
        if pi.window()[2] != -3 {
            continue;
        }
        for sigma in &d3 {
            applicable += 1;
            let z = SignedPermutation::from_window(pi.window()[..2].to_vec()).unwrap();
            let mut xw = sigma.window().to_vec();
            xw.push(-4);
            let x = SignedPermutation::from_window(xw).unwrap();
            let stays_b = z.is_derangement_b() && x.is_derangement_b();
            if stays_b && (!z.is_in_d() || !x.is_in_d()) {
                violations += 1;
            }
        }
    }
    checks.push(Check::new(
        "naive drop/append control",
        violations > 0,
        format!(
            "{violations} of {applicable} even-negative degree-3 pairs leave the even-negative family"
        ),
    ));

    // squared-count inequalities recomputed from enumerated counts; the
    // even-negative family starts at degree 2 (its degree-1 count is zero)
    let top = (max_n + 1).min(6);
    let mut ok = true;
    let mut detail = String::new();
    for (fam, from) in [
        (SeqFamily::HB, 1usize),
        (SeqFamily::HD, 2),
        (SeqFamily::HBminusD, 1),
    ] {
        let t = enumerated_table(fam, top).unwrap();
        let window = SequenceTable {
            name: t.name.clone(),
            start_index: from,
            values: (from..=top).map(|n| t.get(n).unwrap().clone()).collect(),
        };
        ok &= is_log_convex(&window) == Ok(Verdict::LogConvex);
        detail.push_str(&format!("{} on {from}..={top}; ", fam.name()));
    }
    checks.push(Check::new(
        "signed squared-count inequalities",
        ok,
        detail.trim_end_matches("; ").to_string(),
    ));

    SuiteReport {
        name: "bd".into(),
        checks,
    }
}

/// Exhaustive parity-map checks up to `max_n`: two-sided bijections between
/// the even and odd classes, the flip involution, and the `(−1)^n`
/// bookkeeping for the excluded window.
pub fn suite_parity(max_n: usize) -> SuiteReport {
    let mut checks = Vec::new();

    for n in 1..=max_n {
        let w0 = SignedPermutation::w0(n);
        let all = enumerate_signed_derangements(n, SignedFamily::B);

        // inv_b split
        let plus: Vec<_> = all.iter().filter(|p| p.inv_b() % 2 == 0).collect();
        let minus: Vec<_> = all.iter().filter(|p| p.inv_b() % 2 == 1).collect();
        let mut ok = true;
        let mut mapped = 0usize;
        for p in plus.iter().filter(|p| ***p != w0) {
            match f_parity(p) {
                Ok(q) => {
                    mapped += 1;
                    ok &= q.inv_b() % 2 == 1 && q != w0;
                    ok &= pi_minus(&q).map(|r| r.image == **p).unwrap_or(false);
                }
                Err(_) => ok = false,
            }
        }
        let plus_minus_w0 = plus.iter().filter(|p| ***p != w0).count();
        let minus_minus_w0 = minus.iter().filter(|p| ***p != w0).count();
        ok &= mapped == plus_minus_w0 && plus_minus_w0 == minus_minus_w0;
        // the flip is injective and both sides have equal size, so it is onto
        checks.push(Check::new(
            format!("inv_b parity bijection n={n}"),
            ok,
            format!("{plus_minus_w0} <-> {minus_minus_w0} windows paired"),
        ));

        // negative-count split
        let even: Vec<_> = all.iter().filter(|p| p.is_in_d()).collect();
        let odd: Vec<_> = all.iter().filter(|p| !p.is_in_d()).collect();
        let mut ok = true;
        let mut mapped = 0usize;
        for p in even.iter().filter(|p| ***p != w0) {
            match g_parity(p) {
                Ok(q) => {
                    mapped += 1;
                    ok &= !q.is_in_d() && q != w0;
                    ok &= pi_minus(&q).map(|r| r.image == **p).unwrap_or(false);
                }
                Err(_) => ok = false,
            }
        }
        let even_minus_w0 = even.iter().filter(|p| ***p != w0).count();
        let odd_minus_w0 = odd.iter().filter(|p| ***p != w0).count();
        ok &= mapped == even_minus_w0 && even_minus_w0 == odd_minus_w0;
        checks.push(Check::new(
            format!("negative-count parity bijection n={n}"),
            ok,
            format!("{even_minus_w0} <-> {odd_minus_w0} windows paired"),
        ));

        // w0 bookkeeping: both gaps equal (−1)^n exactly
        let gap_b = plus.len() as i64 - minus.len() as i64;
        let gap_d = even.len() as i64 - odd.len() as i64;
        let want = if n % 2 == 0 { 1 } else { -1 };
        checks.push(Check::new(
            format!("excluded-window bookkeeping n={n}"),
            gap_b == want && gap_d == want,
            format!("both class gaps equal {want}"),
        ));
    }

    SuiteReport {
        name: "parity".into(),
        checks,
    }
}

/// Sequence checks: recurrences against enumeration, the even/odd split
/// identities, the two polynomial expressions, and every log-convexity
/// verdict at its stated window, up to `max_n` (default 30).
pub fn suite_sequences(max_n: usize) -> SuiteReport {
    let mut checks = Vec::new();
    let top = max_n.max(8);

    // two recurrences and brute-force enumeration agree
    let mut ok = true;
    for n in 1..=8usize {
        let counted = crate::seq::Nat::from(enumerate_derangements(n).count());
        ok &= h_rec(n).unwrap() == counted;
        if n >= 2 {
            ok &= h_reduced(n).unwrap() == counted;
        }
    }
    for n in 2..=top {
        ok &= h_rec(n).unwrap() == h_reduced(n).unwrap();
    }
    checks.push(Check::new(
        "recurrences agree with enumeration",
        ok,
        format!("enumerated to n=8, recurrences cross-checked to n={top}"),
    ));

    // even/odd split: sum and signed gap
    let mut ok = true;
    for n in 1..=top {
        let total = h_plus(n).unwrap() + h_minus(n).unwrap();
        ok &= total == h_rec(n).unwrap();
        let gap = BigInt::from(h_plus(n).unwrap()) - BigInt::from(h_minus(n).unwrap());
        let want = BigInt::from(n as i64 - 1) * if n % 2 == 1 { 1 } else { -1 };
        ok &= gap == want;
    }
    checks.push(Check::new(
        "even/odd split identities",
        ok,
        format!("sum and signed gap exact on 1..={top}"),
    ));

    // the two polynomial expressions: factored form and sign windows
    let mut ok = true;
    for n in 2..=top {
        let even = even_expr(n).unwrap();
        let even_direct = BigInt::from(4)
            * (BigInt::from(h_plus(n + 1).unwrap()) * BigInt::from(h_plus(n - 1).unwrap())
                - BigInt::from(h_plus(n).unwrap()) * BigInt::from(h_plus(n).unwrap()));
        ok &= even == even_direct;
        if n >= 6 {
            ok &= even >= BigInt::from(0);
        }
        let odd = odd_expr(n).unwrap();
        let odd_direct = BigInt::from(4)
            * (BigInt::from(h_minus(n + 1).unwrap()) * BigInt::from(h_minus(n - 1).unwrap())
                - BigInt::from(h_minus(n).unwrap()) * BigInt::from(h_minus(n).unwrap()));
        ok &= odd == odd_direct;
        if n >= 5 {
            ok &= odd >= BigInt::from(0);
        }
    }
    checks.push(Check::new(
        "split-discriminant expressions",
        ok,
        format!("factored equality on 2..={top}; signs on 6.. / 5..={top}"),
    ));

    // log-convexity verdicts on the stated windows
    let window = |fam: SeqFamily, from: usize, to: usize| -> SequenceTable {
        let t = crate::seq::table(fam, to).unwrap();
        SequenceTable {
            name: t.name.clone(),
            start_index: from,
            values: (from..=to).map(|n| t.get(n).unwrap().clone()).collect(),
        }
    };
    let verdicts = [
        (window(SeqFamily::H, 2, top), "h"),
        (window(SeqFamily::HPlus, 6, top), "hPlus"),
        (window(SeqFamily::HMinus, 5, top), "hMinus"),
        (window(SeqFamily::HB, 1, 6), "hB"),
        (window(SeqFamily::HD, 2, 6), "hD"),
        (window(SeqFamily::HBminusD, 1, 6), "hBminusD"),
    ];
    for (table, name) in verdicts {
        let verdict = is_log_convex(&table);
        checks.push(Check::new(
            format!(
                "log-convexity {name} on {}..={}",
                table.start_index,
                table.end_index()
            ),
            verdict == Ok(Verdict::LogConvex),
            match verdict {
                Ok(v) => v.to_string(),
                Err(e) => format!("error: {e}"),
            },
        ));
    }

    // family cross-identities from enumeration
    let hb = enumerated_table(SeqFamily::HB, 6).unwrap();
    let hd = enumerated_table(SeqFamily::HD, 6).unwrap();
    let hbmd = enumerated_table(SeqFamily::HBminusD, 6).unwrap();
    let hbp = enumerated_table(SeqFamily::HBPlus, 6).unwrap();
    let hbm = enumerated_table(SeqFamily::HBMinus, 6).unwrap();
    let mut ok = true;
    for n in 1..=6usize {
        let want = BigInt::from(if n % 2 == 0 { 1 } else { -1 });
        let gap =
            BigInt::from(hd.get(n).unwrap().clone()) - BigInt::from(hbmd.get(n).unwrap().clone());
        ok &= gap == want;
        ok &= hd.get(n).unwrap() + hbmd.get(n).unwrap() == *hb.get(n).unwrap();
        ok &= hbp.get(n) == hd.get(n);
        ok &= hbm.get(n) == hbmd.get(n);
    }
    checks.push(Check::new(
        "signed family cross-identities",
        ok,
        "gap, sum, and inv_b/negative-count agreements exact on 1..=6",
    ));

    SuiteReport {
        name: "sequences".into(),
        checks,
    }
}
