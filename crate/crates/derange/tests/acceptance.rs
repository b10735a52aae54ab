//! Acceptance gate: one test per criterion, each printing a single
//! `ACCEPTANCE <k> PASS/FAIL` line (visible with `-- --nocapture`).
//!
//! Budgets are wall-clock upper bounds; the sweeps actually finish orders
//! of magnitude faster.

use std::time::{Duration, Instant};

use derange::seq::{self, SeqFamily, Verdict};
use derange::verify::{run_suite, suite_bd, SuiteKind, SuiteReport};

fn report(k: usize, name: &str, passed: bool, detail: String) {
    let tag = if passed { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {k} {tag} — {name}: {detail}");
    assert!(passed, "acceptance criterion {k} failed: {name}: {detail}");
}

fn suite_summary(r: &SuiteReport) -> String {
    let failed: Vec<&str> = r
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.label.as_str())
        .collect();
    if failed.is_empty() {
        format!("{} checks", r.checks.len())
    } else {
        format!("failing: {failed:?}")
    }
}

#[test]
fn acceptance_1_worked_examples() {
    let start = Instant::now();
    let r = run_suite(SuiteKind::Examples, None);
    let elapsed = start.elapsed();
    report(
        1,
        "worked examples reproduce bit-exactly",
        r.passed() && elapsed < Duration::from_secs(1),
        format!("{}, {:.3}s", suite_summary(&r), elapsed.as_secs_f64()),
    );
}

#[test]
fn acceptance_2_unsigned_injection_exhaustive() {
    // single-threaded by construction: a one-worker pool
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let start = Instant::now();
    let r = pool.install(|| run_suite(SuiteKind::A, Some(6)));
    let elapsed = start.elapsed();
    report(
        2,
        "unsigned pair injection exhaustive to degree 6",
        r.passed() && elapsed < Duration::from_secs(60),
        format!(
            "{}, single-threaded {:.3}s",
            suite_summary(&r),
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn acceptance_3_signed_injection_exhaustive() {
    let start = Instant::now();
    let r = run_suite(SuiteKind::Bd, Some(4));
    let elapsed = start.elapsed();
    report(
        3,
        "signed pair injection exhaustive to degree 4",
        r.passed() && elapsed < Duration::from_secs(120),
        format!("{}, {:.3}s", suite_summary(&r), elapsed.as_secs_f64()),
    );
}

/// Optional slow gate: the full degree-5 signed sweep (5.4M pairs plus the
/// 6.5M-candidate decode complement). Run with `--ignored`.
#[test]
#[ignore = "slow exhaustive sweep at degree 5"]
fn acceptance_3_slow_gate_degree_5() {
    let r = suite_bd(5);
    report(
        3,
        "signed pair injection exhaustive to degree 5 (slow gate)",
        r.passed(),
        suite_summary(&r),
    );
}

#[test]
fn acceptance_4_sequence_identities() {
    let r = run_suite(SuiteKind::Sequences, Some(30));
    let identity_checks = [
        "recurrences agree with enumeration",
        "even/odd split identities",
        "split-discriminant expressions",
    ];
    let passed = identity_checks
        .iter()
        .all(|label| r.checks.iter().any(|c| c.label == *label && c.passed));
    report(
        4,
        "sequence recurrences and split identities exact",
        passed,
        suite_summary(&r),
    );
}

#[test]
fn acceptance_5_log_convexity_verdicts() {
    let r = run_suite(SuiteKind::Sequences, Some(30));
    let windows = [
        ("log-convexity h on 2..=30", true),
        ("log-convexity hPlus on 6..=30", true),
        ("log-convexity hMinus on 5..=30", true),
        ("log-convexity hB on 1..=6", true),
        ("log-convexity hD on 2..=6", true),
        ("log-convexity hBminusD on 1..=6", true),
    ];
    let passed = windows.iter().all(|(label, want)| {
        r.checks
            .iter()
            .any(|c| c.label == *label && c.passed == *want)
    });
    report(
        5,
        "log-convexity verdicts on all stated windows",
        passed,
        suite_summary(&r),
    );
}

#[test]
fn acceptance_6_parity_bijections() {
    let r = run_suite(SuiteKind::Parity, Some(6));
    report(
        6,
        "sign-flip parity bijections to degree 6 with exact bookkeeping",
        r.passed(),
        suite_summary(&r),
    );
}

#[test]
fn acceptance_7_negative_control() {
    let r = suite_bd(3);
    let control = r
        .checks
        .iter()
        .find(|c| c.label == "naive drop/append control")
        .expect("control check present");
    report(
        7,
        "naive drop/append map violates even-negative closure",
        control.passed,
        control.detail.clone(),
    );
}

#[test]
fn acceptance_8_scope_of_evidence() {
    // The claims hold for every degree the library can enumerate; nothing
    // here proves them for all degrees. Two falsifiability probes document
    // that the evidence is finite and the scanner is not vacuous.
    let cap_enforced = matches!(
        seq::enumerated_table(SeqFamily::HB, 8),
        Err(derange::Error::CapExceeded { .. })
    );
    let scanner_flags = {
        let t = seq::SequenceTable {
            name: "probe".into(),
            start_index: 1,
            values: [1u32, 3, 4].iter().map(|&v| v.into()).collect(),
        };
        seq::is_log_convex(&t) == Ok(Verdict::ViolationAt(2))
    };
    report(
        8,
        "evidence is exhaustive small-degree verification, not a full proof",
        cap_enforced && scanner_flags,
        "enumeration refuses degrees past its cap; the convexity scanner \
         detects planted violations; no all-degree claim is asserted"
            .into(),
    );
}
