//! Sequence-level identities, frozen value tables, log-convexity verdicts
//! on the stated windows, and the exact export formats.

use derange::seq::{
    closed_table, enumerated_table, even_expr, h_minus, h_plus, h_rec, h_reduced, is_log_convex,
    odd_expr, table, tables_to_csv, tables_to_json, Nat, SeqFamily, SequenceTable, Verdict,
};
use derange::Error;
use num_bigint::BigInt;

fn nat(v: u64) -> Nat {
    Nat::from(v)
}

fn window(family: SeqFamily, from: usize, to: usize) -> SequenceTable {
    let t = table(family, to).unwrap();
    SequenceTable {
        name: t.name.clone(),
        start_index: from,
        values: (from..=to).map(|n| t.get(n).unwrap().clone()).collect(),
    }
}

/// Frozen counts for every family, cross-checked against enumeration.
#[test]
fn frozen_value_tables() {
    let cases: [(SeqFamily, &[u64]); 10] = [
        (SeqFamily::H, &[0, 1, 2, 9, 44, 265, 1854, 14833]),
        (SeqFamily::HPlus, &[0, 0, 2, 3, 24, 130, 930, 7413]),
        (SeqFamily::HMinus, &[0, 1, 0, 6, 20, 135, 924, 7420]),
        (SeqFamily::HB, &[1, 5, 29, 233, 2329, 27949, 391285]),
        (SeqFamily::HD, &[0, 3, 14, 117, 1164, 13975]),
        (SeqFamily::HBminusD, &[1, 2, 15, 116, 1165, 13974]),
        (SeqFamily::HBPlus, &[0, 3, 14, 117, 1164, 13975]),
        (SeqFamily::HBMinus, &[1, 2, 15, 116, 1165, 13974]),
        (SeqFamily::HDPlus, &[0, 1, 8, 57, 584, 6985]),
        (SeqFamily::HDMinus, &[0, 2, 6, 60, 580, 6990]),
    ];
    for (family, expected) in cases {
        let got = enumerated_table(family, expected.len()).unwrap();
        let want: Vec<Nat> = expected.iter().map(|&v| nat(v)).collect();
        assert_eq!(got.values, want, "family {family}");
        assert_eq!(got.start_index, 1);
    }
}

/// The two-term recurrence, the one-term recurrence, and brute-force
/// enumeration agree on 1..=8; the recurrences agree on 1..=40.
#[test]
fn recurrences_match_each_other_and_enumeration() {
    let counted = enumerated_table(SeqFamily::H, 8).unwrap();
    for n in 1..=8usize {
        assert_eq!(&h_rec(n).unwrap(), counted.get(n).unwrap(), "n={n}");
        if n >= 2 {
            assert_eq!(&h_reduced(n).unwrap(), counted.get(n).unwrap(), "n={n}");
        }
    }
    for n in 2..=40usize {
        assert_eq!(h_rec(n).unwrap(), h_reduced(n).unwrap(), "n={n}");
    }
}

/// The even/odd inversion split: the two parts sum to the whole and their
/// signed gap is exactly `(−1)^{n−1}(n−1)`, on 1..=30.
#[test]
fn even_odd_split_identities_hold_to_30() {
    for n in 1..=30usize {
        let plus = h_plus(n).unwrap();
        let minus = h_minus(n).unwrap();
        assert_eq!(&plus + &minus, h_rec(n).unwrap(), "sum at n={n}");
        let gap = BigInt::from(plus) - BigInt::from(minus);
        let magnitude = BigInt::from(n as i64 - 1);
        let want = if n % 2 == 1 { magnitude } else { -magnitude };
        assert_eq!(gap, want, "gap at n={n}");
    }
    // spot values
    assert_eq!(h_plus(4).unwrap(), nat(3));
    assert_eq!(h_minus(4).unwrap(), nat(6));
    assert_eq!(h_plus(5).unwrap(), nat(24));
    assert_eq!(h_minus(5).unwrap(), nat(20));
}

/// Each discriminant expression equals four times the corresponding
/// convexity discriminant exactly, and is nonnegative on its stated window.
#[test]
fn discriminant_expressions_match_their_factored_forms() {
    let four = BigInt::from(4);
    for n in 2..=30usize {
        let even = even_expr(n).unwrap();
        let even_factored = &four
            * (BigInt::from(h_plus(n + 1).unwrap()) * BigInt::from(h_plus(n - 1).unwrap())
                - BigInt::from(h_plus(n).unwrap()) * BigInt::from(h_plus(n).unwrap()));
        assert_eq!(even, even_factored, "even discriminant at n={n}");
        if n >= 6 {
            assert!(even >= BigInt::from(0), "even sign at n={n}");
        }
        let odd = odd_expr(n).unwrap();
        let odd_factored = &four
            * (BigInt::from(h_minus(n + 1).unwrap()) * BigInt::from(h_minus(n - 1).unwrap())
                - BigInt::from(h_minus(n).unwrap()) * BigInt::from(h_minus(n).unwrap()));
        assert_eq!(odd, odd_factored, "odd discriminant at n={n}");
        if n >= 5 {
            assert!(odd >= BigInt::from(0), "odd sign at n={n}");
        }
    }
}

/// Log-convexity verdicts on every stated window.
#[test]
fn log_convexity_verdicts_on_stated_windows() {
    let log_convex = [
        window(SeqFamily::H, 2, 30),
        window(SeqFamily::HPlus, 6, 30),
        window(SeqFamily::HMinus, 5, 30),
        window(SeqFamily::HB, 1, 6),
        window(SeqFamily::HD, 2, 6),
        window(SeqFamily::HBminusD, 1, 6),
    ];
    for t in &log_convex {
        assert_eq!(
            is_log_convex(t),
            Ok(Verdict::LogConvex),
            "{} on {}..={}",
            t.name,
            t.start_index,
            t.end_index()
        );
    }
}

/// The window boundaries are sharp: widening the even split's window by one
/// index plants a real violation, and the zero terms below each window are
/// reported as such rather than scanned over.
#[test]
fn window_boundaries_are_sharp() {
    assert_eq!(
        is_log_convex(&window(SeqFamily::HPlus, 3, 30)),
        Ok(Verdict::ViolationAt(5)),
        "the even split really does fail below its window"
    );
    assert_eq!(
        is_log_convex(&window(SeqFamily::HPlus, 2, 30)),
        Err(Error::NonPositiveTerm { index: 2 })
    );
    assert_eq!(
        is_log_convex(&window(SeqFamily::HMinus, 3, 30)),
        Err(Error::NonPositiveTerm { index: 3 })
    );
    assert_eq!(
        is_log_convex(&window(SeqFamily::HD, 1, 6)),
        Err(Error::NonPositiveTerm { index: 1 })
    );
    assert_eq!(
        is_log_convex(&window(SeqFamily::H, 1, 10)),
        Err(Error::NonPositiveTerm { index: 1 })
    );
}

/// Closed forms and enumeration agree wherever both are available.
#[test]
fn closed_forms_agree_with_enumeration() {
    for family in [SeqFamily::H, SeqFamily::HPlus, SeqFamily::HMinus] {
        let closed = closed_table(family, 9).unwrap();
        let counted = enumerated_table(family, 9).unwrap();
        assert_eq!(closed, counted, "family {family}");
    }
    // families without a closed form fall back to enumeration
    for family in [SeqFamily::HB, SeqFamily::HD] {
        assert!(matches!(closed_table(family, 5), Err(Error::Domain(_))));
        assert_eq!(
            table(family, 5).unwrap(),
            enumerated_table(family, 5).unwrap()
        );
    }
}

/// Enumeration refuses degrees past its cap; closed forms keep going.
#[test]
fn enumeration_caps_are_enforced() {
    assert!(matches!(
        enumerated_table(SeqFamily::HB, 8),
        Err(Error::CapExceeded {
            requested: 8,
            cap: 7
        })
    ));
    assert!(matches!(
        enumerated_table(SeqFamily::H, 10),
        Err(Error::CapExceeded {
            requested: 10,
            cap: 9
        })
    ));
    assert_eq!(table(SeqFamily::H, 40).unwrap().values.len(), 40);
}

/// Exact export formats: CSV header and rows, JSON single object and array,
/// decimal strings throughout.
#[test]
fn export_formats_are_exact() {
    let h3 = table(SeqFamily::H, 3).unwrap();
    assert_eq!(h3.to_csv(), "family,n,value\nh,1,0\nh,2,1\nh,3,2\n");
    assert_eq!(
        h3.to_json(),
        r#"{"family":"h","start_index":1,"values":["0","1","2"]}"#
    );

    let hb2 = table(SeqFamily::HB, 2).unwrap();
    assert_eq!(
        tables_to_csv(&[h3.clone(), hb2.clone()]),
        "family,n,value\nh,1,0\nh,2,1\nh,3,2\nhB,1,1\nhB,2,5\n"
    );
    assert_eq!(
        tables_to_json(&[h3, hb2]),
        r#"[{"family":"h","start_index":1,"values":["0","1","2"]},{"family":"hB","start_index":1,"values":["1","5"]}]"#
    );
}

/// Family names parse and print as their canonical spellings.
#[test]
fn family_names_round_trip() {
    for family in SeqFamily::all() {
        let text = family.to_string();
        assert_eq!(text.parse::<SeqFamily>().unwrap(), family);
        assert_eq!(text, family.name());
    }
    assert!(matches!(
        "hb".parse::<SeqFamily>(),
        Err(Error::Parse { .. })
    ));
}
