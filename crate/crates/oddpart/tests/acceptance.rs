//! Acceptance suite: one test per shipped guarantee, each printing a
//! PASS line with the measured outcome (run with `--nocapture` to see
//! them). Expected values that admit an independent derivation are
//! frozen here from that derivation, never from the implementation under
//! test alone.

use std::time::Instant;

use num_bigint::BigUint;

use oddpart::catalog;
use oddpart::harness::{self, check_bound, BoundKind};
use oddpart::lie;
use oddpart::numth;
use oddpart::report::Verdict;

/// Criterion 1: all 23 embedded exceptional-primitive-group rows verify:
/// computed odd parts equal the listed column exactly and respect the
/// 2^(n-1) bound, within 30 seconds including the Mathieu BSGS runs.
#[test]
fn criterion_01_table4_reproduction() {
    let start = Instant::now();
    let report = catalog::verify_table4(false).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(report.rows.len(), 23, "all 23 rows verified");
    assert_eq!(report.summary.discrepancy, 0, "{}", report.to_json());
    assert_eq!(report.summary.match_count, 23);
    for (label, odd) in [
        ("M23 (degree 23)", "79695"),
        ("M24 (degree 24)", "239085"),
        ("PSL(3,3) (degree 13)", "351"),
        ("2^4:A7 (degree 16)", "315"),
    ] {
        let row = report.rows.iter().find(|r| r.label == label).unwrap();
        assert_eq!(row.computed["odd_part"], odd, "{label}");
    }
    assert!(elapsed.as_secs() < 30, "took {elapsed:?}");
    println!("[criterion 1] PASS: 23/23 rows match in {elapsed:?}");
}

/// Criterion 2: Mathieu certifications — orders, odd parts,
/// transitivity at the listed degrees.
#[test]
fn criterion_02_mathieu_certification() {
    let start = Instant::now();
    for (degree, order, odd) in [
        (11u32, 7920u64, 495u64),
        (12, 95040, 1485),
        (23, 10200960, 79695),
        (24, 244823040, 239085),
    ] {
        let g = catalog::mathieu_group(degree).unwrap();
        assert_eq!(g.order_u64(), Some(order), "M{degree} order");
        assert_eq!(numth::odd_part(order), odd, "M{degree} odd part");
        assert!(g.is_transitive(), "M{degree} transitive at degree {degree}");
    }
    println!(
        "[criterion 2] PASS: M11/M12/M23/M24 certified in {:?}",
        start.elapsed()
    );
}

/// Criterion 3: the Zsigmondy suite reproduces the case analysis
/// constants exactly, in under a second.
#[test]
fn criterion_03_zsigmondy_suite() {
    let start = Instant::now();
    assert!(numth::zsigmondy_primes(2, 6).unwrap().is_empty());
    let w24: Vec<u128> = numth::zsigmondy_primes(2, 4)
        .unwrap()
        .iter()
        .map(|w| w.prime)
        .collect();
    assert_eq!(w24, vec![5]);
    let has = |p: u64, n: u32, l: u128| {
        numth::zsigmondy_primes(p, n)
            .unwrap()
            .iter()
            .any(|w| w.prime == l)
    };
    assert!(has(2, 12, 13));
    assert!(has(3, 8, 41));
    assert!(has(2, 8, 17));
    let elapsed = start.elapsed();
    assert!(elapsed.as_millis() < 1000, "took {elapsed:?}");
    println!("[criterion 3] PASS: Zsigmondy constants reproduced in {elapsed:?}");
}

/// Criterion 4: every embedded row of the linear and unitary tables is
/// recomputed — group order present, an independently found valid
/// witness pair on every row, verdicts MATCH or VALID_DIFFERENT_WITNESS
/// everywhere except the explicitly reported discrepancy rows, no row
/// skipped.
#[test]
fn criterion_04_tables_1_2_recomputation() {
    let start = Instant::now();
    let t1 = lie::verify_table1().unwrap();
    let t2 = lie::verify_table2().unwrap();
    assert_eq!(t1.rows.len(), 22, "table 1: 16 single rows + 6 expanded");
    assert_eq!(t2.rows.len(), 40, "table 2: all 40 rows");

    // The discrepancy rows carry data that genuinely fails recomputation
    // (a d/out mismatch or a listed witness not dividing the order);
    // each was checked by hand against the order formulas.
    let expected_t1 = ["A_5(16)"];
    let expected_t2 = ["2A_4(2)", "2A_2(8)", "2A_4(128)", "2A_3(3)", "2A_4(5)"];
    for (report, expected) in [(&t1, &expected_t1[..]), (&t2, &expected_t2[..])] {
        let mut discrepancies = Vec::new();
        for row in &report.rows {
            assert!(
                row.computed.contains_key("order"),
                "row {} carries the recomputed order",
                row.label
            );
            match row.verdict {
                Verdict::Discrepancy => discrepancies.push(row.label.as_str()),
                _ => {
                    // Valid rows come with an independent witness pair.
                    assert!(row.computed.contains_key("l1"), "{}", row.label);
                    assert!(row.computed.contains_key("l2"), "{}", row.label);
                }
            }
        }
        assert_eq!(discrepancies, expected, "{}", report.table);
    }
    println!(
        "[criterion 4] PASS: 22 + 40 rows recomputed, {} + {} discrepancies flagged, in {:?}",
        1,
        5,
        start.elapsed()
    );
}

/// Criterion 5: the remaining-family sweep (q ≤ 32, rank ≤ 8) finds a
/// valid witness pair in every cell; the set of Zsigmondy-route failures
/// is compared against the listed exceptional cells with every
/// difference reported as a finding. The finding set is frozen from
/// hand-checked representatives of each kind.
#[test]
fn criterion_05_table3_sweep() {
    let start = Instant::now();
    let report = lie::sweep_table3(32, 8).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(report.rows.len(), 14, "all fourteen families swept");
    for row in &report.rows {
        assert_eq!(
            row.computed["all_witnesses_valid"], "true",
            "family {}",
            row.label
        );
        assert_ne!(
            row.verdict,
            Verdict::Discrepancy,
            "family {}: {:?}",
            row.label,
            row.notes
        );
    }
    // Families whose failure set equals the listed column exactly.
    for family in ["E6", "E7", "E8", "F4", "2E6", "2B2", "2F4", "2G2"] {
        let row = report.rows.iter().find(|r| r.label == family).unwrap();
        assert_eq!(row.verdict, Verdict::Match, "family {family}");
    }
    let expected: Vec<(&str, &str)> = vec![
        ("LISTED_CELL_NOT_SIMPLE", "B p=2 f=1 n=2"),
        ("LISTED_BUT_PASSES", "B p=5 f=1 n=2"),
        ("LISTED_BUT_PASSES", "B p=11 f=1 n=2"),
        ("LISTED_BUT_PASSES", "B p=13 f=1 n=2"),
        ("LISTED_BUT_PASSES", "B p=17 f=1 n=2"),
        ("LISTED_BUT_PASSES", "B p=19 f=1 n=2"),
        ("LISTED_BUT_PASSES", "B p=23 f=1 n=2"),
        ("LISTED_BUT_PASSES", "B p=29 f=1 n=2"),
        ("UNLISTED_EXCEPTION", "B p=2 f=1 n=4"),
        ("LISTED_CELL_NOT_SIMPLE", "C p=2 f=1 n=2"),
        ("LISTED_BUT_PASSES", "C p=5 f=1 n=2"),
        ("LISTED_BUT_PASSES", "C p=11 f=1 n=2"),
        ("LISTED_BUT_PASSES", "C p=13 f=1 n=2"),
        ("LISTED_BUT_PASSES", "C p=17 f=1 n=2"),
        ("LISTED_BUT_PASSES", "C p=19 f=1 n=2"),
        ("LISTED_BUT_PASSES", "C p=23 f=1 n=2"),
        ("LISTED_BUT_PASSES", "C p=29 f=1 n=2"),
        ("UNLISTED_EXCEPTION", "C p=2 f=1 n=4"),
        ("LISTED_BUT_PASSES", "D p=2 f=1 n=3"),
        ("LISTED_BUT_PASSES", "D p=2 f=2 n=5"),
        ("LISTED_BUT_PASSES", "D p=5 f=1 n=4"),
        ("UNLISTED_EXCEPTION", "D p=2 f=3 n=3"),
        ("UNLISTED_EXCEPTION", "D p=3 f=1 n=3"),
        ("UNLISTED_EXCEPTION", "D p=7 f=1 n=3"),
        ("UNLISTED_EXCEPTION", "D p=31 f=1 n=3"),
        ("LISTED_BUT_PASSES", "2D p=3 f=2 n=4"),
        ("LISTED_BUT_PASSES", "2D p=5 f=2 n=4"),
        ("UNLISTED_EXCEPTION", "2D p=2 f=2 n=4"),
        ("UNLISTED_EXCEPTION", "2D p=2 f=2 n=5"),
        ("UNLISTED_EXCEPTION", "2D p=2 f=6 n=3"),
        ("UNLISTED_EXCEPTION", "2D p=7 f=2 n=3"),
        ("UNLISTED_EXCEPTION", "2D p=31 f=2 n=3"),
        ("LISTED_CELL_NOT_SIMPLE", "G2 p=2 f=1"),
        ("LISTED_BUT_PASSES", "G2 p=2 f=2"),
        ("UNLISTED_EXCEPTION", "G2 p=3 f=1"),
        ("UNLISTED_EXCEPTION", "G2 p=7 f=1"),
        ("UNLISTED_EXCEPTION", "G2 p=31 f=1"),
        ("LISTED_CELL_INVALID", "3D4 p=2 f=5"),
        ("LISTED_CELL_INVALID", "3D4 p=2 f=7"),
    ];
    let got: Vec<(&str, &str)> = report
        .findings
        .iter()
        .map(|f| (f.kind.as_str(), f.detail.as_str()))
        .collect();
    assert_eq!(got, expected, "frozen finding set");
    assert!(elapsed.as_secs() < 300, "took {elapsed:?}");
    println!(
        "[criterion 5] PASS: 14 families swept, {} differences reported as findings, in {elapsed:?}",
        expected.len()
    );
}

/// Criterion 6: a(G) ≤ 2^(n-1) over every subgroup of S_n for n ≤ 7,
/// with per-degree subgroup counts (S4 = 30 as the oracle self-check).
#[test]
fn criterion_06_prop41_exhaustive() {
    let start = Instant::now();
    let report = harness::scan_prop41(7, None).unwrap();
    let elapsed = start.elapsed();
    assert!(report.violations.is_empty(), "{}", report.to_json());
    // Subgroup counts: S4 = 30 is the stated oracle; the others agree
    // with the published subgroup counts of symmetric groups.
    let counts: Vec<&str> = report
        .stats
        .iter()
        .map(|s| s["subgroups"].as_str())
        .collect();
    assert_eq!(counts, vec!["2", "6", "30", "156", "1455", "11300"]);
    assert_eq!(report.checked, 2 + 6 + 30 + 156 + 1455 + 11300);
    assert!(elapsed.as_secs() < 600, "took {elapsed:?}");
    println!(
        "[criterion 6] PASS: {} subgroups checked with zero violations in {elapsed:?}",
        report.checked
    );
}

/// Criterion 7: a(G) bound over all completely reducible subgroups of
/// GL(2,2), GL(2,3), GL(3,2) and GL(2,5); the 3/2-exponent bound in odd
/// characteristic; zero violations.
#[test]
fn criterion_07_thm12_exhaustive() {
    let start = Instant::now();
    let report = harness::scan_thm12(&[(2, 2), (2, 3), (3, 2), (2, 5)]).unwrap();
    let elapsed = start.elapsed();
    assert!(report.violations.is_empty(), "{}", report.to_json());
    assert_eq!(report.stats.len(), 4);
    assert!(elapsed.as_secs() < 900, "took {elapsed:?}");
    println!(
        "[criterion 7] PASS: {} bound checks over four spaces with zero violations in {elapsed:?}",
        report.checked
    );
}

/// Criterion 8: over the same spaces, every subgroup H of every
/// completely reducible solvable G with 2∤|H| or 3∤|H| satisfies the
/// square bound, and odd |H| in odd characteristic satisfies the
/// 3/2-exponent bound; zero violations.
#[test]
fn criterion_08_prop21_exhaustive() {
    let start = Instant::now();
    let report = harness::scan_prop21(&[(2, 2), (2, 3), (3, 2), (2, 5)]).unwrap();
    let elapsed = start.elapsed();
    assert!(report.violations.is_empty(), "{}", report.to_json());
    assert!(report.checked > 0);
    println!(
        "[criterion 8] PASS: {} subgroup-order checks with zero violations in {elapsed:?}",
        report.checked
    );
}

/// Criterion 9 lives in tests/properties.rs (randomized suites, ≥ 200
/// instances each). This test is the cross-reference plus the exactness
/// spot-check that no floating point enters any verdict.
#[test]
fn criterion_09_bound_checks_are_exact() {
    // Margins of the algebraic bounds are exact integers.
    for (kind, lhs, base) in [
        (BoundKind::Two, 3u64, 4u64),
        (BoundKind::ThreeHalves, 3, 9),
        (BoundKind::Perm2Pow, 15, 5),
    ] {
        let r = check_bound(kind, &BigUint::from(lhs), &BigUint::from(base));
        assert!(matches!(r.margin, harness::Margin::Exact { .. }));
    }
    println!("[criterion 9] PASS: exact-arithmetic verdicts (randomized suites in properties.rs)");
}

/// Criterion 10: two consecutive runs of every campaign produce
/// byte-identical JSON reports.
#[test]
fn criterion_10_determinism() {
    let start = Instant::now();
    let runs: Vec<(&str, Box<dyn Fn() -> String>)> = vec![
        (
            "prop41",
            Box::new(|| harness::scan_prop41(7, None).unwrap().to_json()),
        ),
        (
            "prop41-sampled",
            Box::new(|| harness::scan_prop41(8, Some(10)).unwrap().to_json()),
        ),
        (
            "thm12",
            Box::new(|| harness::scan_thm12(harness::DEFAULT_SPACES).unwrap().to_json()),
        ),
        (
            "prop21",
            Box::new(|| harness::scan_prop21(harness::DEFAULT_SPACES).unwrap().to_json()),
        ),
        (
            "cor13",
            Box::new(|| {
                harness::scan_cor13(harness::DEFAULT_COR13_PAIRS)
                    .unwrap()
                    .to_json()
            }),
        ),
        ("table1", Box::new(|| lie::verify_table1().unwrap().to_json())),
        ("table2", Box::new(|| lie::verify_table2().unwrap().to_json())),
        (
            "table3",
            Box::new(|| lie::sweep_table3(32, 8).unwrap().to_json()),
        ),
        (
            "table4",
            Box::new(|| catalog::verify_table4(false).unwrap().to_json()),
        ),
    ];
    for (name, run) in runs {
        let first = run();
        let second = run();
        assert_eq!(first, second, "campaign {name} is not byte-identical");
    }
    println!(
        "[criterion 10] PASS: nine report kinds byte-identical across consecutive runs in {:?}",
        start.elapsed()
    );
}
