//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`).

mod common;

use std::collections::BTreeSet;
use std::process::Command;

use abstree::enumerate::{free_trees, trees_with_k_leaves};
use abstree::families::{make_path, make_star, tstar_family};
use abstree::indices::{abs_index, edge_type_histogram, IndexKind};
use abstree::verify::{lemma_suite, verify_theorem, LemmaId};

use common::prufer_census_codes;

const TOLERANCE: f64 = 1e-9;

/// Criterion 1: over the full grid 7 <= n <= 14, 3 <= k <= floor((n+2)/3),
/// the brute-force minimum equals the closed form within 1e-9 and the
/// minimizer code set equals the family code set exactly.
#[test]
fn criterion_1_minimum_matches_closed_form_on_the_grid() {
    let mut pairs = 0;
    for n in 7..=14usize {
        for k in 3..=n.div_ceil(3) {
            let report = verify_theorem(n, k, false).unwrap();
            assert!(report.verdict.passed(), "n={n} k={k}: {:?}", report.verdict);
            assert!((report.formula_value - report.bruteforce_min).abs() <= TOLERANCE);
            assert_eq!(report.argmin_codes, report.tstar_codes, "n={n} k={k}");
            pairs += 1;
        }
    }
    println!(
        "PASS criterion 1: closed-form minimum and exact minimizer sets on {pairs} (n,k) pairs"
    );
}

/// Criterion 2: the same bound holds over the degree-capped (chemical)
/// classes on the same grid.
#[test]
fn criterion_2_minimum_holds_over_chemical_trees() {
    let mut pairs = 0;
    for n in 7..=14usize {
        for k in 3..=n.div_ceil(3) {
            let report = verify_theorem(n, k, true).unwrap();
            assert!(
                report.verdict.passed(),
                "n={n} k={k} chemical: {:?}",
                report.verdict
            );
            assert!((report.formula_value - report.bruteforce_min).abs() <= TOLERANCE);
            pairs += 1;
        }
    }
    println!(
        "PASS criterion 2: closed-form minimum over max-degree-4 classes on {pairs} (n,k) pairs"
    );
}

/// Criterion 3: the generator census equals the independent Prufer-dedupe
/// oracle for n <= 9 and stays internally consistent for n = 10..12.
#[test]
fn criterion_3_enumeration_census() {
    for n in 4..=9usize {
        let generated: BTreeSet<_> = free_trees(n).unwrap().map(|t| t.canonical_code()).collect();
        let oracle = prufer_census_codes(n);
        assert_eq!(generated.len(), oracle.len(), "count mismatch at n={n}");
        assert_eq!(generated, oracle, "class mismatch at n={n}");
    }
    for n in 10..=12usize {
        let codes: Vec<_> = free_trees(n).unwrap().map(|t| t.canonical_code()).collect();
        let distinct: BTreeSet<_> = codes.iter().cloned().collect();
        assert_eq!(codes.len(), distinct.len(), "duplicate classes at n={n}");
        let partition: usize = (2..n)
            .map(|k| trees_with_k_leaves(n, k).unwrap().count())
            .sum();
        assert_eq!(partition, codes.len(), "leaf partition at n={n}");
    }
    println!(
        "PASS criterion 3: census equals the Prufer oracle (n <= 9) and is consistent to n = 12"
    );
}

/// Criterion 4: the per-edge term identity and the closed forms for paths
/// and stars, all to 1e-12.
#[test]
fn criterion_4_index_kernel() {
    for a in 1..=12usize {
        for b in a..=12usize {
            let direct = IndexKind::Abs.edge_term(a, b);
            let rewritten = (1.0 - 2.0 / (a as f64 + b as f64)).sqrt();
            assert!((direct - rewritten).abs() <= 1e-12, "a={a} b={b}");
        }
    }
    for n in 3..=50usize {
        let path_value = abs_index(&make_path(n).unwrap()).value;
        let path_formula = 2.0 * (1.0f64 / 3.0).sqrt() + (n as f64 - 3.0) * (0.5f64).sqrt();
        assert!((path_value - path_formula).abs() <= 1e-12, "path n={n}");
        let star_value = abs_index(&make_star(n).unwrap()).value;
        let star_formula = (n as f64 - 1.0) * ((n as f64 - 2.0) / n as f64).sqrt();
        assert!((star_value - star_formula).abs() <= 1e-12, "star n={n}");
    }
    println!("PASS criterion 4: per-edge identity and path/star closed forms to 1e-12");
}

/// Criterion 5: all six inequality suites hold on every qualifying instance
/// (grid for 2.1; every tree with n <= 12 and every transformation choice
/// for 2.2-2.5; every qualifying tree for 2.6).
#[test]
fn criterion_5_inequality_suites() {
    let grid = lemma_suite(LemmaId::GapMonotonicity, 1..=1).unwrap();
    assert_eq!(grid.len(), 6 * 170);
    assert!(grid.iter().all(|r| r.holds), "2.1 grid");

    let mut totals = Vec::new();
    for lemma in [
        LemmaId::ContractReattach,
        LemmaId::PendentShift,
        LemmaId::DegreeFourReplacement,
        LemmaId::HighDegreeReplacement,
        LemmaId::E2CountBound,
    ] {
        let records = lemma_suite(lemma, 1..=12).unwrap();
        assert!(!records.is_empty(), "{lemma}: no qualifying instances");
        for r in &records {
            assert!(
                r.holds,
                "{} violated at {} (lhs {:.12}, rhs {:.12})",
                r.lemma, r.instance, r.lhs, r.rhs
            );
        }
        totals.push(format!("{} on {} instances", lemma, records.len()));
    }
    println!(
        "PASS criterion 5: 2.1 grid and {} all hold",
        totals.join(", ")
    );
}

/// Criterion 6: every family member on the full valid grid with n <= 16 has
/// the expected edge-type histogram.
#[test]
fn criterion_6_extremal_histograms() {
    let mut members = 0;
    for n in 7..=16usize {
        for k in 3..=n.div_ceil(3) {
            for tree in tstar_family(n, k).unwrap() {
                let h = edge_type_histogram(&tree);
                assert_eq!(h.count(1, 2), k, "n={n} k={k}");
                assert_eq!(h.count(2, 2), n + 2 - 3 * k, "n={n} k={k}");
                assert_eq!(h.count(2, 3), k, "n={n} k={k}");
                assert_eq!(h.count(3, 3), k - 3, "n={n} k={k}");
                // the four types account for every edge
                assert_eq!(h.total(), n - 1, "n={n} k={k}");
                members += 1;
            }
        }
    }
    println!("PASS criterion 6: expected histograms for all {members} family members with n <= 16");
}

/// Criterion 7: verification output is byte-identical across thread counts.
#[test]
fn criterion_7_determinism_across_thread_counts() {
    let run = |threads: &str| {
        let output = Command::new(env!("CARGO_BIN_EXE_abstree"))
            .args(["verify", "--n", "12", "--k", "4", "--threads", threads])
            .output()
            .expect("binary runs");
        assert!(output.status.success(), "exit with --threads {threads}");
        output.stdout
    };
    let single = run("1");
    let parallel = run("8");
    assert_eq!(single, parallel, "stdout must not depend on thread count");
    assert!(!single.is_empty());
    println!("PASS criterion 7: byte-identical CSV with 1 and 8 threads");
}
