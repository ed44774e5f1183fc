//! Empirical verification of the extremal result: the closed-form minimum
//! of the atom-bond sum-connectivity index over trees with `n` vertices and
//! `k` leaves, the identification of the minimizers with the subdivided
//! 3-regular-interior family, and the six supporting inequality suites.
//!
//! Everything here is brute force by design: trees are enumerated
//! exhaustively, transformations are applied with every admissible choice,
//! and inequalities are checked instance by instance.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::canon::CanonicalCode;
use crate::enumerate::{EnumSpec, EnumerateError};
use crate::families::{tstar_family, tstar_range_contains};
use crate::indices::abs_index;
use crate::transforms::{
    attach_leaf, contract_edge, contract_edges, k3_regular_shapes, replace_with_3regular,
    replace_with_3regular_default,
};
use crate::tree::Tree;

/// Default acceptance tolerance for comparing index values.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Absolute tolerance for declaring two trees tied at the minimum.
const TIE_TOLERANCE: f64 = 1e-9;
/// Strict inequalities must win by more than this margin.
const STRICT_MARGIN: f64 = 1e-9;
/// Non-strict inequalities may lose by at most this floating-point slack.
const NONSTRICT_SLACK: f64 = 1e-12;

const CHUNK: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("empty class: {0}")]
    EmptyClass(String),
    #[error("unknown lemma id `{0}`")]
    UnknownLemma(String),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

/// The closed-form minimum of the index over trees with `n` vertices and
/// `k` leaves, valid for `3 <= k <= floor((n + 2) / 3)`:
///
/// `k (sqrt(1/3) + sqrt(3/5)) + (n - 3k + 2) sqrt(1/2) + (k - 3) sqrt(2/3)`
pub fn formula_min_abs(n: usize, k: usize) -> Result<f64, VerifyError> {
    if !tstar_range_contains(n, k) {
        return Err(VerifyError::OutOfRange(format!(
            "formula requires 3 <= k <= floor((n+2)/3); got n={n}, k={k}"
        )));
    }
    let k_f = k as f64;
    Ok(k_f * ((1.0f64 / 3.0).sqrt() + (3.0f64 / 5.0).sqrt())
        + (n + 2 - 3 * k) as f64 * (0.5f64).sqrt()
        + (k_f - 3.0) * (2.0f64 / 3.0).sqrt())
}

fn class_stream(
    n: usize,
    k: usize,
    chemical: bool,
) -> Result<impl Iterator<Item = Tree>, EnumerateError> {
    EnumSpec {
        n,
        leaf_count: Some(k),
        max_degree: chemical.then_some(4),
    }
    .trees()
}

/// Exhaustive minimum of the index over all non-isomorphic trees with `n`
/// vertices and `k` leaves (restricted to maximum degree 4 when `chemical`),
/// together with the canonical codes of every tree within the tie tolerance
/// of the minimum.
///
/// Works for any enumerable class, including pairs outside the closed-form
/// range. The scan parallelizes over the installed thread pool; the result
/// is independent of thread count.
pub fn min_abs_bruteforce(
    n: usize,
    k: usize,
    chemical: bool,
) -> Result<(f64, BTreeSet<CanonicalCode>), VerifyError> {
    let mut minimum = f64::INFINITY;
    let mut stream = class_stream(n, k, chemical)?;
    loop {
        let chunk: Vec<Tree> = stream.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let local = chunk
            .par_iter()
            .map(|t| abs_index(t).value)
            .reduce(|| f64::INFINITY, f64::min);
        minimum = minimum.min(local);
    }
    if minimum.is_infinite() {
        return Err(VerifyError::EmptyClass(format!(
            "no trees with n={n}, k={k}{}",
            if chemical { ", max degree 4" } else { "" }
        )));
    }
    let mut argmin = BTreeSet::new();
    for tree in class_stream(n, k, chemical)? {
        if abs_index(&tree).value <= minimum + TIE_TOLERANCE {
            argmin.insert(tree.canonical_code());
        }
    }
    Ok((minimum, argmin))
}

/// Outcome of one `(n, k)` verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { reason: String },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Fail { .. } => f.write_str("fail"),
        }
    }
}

/// Full record of one `(n, k)` verification run.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub n: usize,
    pub k: usize,
    pub chemical: bool,
    pub formula_value: f64,
    pub bruteforce_min: f64,
    pub argmin_codes: BTreeSet<CanonicalCode>,
    pub tstar_codes: BTreeSet<CanonicalCode>,
    pub tolerance: f64,
    pub verdict: Verdict,
}

/// Verifies one `(n, k)` pair at the default tolerance.
pub fn verify_theorem(
    n: usize,
    k: usize,
    chemical: bool,
) -> Result<VerificationReport, VerifyError> {
    verify_theorem_with_tolerance(n, k, chemical, DEFAULT_TOLERANCE)
}

/// Checks that the brute-force minimum matches the closed form within
/// `tolerance` and that the minimizers are exactly the subdivided family.
/// `(n, k)` must lie in the closed-form range.
pub fn verify_theorem_with_tolerance(
    n: usize,
    k: usize,
    chemical: bool,
    tolerance: f64,
) -> Result<VerificationReport, VerifyError> {
    let formula_value = formula_min_abs(n, k)?;
    let (bruteforce_min, argmin_codes) = min_abs_bruteforce(n, k, chemical)?;
    let tstar_codes: BTreeSet<CanonicalCode> = tstar_family(n, k)
        .expect("range already checked")
        .iter()
        .map(Tree::canonical_code)
        .collect();
    let verdict = if (formula_value - bruteforce_min).abs() > tolerance {
        Verdict::Fail {
            reason: format!(
                "formula {formula_value:.12} deviates from brute-force minimum {bruteforce_min:.12}"
            ),
        }
    } else if argmin_codes != tstar_codes {
        Verdict::Fail {
            reason: format!(
                "minimizer set ({} trees) differs from the expected family ({} trees)",
                argmin_codes.len(),
                tstar_codes.len()
            ),
        }
    } else {
        Verdict::Pass
    };
    Ok(VerificationReport {
        n,
        k,
        chemical,
        formula_value,
        bruteforce_min,
        argmin_codes,
        tstar_codes,
        tolerance,
        verdict,
    })
}

/// Identifier of one of the six inequality suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LemmaId {
    /// 2.1 - the gap `sqrt(1 - 2/(x+k)) - sqrt(1 - 2/x)` decreases in `x`.
    GapMonotonicity,
    /// 2.2 - contracting an edge at an interior degree-2 vertex and
    /// re-attaching a leaf never increases the index.
    ContractReattach,
    /// 2.3 - contracting a degree-(2,2) edge and growing a pendent path at a
    /// leaf on a branch vertex strictly decreases the index.
    PendentShift,
    /// 2.4 - replacing a qualifying degree-4 vertex by the 4-leaf shape
    /// after one contraction strictly decreases the index.
    DegreeFourReplacement,
    /// 2.5 - replacing a qualifying degree-s vertex by an s-leaf shape after
    /// s - 3 contractions strictly decreases the index.
    HighDegreeReplacement,
    /// 2.6 - when all degree-(2,2) edges lie on pendent paths, their count
    /// is at least `sum over i >= 4 of (i - 3) n_i`.
    E2CountBound,
}

impl LemmaId {
    pub const ALL: [LemmaId; 6] = [
        LemmaId::GapMonotonicity,
        LemmaId::ContractReattach,
        LemmaId::PendentShift,
        LemmaId::DegreeFourReplacement,
        LemmaId::HighDegreeReplacement,
        LemmaId::E2CountBound,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaId::GapMonotonicity => "2.1",
            LemmaId::ContractReattach => "2.2",
            LemmaId::PendentShift => "2.3",
            LemmaId::DegreeFourReplacement => "2.4",
            LemmaId::HighDegreeReplacement => "2.5",
            LemmaId::E2CountBound => "2.6",
        }
    }
}

impl std::fmt::Display for LemmaId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for LemmaId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<LemmaId, VerifyError> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| VerifyError::UnknownLemma(s.to_string()))
    }
}

/// One checked instance of an inequality suite.
#[derive(Debug, Clone)]
pub struct LemmaCheckRecord {
    pub lemma: LemmaId,
    /// Deterministic instance description (tree code plus chosen vertices,
    /// edges, and assignments). Contains no commas.
    pub instance: String,
    pub lhs: f64,
    pub rhs: f64,
    pub strict: bool,
    pub holds: bool,
}

/// Runs one inequality suite over every qualifying instance among the trees
/// whose vertex count lies in `n_range` (ignored for the grid suite 2.1),
/// sweeping all transformation choices (all assignments up to degree 6).
pub fn lemma_suite(
    lemma: LemmaId,
    n_range: RangeInclusive<usize>,
) -> Result<Vec<LemmaCheckRecord>, VerifyError> {
    match lemma {
        LemmaId::GapMonotonicity => Ok(gap_monotonicity_records()),
        LemmaId::ContractReattach => sweep(n_range, contract_reattach_records),
        LemmaId::PendentShift => sweep(n_range, pendent_shift_records),
        LemmaId::DegreeFourReplacement => sweep(n_range, degree_four_records),
        LemmaId::HighDegreeReplacement => sweep(n_range, high_degree_records),
        LemmaId::E2CountBound => sweep(n_range, e2_bound_records),
    }
}

fn sweep(
    n_range: RangeInclusive<usize>,
    per_tree: fn(&Tree) -> Vec<LemmaCheckRecord>,
) -> Result<Vec<LemmaCheckRecord>, VerifyError> {
    let mut records = Vec::new();
    for n in n_range {
        let stream = EnumSpec {
            n,
            leaf_count: None,
            max_degree: None,
        }
        .trees()?;
        for tree in stream {
            records.extend(per_tree(&tree));
        }
    }
    Ok(records)
}

/// The decreasing gap: `sqrt(1 - 2/(x + k)) - sqrt(1 - 2/x)`.
pub fn degree_gap(x: f64, k: f64) -> f64 {
    (1.0 - 2.0 / (x + k)).sqrt() - (1.0 - 2.0 / x).sqrt()
}

fn gap_monotonicity_records() -> Vec<LemmaCheckRecord> {
    let mut records = Vec::new();
    for k in 1..=6u32 {
        // x = 3.0, 3.1, ..., 20.0 without accumulating rounding drift
        for tenths in 30..200u32 {
            let x = f64::from(tenths) / 10.0;
            let x_next = f64::from(tenths + 1) / 10.0;
            let lhs = degree_gap(x, f64::from(k));
            let rhs = degree_gap(x_next, f64::from(k));
            records.push(LemmaCheckRecord {
                lemma: LemmaId::GapMonotonicity,
                instance: format!("k={k};x={x:.1}->{x_next:.1}"),
                lhs,
                rhs,
                strict: true,
                holds: lhs > rhs,
            });
        }
    }
    records
}

fn instance_prefix(tree: &Tree) -> String {
    format!("n={};tree={}", tree.vertex_count(), tree.canonical_code())
}

fn contract_reattach_records(tree: &Tree) -> Vec<LemmaCheckRecord> {
    let mut records = Vec::new();
    let before = abs_index(tree).value;
    let prefix = instance_prefix(tree);
    let leaves = tree.pendent_vertices();
    for v in tree.vertices().filter(|&v| tree.degree(v) == 2) {
        if tree.neighbors(v).iter().any(|&u| tree.degree(u) < 2) {
            continue;
        }
        for &u in tree.neighbors(v) {
            let (contracted, map) =
                contract_edge(tree, (v, u)).expect("neighboring vertices share an edge");
            for &leaf in &leaves {
                let rewired =
                    attach_leaf(&contracted, map[leaf]).expect("label map stays in range");
                let after = abs_index(&rewired).value;
                records.push(LemmaCheckRecord {
                    lemma: LemmaId::ContractReattach,
                    instance: format!("{prefix};v={v};edge={v}-{u};leaf={leaf}"),
                    lhs: before,
                    rhs: after,
                    strict: false,
                    holds: before >= after - NONSTRICT_SLACK,
                });
            }
        }
    }
    records
}

fn pendent_shift_records(tree: &Tree) -> Vec<LemmaCheckRecord> {
    let e2 = tree.e2_edges();
    if e2.is_empty() {
        return Vec::new();
    }
    let mut records = Vec::new();
    let before = abs_index(tree).value;
    let prefix = instance_prefix(tree);
    for leaf in tree.pendent_vertices() {
        if tree.degree(tree.neighbors(leaf)[0]) < 3 {
            continue;
        }
        for &(a, b) in &e2 {
            let (contracted, map) = contract_edge(tree, (a, b)).expect("listed edge exists");
            let rewired = attach_leaf(&contracted, map[leaf]).expect("label map stays in range");
            let after = abs_index(&rewired).value;
            records.push(LemmaCheckRecord {
                lemma: LemmaId::PendentShift,
                instance: format!("{prefix};pendent={leaf};e2={a}-{b}"),
                lhs: before,
                rhs: after,
                strict: true,
                holds: before > after + STRICT_MARGIN,
            });
        }
    }
    records
}

fn degree_four_records(tree: &Tree) -> Vec<LemmaCheckRecord> {
    let e2 = tree.e2_edges();
    if e2.is_empty() {
        return Vec::new();
    }
    let shapes = k3_regular_shapes(4).expect("4 >= 3");
    let mut records = Vec::new();
    let before = abs_index(tree).value;
    let prefix = instance_prefix(tree);
    for v in tree.vertices().filter(|&v| tree.degree(v) == 4) {
        let mut degrees: Vec<usize> = tree.neighbors(v).iter().map(|&u| tree.degree(u)).collect();
        degrees.sort_unstable();
        if degrees[2] > 3 || degrees[3] > 5 {
            continue;
        }
        for &(a, b) in &e2 {
            let (contracted, map) = contract_edge(tree, (a, b)).expect("listed edge exists");
            let site = map[v];
            records.extend(replacement_records(
                LemmaId::DegreeFourReplacement,
                &contracted,
                site,
                &shapes,
                true,
                before,
                &format!("{prefix};v={v};e2={a}-{b}"),
            ));
        }
    }
    records
}

fn high_degree_records(tree: &Tree) -> Vec<LemmaCheckRecord> {
    let e2 = tree.e2_edges();
    let mut records = Vec::new();
    let before = abs_index(tree).value;
    let prefix = instance_prefix(tree);
    for v in tree.vertices().filter(|&v| tree.degree(v) >= 5) {
        let s = tree.degree(v);
        if e2.len() < s - 3 {
            continue;
        }
        let mut degrees: Vec<usize> = tree.neighbors(v).iter().map(|&u| tree.degree(u)).collect();
        degrees.sort_unstable();
        let second_largest = degrees[s - 2];
        let case = if second_largest <= 3 {
            "i"
        } else if s >= 12 && second_largest <= 4 {
            "ii"
        } else {
            continue;
        };
        let shapes = k3_regular_shapes(s).expect("s >= 5");
        for combo in e2.iter().copied().combinations(s - 3) {
            let (contracted, map) = contract_edges(tree, &combo).expect("disjoint degree-2 pairs");
            let site = map[v];
            let combo_label = combo.iter().map(|(a, b)| format!("{a}-{b}")).join(".");
            records.extend(replacement_records(
                LemmaId::HighDegreeReplacement,
                &contracted,
                site,
                &shapes,
                s <= 6,
                before,
                &format!("{prefix};v={v};case={case};e2={combo_label}"),
            ));
        }
    }
    records
}

/// Replacement instances at `site`: one record per shape and, when
/// `sweep_assignments`, per bijection of shape leaves onto the neighbors.
fn replacement_records(
    lemma: LemmaId,
    tree: &Tree,
    site: usize,
    shapes: &[Tree],
    sweep_assignments: bool,
    before: f64,
    prefix: &str,
) -> Vec<LemmaCheckRecord> {
    let mut records = Vec::new();
    let neighbors: Vec<usize> = tree.neighbors(site).to_vec();
    for (shape_idx, shape) in shapes.iter().enumerate() {
        let leaves = shape.pendent_vertices();
        if sweep_assignments {
            for perm in neighbors.iter().copied().permutations(neighbors.len()) {
                let assignment = leaves.iter().copied().zip(perm.iter().copied()).collect();
                let replaced = replace_with_3regular(tree, site, shape, &assignment)
                    .expect("validated replacement site");
                let after = abs_index(&replaced).value;
                records.push(LemmaCheckRecord {
                    lemma,
                    instance: format!(
                        "{prefix};shape={shape_idx};assign={}",
                        perm.iter().join(".")
                    ),
                    lhs: before,
                    rhs: after,
                    strict: true,
                    holds: before > after + STRICT_MARGIN,
                });
            }
        } else {
            let replaced =
                replace_with_3regular_default(tree, site).expect("validated replacement site");
            let after = abs_index(&replaced).value;
            records.push(LemmaCheckRecord {
                lemma,
                instance: format!("{prefix};shape=default;assign=default"),
                lhs: before,
                rhs: after,
                strict: true,
                holds: before > after + STRICT_MARGIN,
            });
        }
    }
    records
}

fn e2_bound_records(tree: &Tree) -> Vec<LemmaCheckRecord> {
    let n = tree.vertex_count();
    let k = tree.leaf_count();
    if !tstar_range_contains(n, k) {
        return Vec::new();
    }
    let e2: BTreeSet<(usize, usize)> = tree.e2_edges().into_iter().collect();
    let on_pendent_paths: BTreeSet<(usize, usize)> = tree
        .pendent_paths()
        .iter()
        .flat_map(|p| p.edges().collect::<Vec<_>>())
        .collect();
    if !e2.is_subset(&on_pendent_paths) {
        return Vec::new();
    }
    let excess: usize = tree
        .degree_counts()
        .into_iter()
        .filter(|&(degree, _)| degree >= 4)
        .map(|(degree, count)| (degree - 3) * count)
        .sum();
    vec![LemmaCheckRecord {
        lemma: LemmaId::E2CountBound,
        instance: instance_prefix(tree),
        lhs: e2.len() as f64,
        rhs: excess as f64,
        strict: false,
        holds: e2.len() >= excess,
    }]
}

/// Slack of the split-based reduction of a degree-`r` vertex:
///
/// `sqrt(1/2) + (r-1) sqrt((r+2)/(r+4)) - 3 sqrt(3/4) - (r-3) sqrt(r/(r+2))`
///
/// A nonnegative value certifies that the contract-then-split move strictly
/// decreases the index at that degree. Holds for `r >= 7` but not at
/// `r = 6`.
pub fn psi(r: f64) -> f64 {
    (0.5f64).sqrt() + (r - 1.0) * ((r + 2.0) / (r + 4.0)).sqrt()
        - 3.0 * (0.75f64).sqrt()
        - (r - 3.0) * (r / (r + 2.0)).sqrt()
}
