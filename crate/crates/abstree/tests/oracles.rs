//! Cross-module invariants checked against independent brute-force oracles.

mod common;

use std::collections::BTreeSet;

use abstree::enumerate::{free_trees, trees_with_k_leaves};
use abstree::families::{is_tstar_member, tstar_family, tstar_range_contains};
use abstree::indices::{abs_index, tree_index, IndexKind};
use abstree::transforms::{contract_edge, split_vertex, SplitSpec};
use abstree::tree::Tree;

use common::{for_each_labeled_tree, isomorphic_by_permutation, prufer_census_codes, relabel};

use proptest::prelude::*;

/// Equal codes must mean isomorphic and distinct codes non-isomorphic, with
/// isomorphism decided by trying all vertex bijections.
#[test]
fn canonical_codes_agree_with_permutation_isomorphism_up_to_8() {
    for n in 1..=8usize {
        let representatives: Vec<Tree> = free_trees(n).unwrap().collect();
        // distinct classes must get distinct codes and fail the bijection test
        for (i, a) in representatives.iter().enumerate() {
            for b in &representatives[i + 1..] {
                assert_ne!(a.canonical_code(), b.canonical_code(), "n={n}");
                assert!(!isomorphic_by_permutation(a, b), "n={n}");
            }
        }
        // relabelings must keep the code and pass the bijection test
        for tree in &representatives {
            for perm in deterministic_permutations(n) {
                let image = relabel(tree, &perm);
                assert_eq!(tree.canonical_code(), image.canonical_code(), "n={n}");
                assert!(isomorphic_by_permutation(tree, &image), "n={n}");
            }
        }
    }
}

fn deterministic_permutations(n: usize) -> Vec<Vec<usize>> {
    let reverse: Vec<usize> = (0..n).rev().collect();
    let rotate: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let stride: Vec<usize> = {
        // multiply by a unit mod n when possible, else swap halves
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let j = (i * 2 + 1) % n;
            if seen[j] {
                return vec![reverse, rotate];
            }
            seen[j] = true;
            out.push(j);
        }
        out
    };
    vec![reverse, rotate, stride]
}

/// The generator must reproduce the Prufer-dedupe census exactly.
#[test]
fn generator_census_equals_prufer_census_up_to_8() {
    for n in 1..=8usize {
        let generated: BTreeSet<_> = free_trees(n).unwrap().map(|t| t.canonical_code()).collect();
        assert_eq!(generated, prufer_census_codes(n), "n={n}");
    }
}

#[test]
fn leaf_counts_partition_the_census_up_to_14() {
    for n in 3..=14usize {
        let total = free_trees(n).unwrap().count();
        let partition: usize = (2..n)
            .map(|k| trees_with_k_leaves(n, k).unwrap().count())
            .sum();
        assert_eq!(partition, total, "n={n}");
    }
}

/// Contracting an interior edge and splitting the merged vertex with the
/// original neighbor partition must recover the tree. Pendent edges are
/// excluded: re-creating a leaf would need an empty side, which a split
/// forbids.
#[test]
fn contract_then_split_round_trips_on_interior_edges_up_to_8() {
    let mut checked = 0usize;
    for n in 3..=8usize {
        for tree in free_trees(n).unwrap() {
            for &(u, v) in tree.edges() {
                if tree.degree(u) < 2 || tree.degree(v) < 2 {
                    continue;
                }
                let u_side: Vec<usize> = tree
                    .neighbors(u)
                    .iter()
                    .copied()
                    .filter(|&w| w != v)
                    .collect();
                let (contracted, map) = contract_edge(&tree, (u, v)).unwrap();
                let spec =
                    SplitSpec::from_left(&contracted, map[u], u_side.into_iter().map(|w| map[w]))
                        .unwrap();
                let rebuilt = split_vertex(&contracted, &spec).unwrap();
                assert_eq!(
                    rebuilt.canonical_code(),
                    tree.canonical_code(),
                    "n={n} edge=({u},{v})"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 50, "the sweep should cover many interior edges");
}

/// The constructive family and the degree-theoretic membership test must
/// select the same trees out of the full census.
#[test]
fn family_equals_membership_filter_up_to_14() {
    for n in 7..=14usize {
        for k in 3..=n.div_ceil(3) {
            assert!(tstar_range_contains(n, k));
            let family: BTreeSet<_> = tstar_family(n, k)
                .unwrap()
                .iter()
                .map(Tree::canonical_code)
                .collect();
            let filtered: BTreeSet<_> = trees_with_k_leaves(n, k)
                .unwrap()
                .filter(is_tstar_member)
                .map(|t| t.canonical_code())
                .collect();
            assert_eq!(family, filtered, "n={n} k={k}");
            assert!(!family.is_empty(), "n={n} k={k}");
        }
    }
}

#[test]
fn general_sum_connectivity_at_minus_half_matches_sum_connectivity_up_to_12() {
    for n in 1..=12usize {
        for tree in free_trees(n).unwrap() {
            let general = tree_index(&tree, IndexKind::GeneralSumConnectivity(-0.5)).value;
            let plain = tree_index(&tree, IndexKind::SumConnectivity).value;
            assert!((general - plain).abs() < 1e-12, "n={n}");
        }
    }
}

proptest! {
    /// Random labeled trees from random Prufer sequences: structural
    /// invariants and isomorphism invariance of codes and index values.
    #[test]
    fn random_trees_satisfy_structural_invariants(
        (n, seq, perm_seed) in (3usize..=16)
            .prop_flat_map(|n| {
                (
                    Just(n),
                    proptest::collection::vec(0..n, n - 2),
                    proptest::collection::vec(proptest::num::u64::ANY, n),
                )
            })
    ) {
        let tree = common::prufer_decode(n, &seq);
        let degree_sum: usize = tree.vertices().map(|v| tree.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * (n - 1));

        // histogram totals count every edge
        let histogram = abstree::indices::edge_type_histogram(&tree);
        prop_assert_eq!(histogram.total(), n - 1);

        // sort vertices by the seed to get a random-ish permutation
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (perm_seed[v], v));
        let mut perm = vec![0usize; n];
        for (target, &source) in order.iter().enumerate() {
            perm[source] = target;
        }
        let image = relabel(&tree, &perm);
        prop_assert_eq!(tree.canonical_code(), image.canonical_code());
        prop_assert_eq!(abs_index(&tree).value, abs_index(&image).value);
    }

    /// Pendent paths cover each degree-2 vertex at most once, their interior
    /// vertices all have degree 2, and a degree-2 vertex lies on one exactly
    /// when walking away from it on one side reaches a leaf before any
    /// branch vertex.
    #[test]
    fn pendent_paths_are_disjoint_and_well_formed(
        (n, seq) in (4usize..=14)
            .prop_flat_map(|n| (Just(n), proptest::collection::vec(0..n, n - 2)))
    ) {
        let tree = common::prufer_decode(n, &seq);
        let paths = tree.pendent_paths();
        if tree.max_degree() < 3 {
            prop_assert!(paths.is_empty());
        } else {
            prop_assert_eq!(paths.len(), tree.leaf_count());
            let mut interior_seen = std::collections::BTreeSet::new();
            for path in &paths {
                prop_assert!(tree.degree(path.leaf()) == 1);
                prop_assert!(tree.degree(path.anchor()) >= 3);
                for &v in &path.vertices()[1..path.vertices().len() - 1] {
                    prop_assert_eq!(tree.degree(v), 2);
                    prop_assert!(interior_seen.insert(v), "vertex {} on two paths", v);
                }
            }
            // independent membership characterization
            let reaches_leaf_cleanly = |start: usize, first: usize| {
                let (mut prev, mut cur) = (start, first);
                loop {
                    match tree.degree(cur) {
                        1 => return true,
                        2 => {
                            let next = tree
                                .neighbors(cur)
                                .iter()
                                .copied()
                                .find(|&w| w != prev)
                                .unwrap();
                            prev = cur;
                            cur = next;
                        }
                        _ => return false,
                    }
                }
            };
            for v in tree.vertices().filter(|&v| tree.degree(v) == 2) {
                let on_some_path = tree
                    .neighbors(v)
                    .iter()
                    .any(|&w| reaches_leaf_cleanly(v, w));
                prop_assert_eq!(interior_seen.contains(&v), on_some_path, "vertex {}", v);
            }
        }
    }
}

/// Census spot check at a mid scale: the n = 9..=12 counts the generator
/// reports stay stable across the leaf filter.
#[test]
fn labeled_tree_oracle_visits_cayley_many_trees() {
    let mut count = 0usize;
    for_each_labeled_tree(6, |_| count += 1);
    assert_eq!(count, 6usize.pow(4), "Cayley's count for n = 6");
}
