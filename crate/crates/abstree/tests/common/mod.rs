//! Brute-force oracles shared by the integration suites. Everything here is
//! deliberately independent of the library's generators: labeled trees come
//! from raw Prufer sequences and isomorphism from trying vertex bijections.
//!
//! Each integration binary compiles this module separately and uses a
//! different subset of it.
#![allow(dead_code)]

use std::collections::BTreeSet;

use abstree::canon::CanonicalCode;
use abstree::tree::Tree;

/// Decodes a Prufer sequence (length `n - 2`, entries in `0..n`) into a
/// labeled tree.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Tree {
    assert!(n >= 2 && seq.len() == n - 2);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf remains");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let mut last = (0..n).filter(|&u| degree[u] == 1);
    let a = last.next().expect("two vertices remain");
    let b = last.next().expect("two vertices remain");
    edges.push((a, b));
    Tree::from_edges(n, &edges).expect("Prufer sequences decode to trees")
}

/// Visits every labeled tree on `n` vertices once, via all `n^(n-2)` Prufer
/// sequences.
pub fn for_each_labeled_tree(n: usize, mut visit: impl FnMut(&Tree)) {
    if n == 1 {
        visit(&Tree::from_edges(1, &[]).unwrap());
        return;
    }
    if n == 2 {
        visit(&Tree::from_edges(2, &[(0, 1)]).unwrap());
        return;
    }
    let mut seq = vec![0usize; n - 2];
    loop {
        visit(&prufer_decode(n, &seq));
        // odometer in base n
        let mut pos = seq.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            seq[pos] += 1;
            if seq[pos] < n {
                break;
            }
            seq[pos] = 0;
        }
    }
}

/// Canonical codes of all isomorphism classes on `n` vertices, from the
/// Prufer sweep.
pub fn prufer_census_codes(n: usize) -> BTreeSet<CanonicalCode> {
    let mut codes = BTreeSet::new();
    for_each_labeled_tree(n, |t| {
        codes.insert(t.canonical_code());
    });
    codes
}

/// Isomorphism by exhausting vertex bijections; practical for `n <= 8`.
pub fn isomorphic_by_permutation(a: &Tree, b: &Tree) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() {
        return false;
    }
    let mut deg_a: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut deg_b: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    try_permutations(&mut perm, 0, &mut |p| {
        a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v]))
    })
}

fn try_permutations(
    perm: &mut Vec<usize>,
    k: usize,
    check: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if k == perm.len() {
        return check(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if try_permutations(perm, k + 1, check) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}

/// Applies a label permutation to a tree.
pub fn relabel(tree: &Tree, perm: &[usize]) -> Tree {
    let edges: Vec<(usize, usize)> = tree
        .edges()
        .iter()
        .map(|&(u, v)| (perm[u], perm[v]))
        .collect();
    Tree::from_edges(tree.vertex_count(), &edges).expect("relabeling preserves treeness")
}
