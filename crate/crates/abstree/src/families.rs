//! Constructors and enumerators for named tree families: paths, stars,
//! spiders, trees with 3-regular interior, and the extremal family obtained
//! from those by subdividing every pendent edge at least once.

use std::collections::BTreeMap;

use itertools::Itertools;
use thiserror::Error;

use crate::canon::CanonicalCode;
use crate::transforms::k3_regular_shapes;
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
}

/// The path on `n >= 1` vertices.
pub fn make_path(n: usize) -> Result<Tree, FamilyError> {
    if n < 1 {
        return Err(FamilyError::BadParameters("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Tree::from_edges(n, &edges).expect("path is a tree"))
}

/// The star on `n >= 1` vertices (center 0).
pub fn make_star(n: usize) -> Result<Tree, FamilyError> {
    if n < 1 {
        return Err(FamilyError::BadParameters("star needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Ok(Tree::from_edges(n, &edges).expect("star is a tree"))
}

/// A spider: one center (label 0) with at least 3 legs, the i-th a path of
/// `legs[i] >= 1` edges.
pub fn make_spider(legs: &[usize]) -> Result<Tree, FamilyError> {
    if legs.len() < 3 {
        return Err(FamilyError::BadParameters(format!(
            "spider needs at least 3 legs, got {}",
            legs.len()
        )));
    }
    if legs.contains(&0) {
        return Err(FamilyError::BadParameters(
            "legs must have length >= 1".into(),
        ));
    }
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Ok(Tree::from_edges(next, &edges).expect("spider is a tree"))
}

/// True when `(n, k)` admits members: `3 <= k <= floor((n + 2) / 3)`.
pub fn tstar_range_contains(n: usize, k: usize) -> bool {
    k >= 3 && 3 * k <= n + 2
}

/// All non-isomorphic trees on `n` vertices obtained from some `k`-leaf
/// 3-regular-interior tree by subdividing each pendent edge at least once,
/// sorted by canonical code.
///
/// Every member has `k` leaves, `n - 2k + 2` vertices of degree 2, and
/// `k - 2` of degree 3. Generation covers every base shape and every
/// composition of the `n - (2k - 2)` subdivision vertices into `k` positive
/// parts, then deduplicates by canonical code.
pub fn tstar_family(n: usize, k: usize) -> Result<Vec<Tree>, FamilyError> {
    if !tstar_range_contains(n, k) {
        return Err(FamilyError::OutOfRange(format!(
            "family is defined for 3 <= k <= floor((n+2)/3); got n={n}, k={k}"
        )));
    }
    let base_order = 2 * k - 2;
    let budget = n - base_order;
    let mut members: BTreeMap<CanonicalCode, Tree> = BTreeMap::new();
    for base in k3_regular_shapes(k).expect("k >= 3") {
        let pendent_edges: Vec<(usize, usize)> = base
            .pendent_vertices()
            .into_iter()
            .map(|leaf| (leaf, base.neighbors(leaf)[0]))
            .collect();
        debug_assert_eq!(pendent_edges.len(), k);
        // choose k - 1 cut points in 1..budget to split the budget into
        // k parts, each >= 1
        for cuts in (1..budget).combinations(k - 1) {
            let bounds: Vec<usize> = std::iter::once(0)
                .chain(cuts.iter().copied())
                .chain(std::iter::once(budget))
                .collect();
            let parts = bounds.windows(2).map(|w| w[1] - w[0]);
            let mut edges: Vec<(usize, usize)> = base
                .edges()
                .iter()
                .copied()
                .filter(|&(u, v)| base.degree(u) > 1 && base.degree(v) > 1)
                .collect();
            let mut next = base_order;
            for (&(leaf, anchor), extra) in pendent_edges.iter().zip(parts) {
                let mut prev = anchor;
                for _ in 0..extra {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
                edges.push((prev, leaf));
            }
            let tree = Tree::from_edges(next, &edges).expect("subdivision yields a tree");
            members.entry(tree.canonical_code()).or_insert(tree);
        }
    }
    Ok(members.into_values().collect())
}

/// Membership test matching the degree-theoretic characterization of the
/// subdivided family: maximum degree 3, the degree-3 vertices induce a
/// subtree, every pendent path has length at least 2, and the degree counts
/// are exactly `{1: k, 2: n - 2k + 2, 3: k - 2}` for `k` the leaf count.
pub fn is_tstar_member(tree: &Tree) -> bool {
    if tree.max_degree() != 3 {
        return false;
    }
    let n = tree.vertex_count();
    let k = tree.leaf_count();

    // degree-3 vertices induce a connected subgraph: in a tree this holds
    // exactly when the induced edge count is one less than the vertex count
    let degree_three: Vec<usize> = tree.vertices().filter(|&v| tree.degree(v) == 3).collect();
    let induced_edges = tree
        .edges()
        .iter()
        .filter(|&&(u, v)| tree.degree(u) == 3 && tree.degree(v) == 3)
        .count();
    if induced_edges + 1 != degree_three.len() {
        return false;
    }

    // pendent paths of length >= 2: no leaf touches a degree-3 vertex
    for leaf in tree.pendent_vertices() {
        if tree.degree(tree.neighbors(leaf)[0]) != 2 {
            return false;
        }
    }

    let counts = tree.degree_counts();
    let expected_two = n + 2 - 2 * k;
    counts.get(&1).copied().unwrap_or(0) == k
        && counts.get(&2).copied().unwrap_or(0) == expected_two
        && counts.get(&3).copied().unwrap_or(0) == k - 2
}

/// A named family plus its parameters, as selected on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyDescriptor {
    Path { n: usize },
    Star { n: usize },
    Spider { legs: Vec<usize> },
    KThreeRegular { k: usize },
    TStar { n: usize, k: usize },
}

impl FamilyDescriptor {
    /// Materializes the family members (singletons for path/star/spider).
    pub fn build(&self) -> Result<Vec<Tree>, FamilyError> {
        match self {
            FamilyDescriptor::Path { n } => Ok(vec![make_path(*n)?]),
            FamilyDescriptor::Star { n } => Ok(vec![make_star(*n)?]),
            FamilyDescriptor::Spider { legs } => Ok(vec![make_spider(legs)?]),
            FamilyDescriptor::KThreeRegular { k } => {
                k3_regular_shapes(*k).map_err(|e| FamilyError::BadParameters(e.to_string()))
            }
            FamilyDescriptor::TStar { n, k } => tstar_family(*n, *k),
        }
    }
}
