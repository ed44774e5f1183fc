//! Local tree rewrites: edge contraction, vertex splitting, and replacement
//! of a high-degree vertex by a 3-regular-interior tree, plus the composite
//! moves built from them.
//!
//! All operations are total functions returning new validated trees. Labels
//! stay contiguous: whenever a vertex disappears, higher labels shift down
//! and the operation reports the old-to-new label map.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::enumerate::free_trees;
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    BadVertex { vertex: usize, n: usize },
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("bad neighbor partition: {0}")]
    BadPartition(String),
    #[error("bad arity: {0}")]
    BadArity(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("bad leaf assignment: {0}")]
    BadAssignment(String),
}

/// How to split a vertex: `left` and `right` must partition its neighbor
/// set with both sides nonempty. After the split the original label keeps
/// `left`, a new vertex adjacent to it takes `right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitSpec {
    pub vertex: usize,
    pub left: BTreeSet<usize>,
    pub right: BTreeSet<usize>,
}

impl SplitSpec {
    /// Builds a spec from the left side only; the right side becomes the
    /// remaining neighbors of `vertex` in `tree`.
    pub fn from_left(
        tree: &Tree,
        vertex: usize,
        left: impl IntoIterator<Item = usize>,
    ) -> Result<SplitSpec, TransformError> {
        if vertex >= tree.vertex_count() {
            return Err(TransformError::BadVertex {
                vertex,
                n: tree.vertex_count(),
            });
        }
        let left: BTreeSet<usize> = left.into_iter().collect();
        let right: BTreeSet<usize> = tree
            .neighbors(vertex)
            .iter()
            .copied()
            .filter(|w| !left.contains(w))
            .collect();
        Ok(SplitSpec {
            vertex,
            left,
            right,
        })
    }
}

/// Contracts the edge `(u, v)`, identifying its endpoints.
///
/// The higher label disappears; the merged vertex keeps the lower label's
/// position and all labels above the removed one shift down. Returns the new
/// tree together with the total old-to-new label map (both endpoints map to
/// the merged vertex).
pub fn contract_edge(
    tree: &Tree,
    edge: (usize, usize),
) -> Result<(Tree, Vec<usize>), TransformError> {
    let n = tree.vertex_count();
    let (u, v) = edge;
    if u >= n || v >= n || !tree.has_edge(u, v) {
        return Err(TransformError::NotAnEdge(u, v));
    }
    let keep = u.min(v);
    let gone = u.max(v);
    let map: Vec<usize> = (0..n)
        .map(|x| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        })
        .collect();
    let edges: Vec<(usize, usize)> = tree
        .edges()
        .iter()
        .filter(|&&e| e != (keep, gone))
        .map(|&(p, q)| (map[p], map[q]))
        .collect();
    let contracted =
        Tree::from_edges(n - 1, &edges).expect("contracting a tree edge yields a tree");
    Ok((contracted, map))
}

/// Contracts several edges in sequence, composing the label maps. Each edge
/// is named by labels of the original tree.
pub fn contract_edges(
    tree: &Tree,
    edges: &[(usize, usize)],
) -> Result<(Tree, Vec<usize>), TransformError> {
    let mut current = tree.clone();
    let mut map: Vec<usize> = (0..tree.vertex_count()).collect();
    for &(u, v) in edges {
        if u >= map.len() || v >= map.len() || map[u] == map[v] {
            return Err(TransformError::NotAnEdge(u, v));
        }
        let (next, step) = contract_edge(&current, (map[u], map[v]))?;
        for entry in &mut map {
            *entry = step[*entry];
        }
        current = next;
    }
    Ok((current, map))
}

/// Splits `spec.vertex` into two adjacent vertices. The original label keeps
/// the `left` neighbors, the new vertex (label `n`) takes the `right` ones.
pub fn split_vertex(tree: &Tree, spec: &SplitSpec) -> Result<Tree, TransformError> {
    let n = tree.vertex_count();
    let v = spec.vertex;
    if v >= n {
        return Err(TransformError::BadVertex { vertex: v, n });
    }
    if spec.left.is_empty() || spec.right.is_empty() {
        return Err(TransformError::BadPartition(
            "both sides must be nonempty".into(),
        ));
    }
    if !spec.left.is_disjoint(&spec.right) {
        return Err(TransformError::BadPartition("sides overlap".into()));
    }
    let neighbors: BTreeSet<usize> = tree.neighbors(v).iter().copied().collect();
    let union: BTreeSet<usize> = spec.left.union(&spec.right).copied().collect();
    if union != neighbors {
        return Err(TransformError::BadPartition(format!(
            "sides must cover the neighbors of {v} exactly"
        )));
    }
    let mut edges = Vec::with_capacity(n);
    for &(p, q) in tree.edges() {
        if p == v && spec.right.contains(&q) {
            edges.push((n, q));
        } else if q == v && spec.right.contains(&p) {
            edges.push((p, n));
        } else {
            edges.push((p, q));
        }
    }
    edges.push((v, n));
    Ok(Tree::from_edges(n + 1, &edges).expect("splitting a vertex yields a tree"))
}

/// Appends a new leaf (label `n`) adjacent to `v`.
pub fn attach_leaf(tree: &Tree, v: usize) -> Result<Tree, TransformError> {
    let n = tree.vertex_count();
    if v >= n {
        return Err(TransformError::BadVertex { vertex: v, n });
    }
    let mut edges = tree.edges().to_vec();
    edges.push((v, n));
    Ok(Tree::from_edges(n + 1, &edges).expect("attaching a leaf yields a tree"))
}

/// True when every non-leaf vertex has degree exactly 3 and the tree has at
/// least 3 leaves.
pub fn is_k3_regular(tree: &Tree) -> bool {
    tree.leaf_count() >= 3 && tree.vertices().all(|v| matches!(tree.degree(v), 1 | 3))
}

/// All non-isomorphic trees with `s` leaves whose internal vertices all have
/// degree 3 (each has `2s - 2` vertices), sorted by canonical code.
///
/// Such a tree is determined by its internal tree: any tree on `s - 2`
/// vertices with maximum degree at most 3, with `3 - deg` leaves attached to
/// each internal vertex.
pub fn k3_regular_shapes(s: usize) -> Result<Vec<Tree>, TransformError> {
    if s < 3 {
        return Err(TransformError::BadArity(format!(
            "a 3-regular-interior tree needs at least 3 leaves, got {s}"
        )));
    }
    let internal_order = s - 2;
    let internal_trees = free_trees(internal_order)
        .map_err(|e| TransformError::BadArity(format!("leaf count {s} unsupported: {e}")))?;
    let mut shapes: Vec<Tree> = internal_trees
        .filter(|t| t.max_degree() <= 3)
        .map(|internal| {
            let mut edges = internal.edges().to_vec();
            let mut next = internal_order;
            for w in internal.vertices() {
                for _ in internal.degree(w)..3 {
                    edges.push((w, next));
                    next += 1;
                }
            }
            Tree::from_edges(next, &edges).expect("leaf attachment yields a tree")
        })
        .collect();
    shapes.sort_by_key(|t| t.canonical_code());
    Ok(shapes)
}

/// The member of [`k3_regular_shapes`] whose internal tree is a path; the
/// default shape for [`replace_with_3regular_default`].
pub fn k3_regular_path_shape(s: usize) -> Result<Tree, TransformError> {
    if s < 3 {
        return Err(TransformError::BadArity(format!(
            "a 3-regular-interior tree needs at least 3 leaves, got {s}"
        )));
    }
    let internal = s - 2;
    let mut edges: Vec<(usize, usize)> = (1..internal).map(|i| (i - 1, i)).collect();
    let mut next = internal;
    for w in 0..internal {
        let degree = match (internal, w) {
            (1, _) => 0,
            (_, 0) => 1,
            (_, w) if w == internal - 1 => 1,
            _ => 2,
        };
        for _ in degree..3 {
            edges.push((w, next));
            next += 1;
        }
    }
    Ok(Tree::from_edges(next, &edges).expect("path backbone shape is a tree"))
}

/// Replaces a vertex `v` of degree `s >= 4` by `shape`, an `s`-leaf tree
/// with 3-regular interior. `assignment` maps each leaf of `shape` to a
/// distinct neighbor of `v`; the leaf is identified with that neighbor, so
/// every old neighbor keeps its degree and the inserted internal vertices
/// all have degree 3. The result has `n + s - 3` vertices.
///
/// Labels: `v` disappears (higher labels shift down); the internal vertices
/// of `shape` are appended at the end in ascending shape-label order.
pub fn replace_with_3regular(
    tree: &Tree,
    v: usize,
    shape: &Tree,
    assignment: &BTreeMap<usize, usize>,
) -> Result<Tree, TransformError> {
    let n = tree.vertex_count();
    if v >= n {
        return Err(TransformError::BadVertex { vertex: v, n });
    }
    let s = tree.degree(v);
    if s < 4 {
        return Err(TransformError::BadArity(format!(
            "replacement needs degree >= 4, vertex {v} has degree {s}"
        )));
    }
    if !is_k3_regular(shape) || shape.leaf_count() != s {
        return Err(TransformError::ShapeMismatch(format!(
            "shape must have {s} leaves and 3-regular interior"
        )));
    }
    let shape_leaves: BTreeSet<usize> = shape.pendent_vertices().into_iter().collect();
    let assigned_leaves: BTreeSet<usize> = assignment.keys().copied().collect();
    if assigned_leaves != shape_leaves {
        return Err(TransformError::BadAssignment(
            "keys must be exactly the shape's leaves".into(),
        ));
    }
    let neighbors: BTreeSet<usize> = tree.neighbors(v).iter().copied().collect();
    let assigned_neighbors: BTreeSet<usize> = assignment.values().copied().collect();
    if assigned_neighbors != neighbors || assignment.len() != neighbors.len() {
        return Err(TransformError::BadAssignment(format!(
            "values must be exactly the neighbors of {v}, each once"
        )));
    }

    let old_map = |x: usize| if x > v { x - 1 } else { x };
    let internal: Vec<usize> = shape.vertices().filter(|&w| shape.degree(w) == 3).collect();
    let internal_map: BTreeMap<usize, usize> = internal
        .iter()
        .enumerate()
        .map(|(rank, &w)| (w, n - 1 + rank))
        .collect();

    let mut edges: Vec<(usize, usize)> = tree
        .edges()
        .iter()
        .filter(|&&(p, q)| p != v && q != v)
        .map(|&(p, q)| (old_map(p), old_map(q)))
        .collect();
    for &(p, q) in shape.edges() {
        match (internal_map.get(&p), internal_map.get(&q)) {
            (Some(&a), Some(&b)) => edges.push((a, b)),
            (Some(&a), None) => edges.push((a, old_map(assignment[&q]))),
            (None, Some(&b)) => edges.push((old_map(assignment[&p]), b)),
            (None, None) => unreachable!("shape edge between two leaves"),
        }
    }
    let grown = n + s - 3;
    Ok(Tree::from_edges(grown, &edges).expect("replacement yields a tree"))
}

/// [`replace_with_3regular`] with the path-backbone shape and the default
/// assignment: neighbors ordered by descending degree (ties by ascending
/// label) are matched to the shape's leaves in ascending label order.
pub fn replace_with_3regular_default(tree: &Tree, v: usize) -> Result<Tree, TransformError> {
    let n = tree.vertex_count();
    if v >= n {
        return Err(TransformError::BadVertex { vertex: v, n });
    }
    let s = tree.degree(v);
    if s < 4 {
        return Err(TransformError::BadArity(format!(
            "replacement needs degree >= 4, vertex {v} has degree {s}"
        )));
    }
    let shape = k3_regular_path_shape(s)?;
    let mut neighbors: Vec<usize> = tree.neighbors(v).to_vec();
    neighbors.sort_by_key(|&w| (std::cmp::Reverse(tree.degree(w)), w));
    let assignment: BTreeMap<usize, usize> = shape
        .pendent_vertices()
        .into_iter()
        .zip(neighbors)
        .collect();
    replace_with_3regular(tree, v, &shape, &assignment)
}
