//! Immutable labeled trees with structural queries.
//!
//! A [`Tree`] is an undirected, connected, acyclic graph on vertices
//! `0..n`. Construction validates everything once; afterwards the tree is
//! immutable and every query is a pure function, so values can be shared
//! freely across threads.

use std::collections::BTreeMap;

use thiserror::Error;

/// Errors raised while building a [`Tree`] from an edge list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    /// A vertex label is outside `0..n`.
    #[error("vertex label {label} out of range for {n} vertices")]
    BadLabel { label: usize, n: usize },
    /// The same unordered edge appears twice.
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    /// An edge joins a vertex to itself.
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    /// The edge list does not describe a single connected acyclic graph.
    #[error("not a tree: {0}")]
    NotATree(String),
}

/// An unlabeled-isomorphism-friendly tree on vertices `0..n`.
///
/// Invariants established at construction:
/// * exactly `n - 1` edges, connected (hence acyclic);
/// * no self-loops, no duplicate edges;
/// * `n >= 1`.
///
/// Edges are stored normalized (`u < v`) in sorted order and neighbor
/// lists are sorted, so two equal trees compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Tree {
    /// Builds a validated tree on `n` vertices from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree, TreeError> {
        if n == 0 {
            return Err(TreeError::NotATree("a tree has at least one vertex".into()));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(TreeError::BadLabel { label: u, n });
            }
            if v >= n {
                return Err(TreeError::BadLabel { label: v, n });
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        for pair in normalized.windows(2) {
            if pair[0] == pair[1] {
                return Err(TreeError::DuplicateEdge(pair[0].0, pair[0].1));
            }
        }
        if normalized.len() != n - 1 {
            return Err(TreeError::NotATree(format!(
                "{} vertices require {} edges, got {}",
                n,
                n - 1,
                normalized.len()
            )));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let tree = Tree {
            adjacency,
            edges: normalized,
        };
        // With n - 1 edges, connectivity is equivalent to acyclicity.
        if tree.reachable_from_zero() != n {
            return Err(TreeError::NotATree("graph is disconnected".into()));
        }
        Ok(tree)
    }

    fn reachable_from_zero(&self) -> usize {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Vertices as the range `0..n`.
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    /// Edges, normalized `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Maximum degree; 0 for the single-vertex tree.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Map `degree -> number of vertices of that degree`, zero counts omitted.
    pub fn degree_counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for nbrs in &self.adjacency {
            *counts.entry(nbrs.len()).or_insert(0) += 1;
        }
        counts
    }

    /// Vertices of degree 1, ascending.
    pub fn pendent_vertices(&self) -> Vec<usize> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn leaf_count(&self) -> usize {
        self.vertices().filter(|&v| self.degree(v) == 1).count()
    }

    /// Edges whose endpoints both have degree 2.
    pub fn e2_edges(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| self.degree(u) == 2 && self.degree(v) == 2)
            .collect()
    }

    /// The maximal pendent path starting at each leaf, ordered by leaf label.
    ///
    /// A pendent path runs from a leaf through degree-2 vertices to the first
    /// vertex of degree at least 3. A tree with maximum degree below 3 has no
    /// such terminating vertex, so paths and stars of length <= 2 yield an
    /// empty list.
    pub fn pendent_paths(&self) -> Vec<PendentPath> {
        if self.max_degree() < 3 {
            return Vec::new();
        }
        self.pendent_vertices()
            .into_iter()
            .map(|leaf| {
                let mut vertices = vec![leaf];
                let mut prev = None;
                let mut cur = leaf;
                while self.degree(cur) < 3 {
                    let next = self.adjacency[cur]
                        .iter()
                        .copied()
                        .find(|&w| Some(w) != prev)
                        .expect("interior pendent-path vertex has a forward neighbor");
                    prev = Some(cur);
                    cur = next;
                    vertices.push(cur);
                }
                PendentPath { vertices }
            })
            .collect()
    }
}

impl std::fmt::Debug for Tree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tree(n={}, edges={:?})", self.vertex_count(), self.edges)
    }
}

/// A path `v_0 v_1 ... v_s` with `d(v_0) = 1`, `d(v_s) >= 3`, and every
/// interior vertex of degree 2. `s >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendentPath {
    vertices: Vec<usize>,
}

impl PendentPath {
    /// All vertices from the leaf to the anchor, in walk order.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// The degree-1 endpoint `v_0`.
    pub fn leaf(&self) -> usize {
        self.vertices[0]
    }

    /// The degree >= 3 endpoint `v_s`.
    pub fn anchor(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// The path length `s` in edges.
    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Edges of the path, normalized `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Tree {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Tree::from_edges(n, &edges).unwrap()
    }

    fn star(n: usize) -> Tree {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Tree::from_edges(n, &edges).unwrap()
    }

    fn spider(legs: &[usize]) -> Tree {
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
        Tree::from_edges(next, &edges).unwrap()
    }

    #[test]
    fn smallest_trees_build() {
        let p2 = Tree::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(p2.vertex_count(), 2);
        let p3 = Tree::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.degree(1), 2);
        let k1 = Tree::from_edges(1, &[]).unwrap();
        assert_eq!(k1.max_degree(), 0);
    }

    #[test]
    fn disconnected_is_rejected() {
        let err = Tree::from_edges(4, &[(0, 1), (2, 3)]).unwrap_err();
        assert!(matches!(err, TreeError::NotATree(_)));
    }

    #[test]
    fn wrong_edge_count_is_rejected() {
        let err = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap_err();
        assert!(matches!(err, TreeError::NotATree(_)));
        let err = Tree::from_edges(3, &[(0, 1)]).unwrap_err();
        assert!(matches!(err, TreeError::NotATree(_)));
    }

    #[test]
    fn bad_labels_and_loops_are_rejected() {
        assert_eq!(
            Tree::from_edges(3, &[(0, 1), (1, 5)]).unwrap_err(),
            TreeError::BadLabel { label: 5, n: 3 }
        );
        assert_eq!(
            Tree::from_edges(3, &[(0, 1), (1, 1)]).unwrap_err(),
            TreeError::SelfLoop(1)
        );
        assert_eq!(
            Tree::from_edges(3, &[(0, 1), (1, 0)]).unwrap_err(),
            TreeError::DuplicateEdge(0, 1)
        );
    }

    #[test]
    fn degree_counts_match_known_trees() {
        assert_eq!(star(5).degree_counts(), BTreeMap::from([(1, 4), (4, 1)]));
        assert_eq!(path(5).degree_counts(), BTreeMap::from([(1, 2), (2, 3)]));
        let sp = spider(&[2, 2, 2]);
        assert_eq!(sp.vertex_count(), 7);
        assert_eq!(sp.degree_counts(), BTreeMap::from([(1, 3), (2, 3), (3, 1)]));
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        for t in [path(9), star(9), spider(&[3, 1, 4])] {
            let total: usize = t.vertices().map(|v| t.degree(v)).sum();
            assert_eq!(total, 2 * (t.vertex_count() - 1));
        }
    }

    #[test]
    fn pendent_vertices_of_named_trees() {
        assert_eq!(path(6).pendent_vertices(), vec![0, 5]);
        assert_eq!(star(6).pendent_vertices(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn pendent_paths_on_spider() {
        let sp = spider(&[2, 2, 2]);
        let paths = sp.pendent_paths();
        assert_eq!(paths.len(), 3);
        for p in &paths {
            assert_eq!(p.edge_count(), 2);
            assert_eq!(p.anchor(), 0);
            assert_eq!(sp.degree(p.leaf()), 1);
        }
    }

    #[test]
    fn pendent_paths_of_star_have_length_one() {
        let s4 = star(4);
        let paths = s4.pendent_paths();
        assert_eq!(paths.len(), 3);
        assert!(paths.iter().all(|p| p.edge_count() == 1 && p.anchor() == 0));
    }

    #[test]
    fn paths_have_no_pendent_paths() {
        assert!(path(6).pendent_paths().is_empty());
        assert!(path(2).pendent_paths().is_empty());
    }

    #[test]
    fn e2_edges_of_named_trees() {
        assert_eq!(path(5).e2_edges(), vec![(1, 2), (2, 3)]);
        assert!(star(7).e2_edges().is_empty());
        // legs (3,3,1): one interior degree-2 pair per long leg
        assert_eq!(spider(&[3, 3, 1]).e2_edges().len(), 2);
    }

    #[test]
    fn degree_two_vertices_lie_on_at_most_one_pendent_path() {
        let t = spider(&[3, 2, 1]);
        let paths = t.pendent_paths();
        let mut seen = BTreeMap::new();
        for p in &paths {
            for &v in &p.vertices()[..p.vertices().len() - 1] {
                if t.degree(v) == 2 {
                    *seen.entry(v).or_insert(0) += 1;
                }
            }
        }
        assert!(seen.values().all(|&c| c == 1));
    }
}
