//! Exhaustive generation of non-isomorphic free trees.
//!
//! The generator walks canonical level sequences with a successor function
//! (the Wright-Richmond-Odlyzko-McKay scheme on top of Beyer-Hedetniemi
//! rooted-tree succession), producing exactly one representative per
//! isomorphism class in constant amortized time and a fixed deterministic
//! order. An independent Prufer-sequence oracle in the test suite
//! cross-checks the census at small orders.
//!
//! A level sequence lists vertex depths in preorder with the root at depth
//! 0; [`layout_to_tree`] recovers the tree by matching each vertex to the
//! nearest shallower predecessor.

use thiserror::Error;

use crate::tree::Tree;

/// Largest supported vertex count. Beyond this the census grows past what
/// exhaustive downstream sweeps can consume anyway.
pub const MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("out of range: {0}")]
    OutOfRange(String),
}

/// Constraints for an enumeration run: vertex count, optional exact leaf
/// count, optional maximum-degree cap (4 selects chemical trees).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: usize,
    pub leaf_count: Option<usize>,
    pub max_degree: Option<usize>,
}

impl EnumSpec {
    pub fn validate(&self) -> Result<(), EnumerateError> {
        if self.n < 1 || self.n > MAX_VERTICES {
            return Err(EnumerateError::OutOfRange(format!(
                "vertex count must lie in 1..={MAX_VERTICES}, got {}",
                self.n
            )));
        }
        if let Some(k) = self.leaf_count {
            if k < 2 || k > self.n - 1 {
                return Err(EnumerateError::OutOfRange(format!(
                    "leaf count must lie in 2..={} for {} vertices, got {k}",
                    self.n - 1,
                    self.n
                )));
            }
        }
        Ok(())
    }

    /// The stream of trees matching this spec, in generator order.
    pub fn trees(&self) -> Result<impl Iterator<Item = Tree>, EnumerateError> {
        self.validate()?;
        let spec = *self;
        Ok(FreeTrees::new(spec.n).filter(move |t| {
            spec.leaf_count.is_none_or(|k| t.leaf_count() == k)
                && spec.max_degree.is_none_or(|d| t.max_degree() <= d)
        }))
    }
}

/// All non-isomorphic trees on `n` vertices, one per isomorphism class.
pub fn free_trees(n: usize) -> Result<FreeTrees, EnumerateError> {
    EnumSpec {
        n,
        leaf_count: None,
        max_degree: None,
    }
    .validate()?;
    Ok(FreeTrees::new(n))
}

/// Non-isomorphic trees on `n` vertices with exactly `k` leaves.
pub fn trees_with_k_leaves(
    n: usize,
    k: usize,
) -> Result<impl Iterator<Item = Tree>, EnumerateError> {
    EnumSpec {
        n,
        leaf_count: Some(k),
        max_degree: None,
    }
    .trees()
}

/// Non-isomorphic trees on `n` vertices with `k` leaves and maximum degree
/// at most 4.
pub fn chemical_trees(n: usize, k: usize) -> Result<impl Iterator<Item = Tree>, EnumerateError> {
    EnumSpec {
        n,
        leaf_count: Some(k),
        max_degree: Some(4),
    }
    .trees()
}

/// Iterator over canonical free-tree level sequences for a fixed order.
pub struct FreeTrees {
    layout: Option<Vec<usize>>,
    single_pending: bool,
}

impl FreeTrees {
    fn new(n: usize) -> Self {
        if n == 1 {
            return FreeTrees {
                layout: None,
                single_pending: true,
            };
        }
        // the path graph rooted at its center
        let layout = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
        FreeTrees {
            layout: Some(layout),
            single_pending: false,
        }
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.single_pending {
            self.single_pending = false;
            return Some(Tree::from_edges(1, &[]).expect("single vertex"));
        }
        let layout = self.layout.take()?;
        let layout = next_free_layout(layout);
        let tree = layout_to_tree(&layout);
        self.layout = next_rooted_layout(&layout, None);
        Some(tree)
    }
}

/// Splits a layout into the root's first principal subtree (depths shifted
/// up by one) and the remainder of the tree.
fn split_layout(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut ones = layout.iter().enumerate().filter(|&(_, &d)| d == 1);
    ones.next();
    let m = ones.next().map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&d| d - 1).collect();
    let rest = std::iter::once(0)
        .chain(layout[m..].iter().copied())
        .collect();
    (left, rest)
}

/// Beyer-Hedetniemi successor of a rooted level sequence, or `None` after
/// the last (the star). `p` overrides the rightmost-deep-vertex search.
fn next_rooted_layout(predecessor: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = p.unwrap_or_else(|| {
        let mut p = predecessor.len() - 1;
        while predecessor[p] == 1 {
            p -= 1;
        }
        p
    });
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while predecessor[q] != predecessor[p] - 1 {
        q -= 1;
    }
    let mut result = predecessor.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

/// Accepts `candidate` if it is the canonical form of a free tree, i.e. the
/// first principal subtree is no taller, no larger, and no later
/// lexicographically than the rest; otherwise jumps directly to the next
/// canonical sequence.
fn next_free_layout(candidate: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split_layout(&candidate);
    let left_height = *left.iter().max().expect("nontrivial layout");
    let rest_height = *rest.iter().max().expect("rest contains the root");
    let valid = if rest_height < left_height {
        false
    } else if rest_height == left_height {
        !(left.len() > rest.len() || (left.len() == rest.len() && left > rest))
    } else {
        true
    };
    if valid {
        return candidate;
    }
    let p = left.len();
    let mut next =
        next_rooted_layout(&candidate, Some(p)).expect("jump target below the last layout");
    if candidate[p] > 2 {
        let (new_left, _) = split_layout(&next);
        let height = *new_left.iter().max().expect("nontrivial layout");
        let tail = next.len() - (height + 1);
        for (offset, depth) in (1..=height + 1).enumerate() {
            next[tail + offset] = depth;
        }
    }
    next
}

/// Rebuilds the tree from a preorder level sequence.
fn layout_to_tree(layout: &[usize]) -> Tree {
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (i, &depth) in layout.iter().enumerate() {
        while stack.last().is_some_and(|&j| layout[j] >= depth) {
            stack.pop();
        }
        if let Some(&j) = stack.last() {
            edges.push((j, i));
        }
        stack.push(i);
    }
    Tree::from_edges(layout.len(), &edges).expect("level sequence describes a tree")
}
