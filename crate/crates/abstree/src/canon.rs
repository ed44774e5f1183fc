//! Isomorphism-invariant canonical codes for trees.
//!
//! The code is an AHU-style parenthesis string computed at the tree center.
//! Unicentral trees encode as `1` followed by the canonical rooted string of
//! the center; bicentral trees split at the central edge, encode both rooted
//! halves, and take the lexicographically smaller concatenation after a `2`.
//! Two trees receive equal codes exactly when they are isomorphic.

use crate::tree::Tree;

/// Canonical key of a tree's isomorphism class.
///
/// Codes are plain ASCII over `{1, 2, (, )}`, totally ordered, and stable
/// across runs, so they can serve as deterministic set keys.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }
}

impl std::fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalCode({})", self.0)
    }
}

impl Tree {
    /// The 1 or 2 central vertices (middle of every longest path), found by
    /// repeatedly trimming leaves.
    pub fn centers(&self) -> Vec<usize> {
        let n = self.vertex_count();
        if n <= 2 {
            return (0..n).collect();
        }
        let mut degree: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let mut layer: Vec<usize> = self.vertices().filter(|&v| degree[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                degree[v] = 0;
                for &w in self.neighbors(v) {
                    if degree[w] > 1 {
                        degree[w] -= 1;
                        if degree[w] == 1 {
                            next.push(w);
                        }
                    }
                }
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }

    /// Canonical isomorphism-class code; see the module docs for the scheme.
    pub fn canonical_code(&self) -> CanonicalCode {
        let centers = self.centers();
        match centers[..] {
            [c] => CanonicalCode(format!("1{}", self.rooted_code(c, None))),
            [a, b] => {
                let blocked = Some((a, b));
                let code_a = self.rooted_code(a, blocked);
                let code_b = self.rooted_code(b, blocked);
                let joined = if code_a <= code_b {
                    format!("2{code_a}{code_b}")
                } else {
                    format!("2{code_b}{code_a}")
                };
                CanonicalCode(joined)
            }
            _ => unreachable!("a tree has one or two centers"),
        }
    }

    /// AHU string of the component containing `root`, never crossing the
    /// `blocked` edge. Children codes are sorted before concatenation, so the
    /// result depends only on the rooted isomorphism class.
    fn rooted_code(&self, root: usize, blocked: Option<(usize, usize)>) -> String {
        let n = self.vertex_count();
        let crosses = |u: usize, v: usize| {
            blocked
                .map(|(a, b)| (u, v) == (a, b) || (u, v) == (b, a))
                .unwrap_or(false)
        };
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        parent[root] = root;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in self.neighbors(v) {
                if w != parent[v] && !crosses(v, w) && parent[w] == usize::MAX {
                    parent[w] = v;
                    order.push(w);
                }
            }
        }
        let mut codes: Vec<String> = vec![String::new(); n];
        for &v in order.iter().rev() {
            let mut children: Vec<&str> = self
                .neighbors(v)
                .iter()
                .filter(|&&w| parent[w] == v && w != v)
                .map(|&w| codes[w].as_str())
                .collect();
            children.sort_unstable();
            let mut code =
                String::with_capacity(2 + children.iter().map(|c| c.len()).sum::<usize>());
            code.push('(');
            for child in children {
                code.push_str(child);
            }
            code.push(')');
            codes[v] = code;
        }
        std::mem::take(&mut codes[root])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelings_of_p4_agree() {
        let a = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Tree::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(a.canonical_code(), b.canonical_code());
    }

    #[test]
    fn p4_and_s4_differ() {
        let p4 = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let s4 = Tree::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(p4.canonical_code(), s4.canonical_code());
    }

    #[test]
    fn centers_of_paths() {
        let p5 = Tree::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(p5.centers(), vec![2]);
        let p6 = Tree::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(p6.centers(), vec![2, 3]);
        let k1 = Tree::from_edges(1, &[]).unwrap();
        assert_eq!(k1.centers(), vec![0]);
    }

    #[test]
    fn all_relabelings_of_a_six_vertex_tree_share_one_code() {
        // the spider with legs (2,2,1)
        let base = [(0usize, 1), (1, 2), (0, 3), (3, 4), (0, 5)];
        let mut codes = std::collections::BTreeSet::new();
        let mut perm = [0usize, 1, 2, 3, 4, 5];
        permute(&mut perm, 0, &mut |p| {
            let edges: Vec<_> = base.iter().map(|&(u, v)| (p[u], p[v])).collect();
            codes.insert(Tree::from_edges(6, &edges).unwrap().canonical_code());
        });
        assert_eq!(codes.len(), 1);
    }

    fn permute(items: &mut [usize; 6], k: usize, visit: &mut impl FnMut(&[usize; 6])) {
        if k == items.len() {
            visit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, visit);
            items.swap(k, i);
        }
    }
}
