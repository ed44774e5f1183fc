//! Degree-based edge-sum descriptors.
//!
//! Every index in this module depends on an edge only through the unordered
//! degree pair of its endpoints, so the [`EdgeTypeHistogram`] is a sufficient
//! statistic: evaluation sums `count * term(a, b)` over the histogram. This
//! also lets callers score arbitrary graphs by supplying a histogram
//! directly, without going through [`Tree`].
//!
//! Per-edge terms for endpoint degrees `a <= b`:
//!
//! | kind                      | term                    |
//! |---------------------------|-------------------------|
//! | atom-bond sum-connectivity| `sqrt((a+b-2)/(a+b))`   |
//! | Randic                    | `1/sqrt(a*b)`           |
//! | sum-connectivity          | `1/sqrt(a+b)`           |
//! | general sum-connectivity  | `(a+b)^alpha`           |
//! | harmonic                  | `2/(a+b)`               |
//! | atom-bond connectivity    | `sqrt((a+b-2)/(a*b))`   |
//!
//! With degrees >= 1 no term is ever degenerate; the `(1,1)` edge simply
//! contributes 0 to the two atom-bond variants.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    /// A histogram entry mentions a degree of 0.
    #[error("degree pair ({0}, {1}) contains a zero degree")]
    ZeroDegree(usize, usize),
}

/// The descriptor to evaluate. `GeneralSumConnectivity` carries its real
/// exponent, which must be finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IndexKind {
    Abs,
    Randic,
    SumConnectivity,
    GeneralSumConnectivity(f64),
    Harmonic,
    Abc,
}

impl IndexKind {
    /// Short machine-readable name used in CLI and CSV output.
    pub fn label(&self) -> &'static str {
        match self {
            IndexKind::Abs => "abs",
            IndexKind::Randic => "randic",
            IndexKind::SumConnectivity => "sumconn",
            IndexKind::GeneralSumConnectivity(_) => "gensumconn",
            IndexKind::Harmonic => "harmonic",
            IndexKind::Abc => "abc",
        }
    }

    /// Contribution of a single edge with endpoint degrees `a` and `b`.
    pub fn edge_term(&self, a: usize, b: usize) -> f64 {
        let (a, b) = (a as f64, b as f64);
        match *self {
            IndexKind::Abs => ((a + b - 2.0) / (a + b)).sqrt(),
            IndexKind::Randic => 1.0 / (a * b).sqrt(),
            IndexKind::SumConnectivity => 1.0 / (a + b).sqrt(),
            IndexKind::GeneralSumConnectivity(alpha) => (a + b).powf(alpha),
            IndexKind::Harmonic => 2.0 / (a + b),
            IndexKind::Abc => ((a + b - 2.0) / (a * b)).sqrt(),
        }
    }
}

/// A computed descriptor value tagged with its kind.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexValue {
    pub kind: IndexKind,
    pub value: f64,
}

/// Multiset of unordered endpoint-degree pairs `{a, b}` with counts.
///
/// Built from a tree it holds exactly `n - 1` edges; built by hand it can
/// describe any graph with positive degrees.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeTypeHistogram {
    counts: BTreeMap<(usize, usize), usize>,
}

impl EdgeTypeHistogram {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `count` edges whose endpoints have degrees `a` and `b`.
    pub fn insert(&mut self, a: usize, b: usize, count: usize) -> Result<(), IndexError> {
        if a == 0 || b == 0 {
            return Err(IndexError::ZeroDegree(a, b));
        }
        if count > 0 {
            *self.counts.entry((a.min(b), a.max(b))).or_insert(0) += count;
        }
        Ok(())
    }

    /// Builds a histogram from one degree pair per edge.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, IndexError> {
        let mut h = Self::new();
        for (a, b) in pairs {
            h.insert(a, b, 1)?;
        }
        Ok(h)
    }

    /// Count of edges with degree pair `{a, b}`.
    pub fn count(&self, a: usize, b: usize) -> usize {
        self.counts.get(&(a.min(b), a.max(b))).copied().unwrap_or(0)
    }

    /// Entries in ascending pair order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.counts.iter().map(|(&pair, &count)| (pair, count))
    }

    /// Total number of edges described.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Pointwise sum of two histograms.
    pub fn merge(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&pair, &count) in &other.counts {
            *out.counts.entry(pair).or_insert(0) += count;
        }
        out
    }
}

/// The degree-pair histogram over all edges of `tree`.
pub fn edge_type_histogram(tree: &Tree) -> EdgeTypeHistogram {
    EdgeTypeHistogram::from_pairs(
        tree.edges()
            .iter()
            .map(|&(u, v)| (tree.degree(u), tree.degree(v))),
    )
    .expect("tree degrees are positive")
}

/// Evaluates a descriptor over a histogram.
///
/// Entries are consumed in ascending pair order and totals use compensated
/// summation, so results are bit-stable across runs and thread counts.
pub fn index_value(histogram: &EdgeTypeHistogram, kind: IndexKind) -> IndexValue {
    let mut sum = KahanSum::new();
    for ((a, b), count) in histogram.iter() {
        sum.add(count as f64 * kind.edge_term(a, b));
    }
    IndexValue {
        kind,
        value: sum.total(),
    }
}

/// Atom-bond sum-connectivity index of a tree.
pub fn abs_index(tree: &Tree) -> IndexValue {
    tree_index(tree, IndexKind::Abs)
}

/// Any descriptor of a tree, via its edge-type histogram.
pub fn tree_index(tree: &Tree, kind: IndexKind) -> IndexValue {
    index_value(&edge_type_histogram(tree), kind)
}

/// Kahan-compensated accumulator.
struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    fn new() -> Self {
        KahanSum {
            sum: 0.0,
            compensation: 0.0,
        }
    }

    fn add(&mut self, term: f64) {
        let y = term - self.compensation;
        let t = self.sum + y;
        self.compensation = (t - self.sum) - y;
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum
    }
}
