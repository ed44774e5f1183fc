//! `abstree` computes degree-based topological indices of trees - centrally
//! the atom-bond sum-connectivity (ABS) index - and verifies, by exhaustive
//! enumeration, that the minimum of the ABS index over all trees with `n`
//! vertices and `k` leaves matches its closed form, attained exactly by the
//! trees obtained from a `k`-leaf tree with 3-regular interior by
//! subdividing every pendent edge.
//!
//! # Example
//!
//! ```
//! use abstree::families::make_spider;
//! use abstree::indices::abs_index;
//! use abstree::verify::{formula_min_abs, verify_theorem};
//!
//! // the uniform spider is the unique minimizer for n = 7, k = 3
//! let spider = make_spider(&[2, 2, 2]).unwrap();
//! let value = abs_index(&spider).value;
//! assert!((value - formula_min_abs(7, 3).unwrap()).abs() < 1e-12);
//!
//! let report = verify_theorem(7, 3, false).unwrap();
//! assert!(report.verdict.passed());
//! assert!(report.argmin_codes.contains(&spider.canonical_code()));
//! ```
//!
//! The `examples/` directory walks through each capability; the `abstree`
//! binary exposes the same operations on the command line.

// Trees, degree queries, pendent paths
pub mod tree;

// Canonical isomorphism codes
pub mod canon;

// Edge-list text format
pub mod io;

// Edge-sum descriptors (ABS, Randic, sum-connectivity, harmonic, ABC)
pub mod indices;

// Free-tree enumeration
pub mod enumerate;

// Edge contraction, vertex splitting, 3-regular replacement
pub mod transforms;

// Named families, including the extremal one
pub mod families;

// Brute-force verification and inequality suites
pub mod verify;

// Command-line front end
pub mod cli;

pub use canon::CanonicalCode;
pub use indices::{EdgeTypeHistogram, IndexKind, IndexValue};
pub use tree::{PendentPath, Tree, TreeError};
