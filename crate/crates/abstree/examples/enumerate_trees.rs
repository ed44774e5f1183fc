//! Walk the free-tree census and break one order down by leaf count.
//!
//! Run with `cargo run --example enumerate_trees`.

use abstree::enumerate::{chemical_trees, free_trees, trees_with_k_leaves};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("non-isomorphic trees by vertex count:");
    for n in 1..=14usize {
        println!("  n = {n:>2}: {}", free_trees(n)?.count());
    }

    let n = 10;
    println!("\nn = {n}, by leaf count (all / max degree 4):");
    for k in 2..n {
        let all = trees_with_k_leaves(n, k)?.count();
        let chemical = chemical_trees(n, k)?.count();
        println!("  k = {k}: {all:>4} / {chemical:>4}");
    }

    println!("\nthe three 7-vertex trees with 3 leaves:");
    for tree in trees_with_k_leaves(7, 3)? {
        println!("  edges {:?}  code {}", tree.edges(), tree.canonical_code());
    }
    Ok(())
}
