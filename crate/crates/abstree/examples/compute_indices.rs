//! Score a few small trees with every supported descriptor.
//!
//! Run with `cargo run --example compute_indices`.

use abstree::families::{make_path, make_spider, make_star};
use abstree::indices::{edge_type_histogram, tree_index, IndexKind};
use abstree::tree::Tree;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let samples: Vec<(&str, Tree)> = vec![
        ("P5 (path)", make_path(5)?),
        ("S6 (star)", make_star(6)?),
        ("spider 2,2,2", make_spider(&[2, 2, 2])?),
        ("spider 3,3,3", make_spider(&[3, 3, 3])?),
    ];

    let kinds = [
        IndexKind::Abs,
        IndexKind::Randic,
        IndexKind::SumConnectivity,
        IndexKind::GeneralSumConnectivity(-0.5),
        IndexKind::Harmonic,
        IndexKind::Abc,
    ];

    println!(
        "{:<14} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "tree", "abs", "randic", "sumconn", "gsc(-1/2)", "harmonic", "abc"
    );
    for (name, tree) in &samples {
        print!("{name:<14}");
        for kind in kinds {
            print!(" {:>12.9}", tree_index(tree, kind).value);
        }
        println!();
    }

    // the histogram is the sufficient statistic behind every column above
    let spider = make_spider(&[3, 3, 3])?;
    println!("\nedge-type histogram of spider 3,3,3:");
    for ((a, b), count) in edge_type_histogram(&spider).iter() {
        println!("  degrees ({a}, {b}): {count} edge(s)");
    }
    Ok(())
}
