//! Build the named families, including the extremal family of subdivided
//! 3-regular-interior trees, and inspect their structure.
//!
//! Run with `cargo run --example tree_families`.

use abstree::families::{is_tstar_member, make_spider, tstar_family};
use abstree::indices::{abs_index, edge_type_histogram};
use abstree::io::format_tree;
use abstree::transforms::k3_regular_shapes;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("trees with 3-regular interior, by leaf count:");
    for s in 3..=7usize {
        let shapes = k3_regular_shapes(s)?;
        println!(
            "  {s} leaves: {} shape(s), each on {} vertices",
            shapes.len(),
            2 * s - 2
        );
    }

    let (n, k) = (12, 4);
    let members = tstar_family(n, k)?;
    println!(
        "\nextremal family for n = {n}, k = {k}: {} member(s)",
        members.len()
    );
    for member in &members {
        let h = edge_type_histogram(member);
        println!(
            "  abs {:.9}  histogram (1,2):{} (2,2):{} (2,3):{} (3,3):{}",
            abs_index(member).value,
            h.count(1, 2),
            h.count(2, 2),
            h.count(2, 3),
            h.count(3, 3),
        );
        assert!(is_tstar_member(member));
    }

    // membership is structural: one short pendent path disqualifies a tree
    let long_legs = make_spider(&[2, 2, 5])?;
    let short_leg = make_spider(&[1, 3, 5])?;
    println!(
        "\nspider 2,2,5 in the family: {}; spider 1,3,5: {}",
        is_tstar_member(&long_legs),
        is_tstar_member(&short_leg)
    );

    println!("\nsmallest member (n = 7, k = 3) as an edge list:");
    print!("{}", format_tree(&tstar_family(7, 3)?[0]));
    Ok(())
}
