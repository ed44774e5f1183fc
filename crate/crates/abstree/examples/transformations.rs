//! Apply the three rewrites - edge contraction, vertex splitting, and
//! 3-regular replacement - and watch the index move.
//!
//! Run with `cargo run --example transformations`.

use abstree::families::{make_spider, make_star};
use abstree::indices::abs_index;
use abstree::transforms::{
    contract_edge, k3_regular_shapes, replace_with_3regular_default, split_vertex, SplitSpec,
};
use abstree::tree::Tree;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // contraction: spider 3,2,2 has a degree-(2,2) edge on its long leg
    let spider = make_spider(&[3, 2, 2])?;
    let e2 = spider.e2_edges();
    println!(
        "spider 3,2,2: abs {:.9}, degree-(2,2) edges {:?}",
        abs_index(&spider).value,
        e2
    );
    let (contracted, map) = contract_edge(&spider, e2[0])?;
    println!(
        "after contracting {:?}: n {} -> {}, abs {:.9} (old labels {} and {} merged into {})",
        e2[0],
        spider.vertex_count(),
        contracted.vertex_count(),
        abs_index(&contracted).value,
        e2[0].0,
        e2[0].1,
        map[e2[0].0],
    );

    // splitting: pull the star center apart
    let star = make_star(7)?;
    let spec = SplitSpec::from_left(&star, 0, [1, 2, 3])?;
    let split = split_vertex(&star, &spec)?;
    println!(
        "\nS7: abs {:.9}; split center into (3, 3): degrees {:?}, abs {:.9}",
        abs_index(&star).value,
        split.degree_counts(),
        abs_index(&split).value,
    );

    // replacement: dissolve a degree-5 vertex into a 3-regular patch
    let hub = Tree::from_edges(
        9,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (5, 6),
            (6, 7),
            (7, 8),
        ],
    )?;
    println!(
        "\ndegree-5 hub: n {}, abs {:.9}",
        hub.vertex_count(),
        abs_index(&hub).value
    );
    let replaced = replace_with_3regular_default(&hub, 0)?;
    println!(
        "after replacement: n {} (grew by degree - 3 = 2), max degree {}, abs {:.9}",
        replaced.vertex_count(),
        replaced.max_degree(),
        abs_index(&replaced).value,
    );

    // the 6-leaf replacement admits two shapes
    let shapes = k3_regular_shapes(6)?;
    println!("\n6-leaf replacement shapes: {}", shapes.len());
    for shape in &shapes {
        println!("  code {}", shape.canonical_code());
    }
    Ok(())
}
