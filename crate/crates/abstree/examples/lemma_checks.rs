//! Run the six inequality suites that support the extremal result and
//! summarize the outcomes.
//!
//! Run with `cargo run --example lemma_checks`.

use abstree::verify::{lemma_suite, psi, LemmaId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_n = 10;
    println!("sweeping all trees with at most {max_n} vertices\n");
    for lemma in LemmaId::ALL {
        let records = lemma_suite(lemma, 1..=max_n)?;
        let failures = records.iter().filter(|r| !r.holds).count();
        println!(
            "suite {lemma}: {:>6} instance(s), {failures} violation(s)",
            records.len()
        );
        if let Some(first) = records.first() {
            let relation = if first.strict { ">" } else { ">=" };
            println!(
                "    e.g. {}: {:.9} {relation} {:.9}",
                first.instance, first.lhs, first.rhs
            );
        }
    }

    // the split-based reduction slack changes sign between degrees 6 and 7
    println!("\nsplit-reduction slack psi(r):");
    for r in [6.0, 7.0, 8.0] {
        println!("  psi({r}) = {:+.9}", psi(r));
    }
    Ok(())
}
