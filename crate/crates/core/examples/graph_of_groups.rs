//! Dimensions of a graph of groups with virtually abelian vertex groups.

use bredim::gog::{self, GogBuilder};

const SPLITTING: &str = "\
# two virtually abelian vertex groups joined by a finite edge group
vertex a rank=2
vertex b rank=3
edge a b finite
acylindrical = true
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let y = gog::parse_gog(SPLITTING)?;
    for k in 0..=3 {
        let r = gog::gog_gd(&y, k)?;
        println!(
            "k={k}: gd {} (exact formula: {})",
            r.fact.bound.relation(),
            r.exact
        );
        for d in &r.diagnostics {
            println!("  not applicable: {d}");
        }
    }
    print!(
        "cells of the coned-off tree for k=1:\n{}",
        gog::cell_census(&y, 1)?.render()
    );

    // an edge group as large as a vertex group only gives bounds
    let z = GogBuilder::new()
        .vertex("a", 2)?
        .vertex("b", 2)?
        .edge("a", "b", 2)?
        .acylindrical(true)
        .build()?;
    let b = gog::bass_serre_bounds(&z, 1)?;
    println!("equal-rank edge, k=1: gd in {}", b.bound);
    Ok(())
}
