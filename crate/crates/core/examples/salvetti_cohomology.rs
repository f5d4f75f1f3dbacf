//! Cell counts and integral cohomology of Salvetti complexes: one cell per
//! clique, all boundaries zero.

use bredim::homology::ChainComplex;
use bredim::raag::{self, SimpleGraph};

fn show(name: &str, g: &SimpleGraph) -> Result<(), Box<dyn std::error::Error>> {
    let s = raag::salvetti_complex(g);
    let groups: Vec<String> = (0..=s.top_degree())
        .map(|k| s.cohomology(k).map(|h| h.to_string()))
        .collect::<Result<_, _>>()?;
    println!(
        "{name}: cells {:?}, H^* = {}, χ = {}",
        s.cell_counts(),
        groups.join(" | "),
        s.euler_characteristic()
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    show("K_4 (4-torus)", &SimpleGraph::complete(4))?;
    show("5-cycle", &SimpleGraph::cycle(5))?;
    show("Petersen", &SimpleGraph::petersen())?;

    // a complex with torsion, read from the text format
    let rp2 =
        ChainComplex::parse("degrees 2\n1 1 1\n# boundary 1\n1 1\n0\n# boundary 2\n1 1\n2\n")?;
    for k in 0..=2 {
        println!(
            "RP^2: H_{k} = {}, H^{k} = {}",
            rp2.homology(k)?,
            rp2.cohomology(k)?
        );
    }
    Ok(())
}
