//! Clique numbers and F_k dimensions of right-angled Artin groups.

use bredim::raag::{self, SimpleGraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let edge_list = "5 6\n0 1\n1 2\n0 2\n2 3\n3 4\n2 4\n";
    let g = raag::parse_graph(edge_list)?;
    let table = raag::cliques(&g);
    println!("clique counts by size: {:?}", table.counts());
    println!("maximal cliques: {:?}", raag::maximal_cliques(&g));

    let cd = raag::cd_raag(&g);
    println!("cd = {} ({})", cd.bound, cd.citation);
    let omega = raag::clique_number(&g) as u64;
    for k in 0..omega {
        println!("gd for F_{k} = {}", raag::gd_fk_raag(&g, k)?.bound);
    }
    println!(
        "k = cd is outside the formula: {}",
        raag::gd_fk_raag(&g, omega).unwrap_err()
    );

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let random = SimpleGraph::random(12, 0.5, &mut rng);
    println!(
        "G(12, 0.5): {} edges, clique number {}",
        random.edge_count(),
        raag::clique_number(&random)
    );
    Ok(())
}
