//! Derive the upper bound n + k for Z^n from the inductive rules, print the
//! tree, and recheck every node.

use bredim::dims;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (bound, tree) = dims::derive_zn_upper(3, 2)?;
    println!("gd for F_2 of Z^3: {}", bound.relation());
    println!(
        "{} nodes, height {}, induction depth {}",
        tree.node_count(),
        tree.height(),
        tree.induction_depth()
    );
    print!("{}", tree.render_tree());
    tree.recheck().map_err(|e| format!("{e:?}"))?;
    println!("every node rechecks");

    for n in 1..=6u64 {
        let row: Vec<String> = (0..n)
            .map(|k| dims::derive_zn_upper(n, k).map(|(b, _)| b.to_string()))
            .collect::<Result<_, _>>()?;
        println!("n={n}: {}", row.join(" "));
    }
    Ok(())
}
