//! Closed-form values and bounds with the rules they come from.

use bredim::dims;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("virtually Z^n, F_k:");
    for n in 1..=5u64 {
        let row: Vec<String> = (0..n)
            .map(|k| dims::virtually_abelian_gd(n, k).map(|f| f.bound.to_string()))
            .collect::<Result<_, _>>()?;
        println!("  n={n}: {}", row.join(" "));
    }
    for n in [3u64, 5, 8] {
        println!(
            "braid B_{n}, F_1: gd {}",
            dims::braid_gd(n, 1, false)?.bound.relation()
        );
    }
    println!(
        "Out(F_4), F_2: gd {}",
        dims::out_fn_lower(4, 2)?.bound.relation()
    );
    println!(
        "Out on 3 diamonds, F_1: gd {}",
        dims::out_diamonds_lower(3, 1)?.bound.relation()
    );
    println!(
        "Z^6 relative to a rank-2 summand: gd {}",
        dims::sub_family_gd(6, 2)?.bound.relation()
    );

    let f = dims::braid_gd(4, 1, true)?;
    println!("{}: {} [{}]", f.quantity, f.bound, f.citation);
    println!(
        "braid B_4 with k = 3: {}",
        dims::braid_gd(4, 3, false).unwrap_err()
    );
    Ok(())
}
