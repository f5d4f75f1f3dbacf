//! Saturation, index and commensurability of sublattices of Z^3.

use bredim::lattice::{format_lattice, parse_lattices, Sublattice};

const INPUT: &str = "\
3 2
2 0 4
0 6 6
3 1
4 12 16
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lattices = parse_lattices(INPUT)?;
    let (l, k) = (&lattices[0], &lattices[1]);
    println!("L = {l}");
    println!("K = {k}");

    let s = l.saturation();
    println!("sat(L) = {s}, [sat(L) : L] = {}", l.saturation_index());
    println!("sat(L) is a direct summand: {}", s.is_maximal()?);
    println!("[Z^3 : L] = {:?}", l.index_in(&Sublattice::full(3))?);

    println!("L ∩ K = {}", l.intersect(k)?);
    println!("L + K = {}", l.sum(k)?);
    println!("L and K commensurable: {}", l.commensurable(k)?);
    println!("L and sat(L) commensurable: {}", l.commensurable(&s)?);

    print!("sat(L) in file form:\n{}", format_lattice(&s));
    Ok(())
}
