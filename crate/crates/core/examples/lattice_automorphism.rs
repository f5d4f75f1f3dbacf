//! A complement of a direct summand, and a unimodular matrix carrying one
//! saturated sublattice onto another of the same rank.

use bredim::lattice::Sublattice;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = Sublattice::from_generators(3, &[[1, 2, 3]])?;
    let t = Sublattice::from_generators(3, &[[0, 5, 2]])?;

    let n = l.direct_complement()?;
    println!("L = {l}");
    println!("complement N = {n}");
    println!("det [L; N] = {}", l.basis().vstack(n.basis()).determinant());

    let a = l.mapping_automorphism(&t)?;
    println!("A =\n{a}");
    println!("det A = {}", a.determinant());
    println!("A·L = {}", l.image_under(&a));
    assert_eq!(l.image_under(&a), t);
    Ok(())
}
