//! Hermite and Smith normal forms of a small integer matrix.

use bredim::lattice::{hermite_decomposition, smith_normal_form, IntMatrix};

fn main() {
    let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]], 3);
    println!("M =\n{m}");

    let hnf = hermite_decomposition(&m);
    println!("H = U·M =\n{}", hnf.h);
    println!("U =\n{}", hnf.u);
    println!("pivot columns {:?}, rank {}", hnf.pivots, hnf.rank());

    let snf = smith_normal_form(&m);
    println!("D = S·M·T =\n{}", snf.d);
    let factors: Vec<String> = snf
        .invariant_factors()
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("invariant factors: {}", factors.join(", "));
    assert_eq!(&(&snf.s * &m) * &snf.t, snf.d);
}
