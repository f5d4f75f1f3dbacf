//! Dimensions of classifying spaces for the families `F_k` of virtually
//! abelian subgroups, with the exact integer machinery behind them.
//!
//! - [`lattice`]: Hermite and Smith normal forms, sublattices of `Z^n`,
//!   saturation, complements, automorphisms.
//! - [`homology`]: integral (co)homology of finite chain complexes.
//! - [`raag`]: graphs, cliques, Salvetti complexes, RAAG dimensions.
//! - [`dims`]: interval bounds, closed-form values, derivation trees.
//! - [`gog`]: graphs of groups with virtually abelian vertex groups.
//! - [`verify`]: brute-force oracles and seeded cross-check suites.
//! - [`cli`]: the `bredim` command line.

pub mod cli;
pub mod dims;
pub mod gog;
pub mod homology;
pub mod lattice;
pub mod raag;
pub mod verify;
