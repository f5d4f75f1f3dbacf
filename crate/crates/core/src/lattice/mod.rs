//! Exact arithmetic on subgroups of `Z^n`.
//!
//! Everything here runs on arbitrary-precision integers: Hermite and Smith
//! normal forms, indices, intersections and sums, saturation, direct
//! complements, and unimodular automorphisms carrying one direct summand
//! onto another.

mod io;
mod matrix;
pub mod normal_form;
mod sublattice;

use thiserror::Error;

pub use io::{
    format_lattice, parse_generator_matrices, parse_lattice, parse_lattices, parse_matrix_block,
};
pub use matrix::IntMatrix;
pub use normal_form::{
    hermite_decomposition, hermite_normal_form, smith_normal_form, HermiteForm, SmithForm,
};
pub use sublattice::{IndexResult, Sublattice};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("vector has length {found}, expected ambient dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("first lattice is not contained in the second")]
    NotContained,
    #[error("maximality is only defined for rank at least 1")]
    RankZero,
    #[error("sublattice is not maximal (not a direct summand of Z^n)")]
    NotMaximal,
    #[error("ranks differ: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal check failed: {0}")]
    Internal(&'static str),
}

pub fn hermite_basis_is_canonical(m: &IntMatrix) -> bool {
    sublattice::is_nonneg_canonical(m)
}

/// `[M : L]`, with `L ⊆ M` checked.
pub fn index(l: &Sublattice, m: &Sublattice) -> Result<IndexResult, LatticeError> {
    l.index_in(m)
}

pub fn intersect(l: &Sublattice, k: &Sublattice) -> Result<Sublattice, LatticeError> {
    l.intersect(k)
}

pub fn sum(l: &Sublattice, k: &Sublattice) -> Result<Sublattice, LatticeError> {
    l.sum(k)
}

pub fn commensurable(l: &Sublattice, k: &Sublattice) -> Result<bool, LatticeError> {
    l.commensurable(k)
}

pub fn saturation(l: &Sublattice) -> Sublattice {
    l.saturation()
}

pub fn is_maximal(l: &Sublattice) -> Result<bool, LatticeError> {
    l.is_maximal()
}

pub fn direct_complement(l: &Sublattice) -> Result<Sublattice, LatticeError> {
    l.direct_complement()
}

pub fn mapping_automorphism(l: &Sublattice, t: &Sublattice) -> Result<IntMatrix, LatticeError> {
    l.mapping_automorphism(t)
}
