//! Right-angled Artin groups from finite simple graphs: clique enumeration,
//! the Salvetti complex, and the dimension formulas.
//!
//! The graph with no vertices defines the trivial group; every dimension of
//! it is 0 and is reported as degenerate.

mod cliques;
mod graph;

use thiserror::Error;

use crate::dims::{citations, DimBound, DimFact};
use crate::homology::ChainComplex;
use crate::lattice::IntMatrix;

pub use cliques::{
    clique_number, cliques, degeneracy_order, maximal_cliques, maximum_clique, CliqueTable,
};
pub use graph::{parse_dimacs, parse_edge_list, parse_graph, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RaagError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// `k` outside `0 <= k < cd`, where no formula is known.
    #[error("k = {k} is outside 0 <= k < cd = {cd}")]
    OutOfRange { k: u64, cd: u64 },
}

/// The Salvetti complex: one `k`-cell per `k`-clique, all boundaries zero.
pub fn salvetti_complex(g: &SimpleGraph) -> ChainComplex {
    ChainComplex::with_zero_boundaries(cliques(g).counts())
}

/// Cellular boundary `∂_k` of the Salvetti complex computed face by face.
///
/// The `k`-cube of a clique `{v_1 < ... < v_k}` has faces `x_i = 0` and
/// `x_i = 1`, entering with signs `-(-1)^i` and `+(-1)^i`. Both are glued
/// to the cube of `σ - {v_i}`, so every entry is a sum of cancelling pairs.
/// Used to cross-check the zero boundaries of [`salvetti_complex`].
pub fn face_pairing_boundary(table: &CliqueTable, k: usize) -> IntMatrix {
    let faces = table.of_size(k.saturating_sub(1));
    let cells = table.of_size(k);
    let mut m = IntMatrix::zeros(faces.len(), cells.len());
    if k == 0 {
        return m;
    }
    for (j, sigma) in cells.iter().enumerate() {
        for i in 0..k {
            let face: Vec<usize> = sigma
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != i)
                .map(|(_, &v)| v)
                .collect();
            let row = faces
                .binary_search(&face)
                .expect("faces of cliques are cliques");
            let sign: i64 = if i % 2 == 0 { 1 } else { -1 };
            m[(row, j)] -= sign; // front face, x_i = 0
            m[(row, j)] += sign; // back face, x_i = 1
        }
    }
    m
}

fn trivial_group_fact(quantity: String) -> DimFact {
    let mut fact = DimFact::new(quantity, DimBound::exact(0), citations::PLUMBING)
        .with_note("empty graph: the group is trivial");
    fact.degenerate = true;
    fact
}

/// `gd = cd = ω(Γ)`.
pub fn cd_raag(g: &SimpleGraph) -> DimFact {
    if g.is_empty() {
        return trivial_group_fact("cd(A_Γ)".into());
    }
    let omega = clique_number(g) as u64;
    DimFact::new("cd(A_Γ)", DimBound::exact(omega), citations::RAAG_CD).with_note("gd = cd")
}

/// `gd_{F_k}(A_Γ) = cd(A_Γ) + k` for `0 <= k < cd`.
pub fn gd_fk_raag(g: &SimpleGraph, k: u64) -> Result<DimFact, RaagError> {
    if g.is_empty() {
        return Ok(trivial_group_fact(format!("gd_F{k}(A_Γ)")));
    }
    let cd = clique_number(g) as u64;
    if k >= cd {
        return Err(RaagError::OutOfRange { k, cd });
    }
    Ok(DimFact::new(
        format!("gd_F{k}(A_Γ)"),
        DimBound::exact(cd + k),
        citations::RAAG_FK,
    )
    .with_note("gd = cd"))
}

/// Rank of the largest free abelian subgroup spanned by vertices, the
/// dimension of the torus it spans in the Salvetti complex.
pub fn embedded_torus_rank(g: &SimpleGraph) -> usize {
    clique_number(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn salvetti_counts() {
        assert_eq!(
            salvetti_complex(&SimpleGraph::complete(1)).cell_counts(),
            &[1, 1]
        );
        assert_eq!(
            salvetti_complex(&SimpleGraph::complete(4)).cell_counts(),
            &[1, 4, 6, 4, 1]
        );
        assert_eq!(
            salvetti_complex(&SimpleGraph::edgeless(0)).cell_counts(),
            &[1]
        );
    }

    #[test]
    fn salvetti_cohomology_of_triangle() {
        let s = salvetti_complex(&SimpleGraph::complete(3));
        let top = s.cohomology(3).unwrap();
        assert_eq!((top.betti, top.is_free()), (1, true));
        assert_eq!(s.cohomology(0).unwrap().betti, 1);
    }

    #[test]
    fn face_pairing_gives_zero() {
        let t = cliques(&SimpleGraph::complete(5));
        for k in 0..=5 {
            let b = face_pairing_boundary(&t, k);
            assert!(b.is_zero());
            if k > 0 {
                assert_eq!(b.shape(), (t.of_size(k - 1).len(), t.of_size(k).len()));
            }
        }
    }

    #[test]
    fn dimensions() {
        let k3 = SimpleGraph::complete(3);
        assert_eq!(cd_raag(&k3).bound, DimBound::exact(3));
        assert_eq!(gd_fk_raag(&k3, 1).unwrap().bound, DimBound::exact(4));
        assert_eq!(gd_fk_raag(&k3, 0).unwrap().bound, cd_raag(&k3).bound);
        assert_eq!(
            gd_fk_raag(&k3, 3),
            Err(RaagError::OutOfRange { k: 3, cd: 3 })
        );
        assert_eq!(
            gd_fk_raag(&SimpleGraph::path(3), 1).unwrap().bound,
            DimBound::exact(3)
        );
        assert_eq!(cd_raag(&SimpleGraph::edgeless(4)).bound, DimBound::exact(1));
        assert_eq!(embedded_torus_rank(&SimpleGraph::complete(5)), 5);
        assert_eq!(embedded_torus_rank(&SimpleGraph::edgeless(3)), 1);
        assert_eq!(embedded_torus_rank(&SimpleGraph::petersen()), 2);
    }

    #[test]
    fn empty_graph_is_trivial() {
        let e = SimpleGraph::edgeless(0);
        assert!(cd_raag(&e).degenerate);
        let f = gd_fk_raag(&e, 2).unwrap();
        assert_eq!((f.bound, f.degenerate), (DimBound::exact(0), true));
    }
}
