use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::normal_form::{
    hermite_decomposition, left_kernel, smith_normal_form, unimodular_inverse,
};
use super::{IntMatrix, LatticeError};

/// A subgroup of `Z^n`, stored by its canonical Hermite basis.
///
/// Two values compare equal exactly when they describe the same subgroup.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sublattice {
    ambient_dim: usize,
    basis: IntMatrix,
}

/// Index of one subgroup in another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexResult {
    Finite(BigInt),
    Infinite,
}

impl IndexResult {
    pub fn is_finite(&self) -> bool {
        matches!(self, IndexResult::Finite(_))
    }

    pub fn finite_value(&self) -> Option<&BigInt> {
        match self {
            IndexResult::Finite(k) => Some(k),
            IndexResult::Infinite => None,
        }
    }
}

impl fmt::Display for IndexResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexResult::Finite(k) => write!(f, "{k}"),
            IndexResult::Infinite => f.write_str("infinite"),
        }
    }
}

impl Sublattice {
    /// The integer span of `gens` inside `Z^n`.
    pub fn from_generators<R, T>(n: usize, gens: &[R]) -> Result<Self, LatticeError>
    where
        R: AsRef<[T]>,
        T: Clone + Into<BigInt>,
    {
        if let Some(bad) = gens.iter().find(|g| g.as_ref().len() != n) {
            return Err(LatticeError::DimensionMismatch {
                expected: n,
                found: bad.as_ref().len(),
            });
        }
        Ok(Self::from_matrix(&IntMatrix::from_rows(gens, n)))
    }

    /// The row span of `m`.
    pub fn from_matrix(m: &IntMatrix) -> Self {
        let form = hermite_decomposition(m);
        Sublattice {
            ambient_dim: m.cols(),
            basis: form.basis(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Sublattice {
            ambient_dim: n,
            basis: IntMatrix::zeros(0, n),
        }
    }

    pub fn full(n: usize) -> Self {
        Sublattice {
            ambient_dim: n,
            basis: IntMatrix::identity(n),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Canonical basis, one row per basis vector.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    fn check_ambient(&self, other: &Sublattice) -> Result<(), LatticeError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LatticeError::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for i in 0..self.rank() {
            let row = self.basis.row(i);
            let pivot = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            // entries left of the pivot are already zero by echelon shape
            let (q, r) = rest[pivot].div_rem(&row[pivot]);
            if !r.is_zero() {
                return None;
            }
            for (x, b) in rest.iter_mut().zip(row) {
                *x -= &q * b;
            }
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains_vector(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subset_of(&self, other: &Sublattice) -> bool {
        self.ambient_dim == other.ambient_dim
            && (0..self.rank()).all(|i| other.contains_vector(self.basis.row(i)))
    }

    /// `[M : L]` for `L = self ⊆ M`.
    pub fn index_in(&self, m: &Sublattice) -> Result<IndexResult, LatticeError> {
        self.check_ambient(m)?;
        if !self.is_subset_of(m) {
            return Err(LatticeError::NotContained);
        }
        if self.rank() != m.rank() {
            return Ok(IndexResult::Infinite);
        }
        let coords: Vec<Vec<BigInt>> = (0..self.rank())
            .map(|i| {
                m.coordinates(self.basis.row(i))
                    .expect("containment checked")
            })
            .collect();
        let c = IntMatrix::from_rows(&coords, self.rank());
        Ok(IndexResult::Finite(c.determinant().abs()))
    }

    pub fn intersect(&self, other: &Sublattice) -> Result<Sublattice, LatticeError> {
        self.check_ambient(other)?;
        if self.rank() == 0 || other.rank() == 0 {
            return Ok(Sublattice::zero(self.ambient_dim));
        }
        // (a, b) with a·B_self + b·B_other = 0 gives a·B_self ∈ other
        let stacked = self.basis.vstack(&other.basis);
        let kernel = left_kernel(&stacked);
        let k = self.rank();
        let images: Vec<Vec<BigInt>> = (0..kernel.rows())
            .map(|i| self.basis.left_apply(&kernel.row(i)[..k]))
            .collect();
        Ok(Sublattice::from_matrix(&IntMatrix::from_rows(
            &images,
            self.ambient_dim,
        )))
    }

    pub fn sum(&self, other: &Sublattice) -> Result<Sublattice, LatticeError> {
        self.check_ambient(other)?;
        Ok(Sublattice::from_matrix(&self.basis.vstack(&other.basis)))
    }

    /// Whether `self ∩ other` has finite index in both.
    pub fn commensurable(&self, other: &Sublattice) -> Result<bool, LatticeError> {
        if self.rank() != other.rank() {
            self.check_ambient(other)?;
            return Ok(false);
        }
        Ok(self.intersect(other)?.rank() == self.rank())
    }

    /// The unique direct summand of `Z^n` containing `self` with finite index:
    /// all integer vectors some positive multiple of which lies in `self`.
    pub fn saturation(&self) -> Sublattice {
        let n = self.ambient_dim;
        if self.rank() == 0 {
            return Sublattice::zero(n);
        }
        // orthogonal complement twice: {x : x·y = 0 for all y with B·y = 0}
        let normals = left_kernel(&self.basis.transpose());
        let sat = left_kernel(&normals.transpose());
        Sublattice::from_matrix(&sat)
    }

    /// Maximal in its commensurability class, i.e. a direct summand.
    ///
    /// Decided by the Smith form of the basis being all ones; a `k×k` minor
    /// of a saturated basis may still exceed one in absolute value.
    pub fn is_maximal(&self) -> Result<bool, LatticeError> {
        if self.rank() == 0 {
            return Err(LatticeError::RankZero);
        }
        Ok(smith_normal_form(&self.basis)
            .invariant_factors()
            .iter()
            .all(One::is_one))
    }

    fn require_maximal(&self) -> Result<(), LatticeError> {
        if self.rank() > 0 && !self.is_maximal()? {
            return Err(LatticeError::NotMaximal);
        }
        Ok(())
    }

    /// A unimodular matrix whose first `rank` rows are the canonical basis
    /// and whose remaining rows span a complement.
    fn adapted_basis(&self) -> Result<IntMatrix, LatticeError> {
        self.require_maximal()?;
        let n = self.ambient_dim;
        // U·Bᵀ = [I; 0] for saturated B, so B·Uᵀ = [I | 0] and B is the top of (Uᵀ)⁻¹
        let form = hermite_decomposition(&self.basis.transpose());
        let inv = unimodular_inverse(&form.u.transpose()).expect("transform is unimodular");
        debug_assert_eq!(inv.select_rows(0..self.rank()), self.basis);
        debug_assert_eq!(inv.rows(), n);
        Ok(inv)
    }

    /// A sublattice `N` with `self ⊕ N = Z^n`.
    pub fn direct_complement(&self) -> Result<Sublattice, LatticeError> {
        if self.rank() == 0 {
            return Ok(Sublattice::full(self.ambient_dim));
        }
        let adapted = self.adapted_basis()?;
        Ok(Sublattice::from_matrix(
            &adapted.select_rows(self.rank()..self.ambient_dim),
        ))
    }

    /// A unimodular `A` with `A·v ∈ target` for every `v ∈ self`, mapping
    /// `self` onto `target`. Vectors act as columns.
    pub fn mapping_automorphism(&self, target: &Sublattice) -> Result<IntMatrix, LatticeError> {
        self.check_ambient(target)?;
        if self.rank() != target.rank() {
            return Err(LatticeError::RankMismatch {
                left: self.rank(),
                right: target.rank(),
            });
        }
        if self.rank() == 0 {
            return Err(LatticeError::RankZero);
        }
        let from = self.adapted_basis()?;
        let to = target.adapted_basis()?;
        // columns of fromᵀ are sent to the matching columns of toᵀ
        let from_inv = unimodular_inverse(&from.transpose()).expect("adapted basis is unimodular");
        let a = &to.transpose() * &from_inv;
        if !a.is_unimodular() || self.image_under(&a) != *target {
            return Err(LatticeError::Internal("automorphism postcondition failed"));
        }
        Ok(a)
    }

    /// `{A·v : v ∈ self}` for a square matrix `A` acting on columns.
    pub fn image_under(&self, a: &IntMatrix) -> Sublattice {
        assert_eq!(a.shape(), (self.ambient_dim, self.ambient_dim));
        let images: Vec<Vec<BigInt>> = (0..self.rank())
            .map(|i| a.apply(self.basis.row(i)))
            .collect();
        Sublattice::from_matrix(&IntMatrix::from_rows(&images, self.ambient_dim))
    }

    /// Index of `self` in its saturation, the product of its invariant factors.
    pub fn saturation_index(&self) -> BigInt {
        smith_normal_form(&self.basis)
            .invariant_factors()
            .iter()
            .product()
    }

    /// `|det|` of the basis when full rank; the covolume in `Z^n`.
    pub fn determinant(&self) -> Option<BigInt> {
        (self.rank() == self.ambient_dim).then(|| self.basis.determinant().abs())
    }
}

impl fmt::Debug for Sublattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Sublattice(n={}, basis={:?})",
            self.ambient_dim,
            self.basis.row_vectors()
        )
    }
}

impl fmt::Display for Sublattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .row_vectors()
            .iter()
            .map(|r| {
                r.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .map(|r| format!("({r})"))
            .collect();
        write!(f, "span{{{}}} ⊆ Z^{}", rows.join(", "), self.ambient_dim)
    }
}

pub(crate) fn is_nonneg_canonical(m: &IntMatrix) -> bool {
    let mut last_pivot = None;
    for i in 0..m.rows() {
        let row = m.row(i);
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if last_pivot.is_some_and(|lp| p <= lp) || !row[p].is_positive() {
            return false;
        }
        for j in 0..i {
            let above = &m[(j, p)];
            if above.is_negative() || above >= &row[p] {
                return false;
            }
        }
        last_pivot = Some(p);
    }
    true
}
