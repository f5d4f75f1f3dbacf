//! Hermite and Smith normal forms over the integers.
//!
//! Both reductions work by Euclidean division with a minimal-absolute-value
//! pivot, recording every elementary operation in unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Row-style Hermite normal form `H = U·M` together with its transform.
#[derive(Debug, Clone)]
pub struct HermiteForm {
    /// Same shape as the input; nonzero rows first, zero rows last.
    pub h: IntMatrix,
    /// Unimodular, `rows × rows`.
    pub u: IntMatrix,
    /// Pivot column of each nonzero row of `h`.
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows of `h`.
    pub fn basis(&self) -> IntMatrix {
        self.h.select_rows(0..self.rank())
    }

    /// Rows of `u` that annihilate the input from the left. They form a basis
    /// of the left kernel lattice `{x : x·M = 0}`.
    pub fn left_kernel(&self) -> IntMatrix {
        self.u.select_rows(self.rank()..self.u.rows())
    }
}

/// Computes the canonical Hermite normal form of `m` and a unimodular `U`
/// with `U·m = H`.
///
/// The canonical form is row echelon with positive pivots, every entry
/// above a pivot reduced into `[0, pivot)`, and zero rows at the bottom.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let form = hermite_decomposition(m);
    (form.h, form.u)
}

pub fn hermite_decomposition(m: &IntMatrix) -> HermiteForm {
    let (rows, cols) = m.shape();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let pick = (r..rows)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&a, &b| h[(a, c)].abs().cmp(&h[(b, c)].abs()));
            let Some(p) = pick else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut clean = true;
            for i in r + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = -h[(i, c)].div_floor(&h[(r, c)]);
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
                clean &= h[(i, c)].is_zero();
            }
            if clean {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for j in 0..r {
            let q = -h[(j, c)].div_floor(&h[(r, c)]);
            h.add_row_multiple(j, r, &q);
            u.add_row_multiple(j, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    HermiteForm { h, u, pivots }
}

/// `S·M·T = D` with `S`, `T` unimodular and `D` diagonal with a
/// divisibility chain of nonnegative entries.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub s: IntMatrix,
    pub t: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = m.shape();
    let mut d = m.clone();
    let mut s = IntMatrix::identity(rows);
    let mut t = IntMatrix::identity(cols);
    'diag: for k in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'diag };
            d.swap_rows(k, pi);
            s.swap_rows(k, pi);
            d.swap_cols(k, pj);
            t.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..rows {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let q = -d[(i, k)].div_floor(&d[(k, k)]);
                d.add_row_multiple(i, k, &q);
                s.add_row_multiple(i, k, &q);
                clean &= d[(i, k)].is_zero();
            }
            for j in k + 1..cols {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let q = -d[(k, j)].div_floor(&d[(k, k)]);
                d.add_col_multiple(j, k, &q);
                t.add_col_multiple(j, k, &q);
                clean &= d[(k, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide the remaining block
            let offender = (k + 1..rows)
                .find(|&i| (k + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&d[(k, k)])));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(k, i, &one);
                    s.add_row_multiple(k, i, &one);
                }
                None => break,
            }
        }
        if d[(k, k)].is_negative() {
            d.negate_row(k);
            s.negate_row(k);
        }
    }
    SmithForm { d, s, t }
}

/// Rank over the rationals.
pub fn rank(m: &IntMatrix) -> usize {
    hermite_decomposition(m).rank()
}

/// Basis (as rows) of `{x ∈ Z^rows : x·m = 0}`.
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    hermite_decomposition(m).left_kernel()
}

/// Inverse of a unimodular matrix, or `None` if `u` is not unimodular.
pub fn unimodular_inverse(u: &IntMatrix) -> Option<IntMatrix> {
    if !u.is_square() {
        return None;
    }
    let form = hermite_decomposition(u);
    (form.h == IntMatrix::identity(u.rows())).then_some(form.u)
}
