//! Slow, direct reference computations. None of these use the normal-form
//! code they are checked against: ranks come from fraction-free elimination,
//! determinants from cofactor expansion, cliques from subset enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::raag::SimpleGraph;

/// Rank over the rationals of a list of integer rows.
pub fn rational_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &pivot_row[c] - &f * p;
            }
        }
        rank += 1;
    }
    rank
}

/// Whether `v` is a rational combination of `rows`.
pub fn in_rational_span(rows: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let mut with = rows.to_vec();
    with.push(v.to_vec());
    rational_rank(&with) == rational_rank(rows)
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    match n {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        _ => {
            let mut acc = BigInt::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * cofactor_det(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// `det(B Bᵀ)` for the rows `B`.
pub fn gram_det(rows: &[Vec<BigInt>]) -> BigInt {
    let g: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|a| {
            rows.iter()
                .map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum())
                .collect()
        })
        .collect();
    cofactor_det(&g)
}

/// `[M : L]` for lattices spanned by independent rows with `L ⊆ M` of equal
/// rank: `det Gram(L) = [M : L]^2 det Gram(M)`. `None` if the ratio is not
/// a perfect square integer.
pub fn index_by_gram(l_rows: &[Vec<BigInt>], m_rows: &[Vec<BigInt>]) -> Option<BigInt> {
    let gl = gram_det(l_rows);
    let gm = gram_det(m_rows);
    if gm.is_zero() {
        return None;
    }
    let (q, r) = gl.div_rem(&gm);
    if !r.is_zero() || q.is_negative() {
        return None;
    }
    let s = q.sqrt();
    (&s * &s == q).then_some(s)
}

/// Integer solvability of `x·B = v` for square invertible `B`, by Cramer's rule.
pub fn integral_combination(rows: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let d = cofactor_det(rows);
    if d.is_zero() {
        return false;
    }
    // x_i = det(B with row i replaced by v) / det B
    (0..rows.len()).all(|i| {
        let mut b = rows.to_vec();
        b[i] = v.to_vec();
        cofactor_det(&b).is_multiple_of(&d)
    })
}

/// `[Z^n : L]` for a full-rank `L` by counting lattice points of `L` in the
/// box `[0, d)^n`, where `d = |det L|` so that `dZ^n ⊆ L`. The index is
/// `d^n / #points`. `None` when the box has more than `cap` points.
pub fn index_by_coset_count(rows: &[Vec<BigInt>], cap: u64) -> Option<BigInt> {
    let n = rows.len();
    let d = cofactor_det(rows).abs();
    if d.is_zero() {
        return None;
    }
    let side: u64 = (&d).try_into().ok()?;
    let total = side.checked_pow(n as u32)?;
    if total > cap {
        return None;
    }
    let mut count = 0u64;
    let mut v = vec![0u64; n];
    loop {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        if integral_combination(rows, &big) {
            count += 1;
        }
        let mut i = 0;
        while i < n {
            v[i] += 1;
            if v[i] < side {
                break;
            }
            v[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    Some(BigInt::from(total / count))
}

/// All integer vectors with coordinates in `[-r, r]^n`.
pub fn box_vectors(n: usize, r: i64) -> Vec<Vec<BigInt>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-r..=r).map(move |x| {
                    let mut w = v.clone();
                    w.push(BigInt::from(x));
                    w
                })
            })
            .collect();
    }
    out
}

/// Clique counts by size, by testing every vertex subset. `n <= 20`.
pub fn clique_counts_by_subsets(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    assert!(n <= 20, "subset oracle is exponential");
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let mut counts = vec![0usize; n + 1];
    for s in 0u32..(1u32 << n) {
        let is_clique = (0..n)
            .filter(|&v| s & (1 << v) != 0)
            .all(|v| s & !(1 << v) & !masks[v] == 0);
        if is_clique {
            counts[s.count_ones() as usize] += 1;
        }
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// gcd of all `r × r` minors. For an integer matrix of rank `r` this is the
/// product of its invariant factors.
pub fn minors_gcd(m: &[Vec<BigInt>], r: usize) -> BigInt {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if r == 0 {
        return BigInt::one();
    }
    let mut g = BigInt::zero();
    for rs in subsets(rows, r) {
        for cs in subsets(cols, r) {
            let sub: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect())
                .collect();
            g = g.gcd(&cofactor_det(&sub));
        }
    }
    g
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}
