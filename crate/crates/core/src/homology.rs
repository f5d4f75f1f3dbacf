//! Finite chain complexes of free abelian groups and their integral
//! (co)homology via Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::lattice::{smith_normal_form, IntMatrix, LatticeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("boundary {degree} has shape {found:?}, expected {expected:?}")]
    BoundaryShape {
        degree: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("expected {expected} boundary matrices for top degree, found {found}")]
    BoundaryCount { expected: usize, found: usize },
    #[error("boundary {degree} composed with boundary {next} is nonzero", next = degree + 1)]
    NotAComplex { degree: usize },
    #[error("degree {degree} out of range 0..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl From<LatticeError> for HomologyError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::Parse { line, message } => HomologyError::Parse { line, message },
            other => HomologyError::Parse {
                line: 0,
                message: other.to_string(),
            },
        }
    }
}

/// `0 → C_d → … → C_1 → C_0 → 0`, each `C_k` free of rank `cell_counts[k]`.
///
/// `∂_k ∘ ∂_{k+1} = 0` is checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    cell_counts: Vec<usize>,
    // boundaries[k - 1] is ∂_k : C_k → C_{k-1}, shape c_{k-1} × c_k
    boundaries: Vec<IntMatrix>,
}

/// A finitely generated abelian group `Z^betti ⊕ ⊕ Z/t_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyGroup {
    pub degree: usize,
    pub betti: usize,
    /// Entries ≥ 2 in divisibility order.
    pub torsion: Vec<BigInt>,
}

impl CohomologyGroup {
    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for CohomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.betti > 0 {
            parts.push(if self.betti == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.betti)
            });
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

fn shape_errors(cell_counts: &[usize], boundaries: &[IntMatrix]) -> Result<(), HomologyError> {
    let expected = cell_counts.len().saturating_sub(1);
    if boundaries.len() != expected {
        return Err(HomologyError::BoundaryCount {
            expected,
            found: boundaries.len(),
        });
    }
    for (i, b) in boundaries.iter().enumerate() {
        let k = i + 1;
        let expected = (cell_counts[k - 1], cell_counts[k]);
        if b.shape() != expected {
            return Err(HomologyError::BoundaryShape {
                degree: k,
                expected,
                found: b.shape(),
            });
        }
    }
    Ok(())
}

fn first_nonzero_composite(boundaries: &[IntMatrix]) -> Option<usize> {
    boundaries
        .windows(2)
        .position(|w| !(&w[0] * &w[1]).is_zero())
        .map(|i| i + 1)
}

/// Whether the data form a chain complex: shapes agree and every `∂∂` vanishes.
pub fn validate(cell_counts: &[usize], boundaries: &[IntMatrix]) -> bool {
    shape_errors(cell_counts, boundaries).is_ok() && first_nonzero_composite(boundaries).is_none()
}

impl ChainComplex {
    pub fn new(cell_counts: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self, HomologyError> {
        shape_errors(&cell_counts, &boundaries)?;
        if let Some(degree) = first_nonzero_composite(&boundaries) {
            return Err(HomologyError::NotAComplex { degree });
        }
        Ok(ChainComplex {
            cell_counts,
            boundaries,
        })
    }

    /// All boundary maps zero.
    pub fn with_zero_boundaries(cell_counts: Vec<usize>) -> Self {
        let boundaries = cell_counts
            .windows(2)
            .map(|w| IntMatrix::zeros(w[0], w[1]))
            .collect();
        ChainComplex {
            cell_counts,
            boundaries,
        }
    }

    pub fn top_degree(&self) -> usize {
        self.cell_counts.len().saturating_sub(1)
    }

    pub fn cell_counts(&self) -> &[usize] {
        &self.cell_counts
    }

    /// `∂_k`, for `1 ≤ k ≤ top_degree`.
    pub fn boundary(&self, k: usize) -> Option<&IntMatrix> {
        k.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    fn check_degree(&self, k: usize) -> Result<(), HomologyError> {
        if self.cell_counts.is_empty() || k > self.top_degree() {
            return Err(HomologyError::DegreeOutOfRange {
                degree: k,
                top: self.top_degree(),
            });
        }
        Ok(())
    }

    /// Rank and nontrivial invariant factors of `∂_k`; zero map outside `1..=d`.
    fn boundary_invariants(&self, k: usize) -> (usize, Vec<BigInt>) {
        match self.boundary(k) {
            Some(b) => split_factors(smith_normal_form(b).invariant_factors()),
            None => (0, Vec::new()),
        }
    }

    /// `H_k = ker ∂_k / im ∂_{k+1}`.
    pub fn homology(&self, k: usize) -> Result<CohomologyGroup, HomologyError> {
        self.check_degree(k)?;
        let (rank_k, _) = self.boundary_invariants(k);
        let (rank_next, torsion) = self.boundary_invariants(k + 1);
        let betti = self.cell_counts[k] - rank_k - rank_next;
        Ok(CohomologyGroup {
            degree: k,
            betti,
            torsion,
        })
    }

    /// `H^k` of the dual cochain complex `δ_k = ∂_{k+1}ᵀ`.
    pub fn cohomology(&self, k: usize) -> Result<CohomologyGroup, HomologyError> {
        self.check_degree(k)?;
        let coboundary = |j: usize| self.boundary(j + 1).map(IntMatrix::transpose);
        let invariants = |m: Option<IntMatrix>| match m {
            Some(m) => split_factors(smith_normal_form(&m).invariant_factors()),
            None => (0, Vec::new()),
        };
        let (rank_k, _) = invariants(coboundary(k));
        let (rank_prev, torsion) = match k.checked_sub(1) {
            Some(j) => invariants(coboundary(j)),
            None => (0, Vec::new()),
        };
        let betti = self.cell_counts[k] - rank_k - rank_prev;
        Ok(CohomologyGroup {
            degree: k,
            betti,
            torsion,
        })
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cell_counts
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Parses the chain-complex text format:
    ///
    /// ```text
    /// degrees d
    /// c_0 c_1 ... c_d
    /// # boundary 1
    /// rows cols
    /// ...
    /// ```
    pub fn parse(text: &str) -> Result<Self, HomologyError> {
        parse_complex(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("degrees {}\n", self.top_degree());
        let counts: Vec<String> = self.cell_counts.iter().map(ToString::to_string).collect();
        out.push_str(&counts.join(" "));
        out.push('\n');
        for (i, b) in self.boundaries.iter().enumerate() {
            out.push_str(&format!(
                "# boundary {}\n{} {}\n{}",
                i + 1,
                b.rows(),
                b.cols(),
                b
            ));
        }
        out
    }
}

fn split_factors(factors: Vec<BigInt>) -> (usize, Vec<BigInt>) {
    let rank = factors.len();
    (rank, factors.into_iter().filter(|d| !d.is_one()).collect())
}

fn parse_complex(text: &str) -> Result<ChainComplex, HomologyError> {
    let perr = |line: usize, message: String| HomologyError::Parse { line, message };
    let mut header: Vec<(usize, &str)> = Vec::new();
    let mut blocks: Vec<(usize, usize, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if let Some(rest) = t.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(k) = rest.strip_prefix("boundary") {
                let k: usize = k
                    .trim()
                    .parse()
                    .map_err(|_| perr(line, format!("bad boundary header: {t:?}")))?;
                blocks.push((k, line, String::new()));
            }
            continue;
        }
        if t.is_empty() {
            continue;
        }
        match blocks.last_mut() {
            // keep original numbering by padding with blank lines
            Some((_, start, body)) => {
                while body.lines().count() + *start < line - 1 {
                    body.push('\n');
                }
                body.push_str(t);
                body.push('\n');
            }
            None => header.push((line, t)),
        }
    }
    let mut head = header.into_iter();
    let (dline, dtext) = head.next().ok_or_else(|| perr(1, "empty input".into()))?;
    let top: usize = dtext
        .strip_prefix("degrees")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| perr(dline, format!("expected \"degrees d\", found {dtext:?}")))?;
    let (cline, ctext) = head
        .next()
        .ok_or_else(|| perr(dline, "missing cell counts".into()))?;
    let counts: Vec<usize> = ctext
        .split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| perr(cline, format!("bad cell count {tok:?}")))
        })
        .collect::<Result<_, _>>()?;
    if counts.len() != top + 1 {
        return Err(perr(
            cline,
            format!("expected {} cell counts, found {}", top + 1, counts.len()),
        ));
    }
    if let Some((line, t)) = head.next() {
        return Err(perr(
            line,
            format!("unexpected line before boundary blocks: {t:?}"),
        ));
    }
    let mut boundaries: Vec<Option<IntMatrix>> = vec![None; top];
    for (k, start, body) in blocks {
        if k == 0 || k > top {
            return Err(perr(
                start,
                format!("boundary degree {k} outside 1..={top}"),
            ));
        }
        if boundaries[k - 1].is_some() {
            return Err(perr(start, format!("boundary {k} given twice")));
        }
        let m = crate::lattice::parse_matrix_block(&body).map_err(|e| match e {
            LatticeError::Parse { line, message } => perr(start + line, message),
            other => perr(start, other.to_string()),
        })?;
        boundaries[k - 1] = Some(m);
    }
    let boundaries = boundaries
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| perr(0, format!("missing boundary {}", i + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    ChainComplex::new(counts, boundaries)
}
