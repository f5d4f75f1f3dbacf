//! Plain-text lattice files.
//!
//! ```text
//! n r
//! a_11 ... a_1n
//! ...
//! a_r1 ... a_rn
//! ```
//!
//! A file may hold several such blocks back to back. Blank lines and lines
//! starting with `#` are ignored.

use num_bigint::BigInt;

use super::{IntMatrix, LatticeError, Sublattice};

fn parse_err(line: usize, message: impl Into<String>) -> LatticeError {
    LatticeError::Parse {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_ints(line: usize, s: &str) -> Result<Vec<BigInt>, LatticeError> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<BigInt>()
                .map_err(|_| parse_err(line, format!("not an integer: {tok:?}")))
        })
        .collect()
}

fn parse_count(line: usize, tok: Option<&str>, what: &str) -> Result<usize, LatticeError> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what}: {tok:?}")))
}

/// Reads a `rows cols` header followed by that many rows from `lines`.
pub(crate) fn read_matrix<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    header: (usize, &str),
) -> Result<IntMatrix, LatticeError> {
    let (hline, htext) = header;
    let mut toks = htext.split_whitespace();
    let rows = parse_count(hline, toks.next(), "row count")?;
    let cols = parse_count(hline, toks.next(), "column count")?;
    if toks.next().is_some() {
        return Err(parse_err(hline, "header must have exactly two numbers"));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let (line, text) = lines
            .next()
            .ok_or_else(|| parse_err(hline, format!("expected {rows} rows, found {r}")))?;
        let row = parse_ints(line, text)?;
        if row.len() != cols {
            return Err(parse_err(
                line,
                format!("expected {cols} entries, found {}", row.len()),
            ));
        }
        data.extend(row);
    }
    Ok(IntMatrix::from_vec(rows, cols, data))
}

/// Parses a bare `rows cols` matrix block (used by the chain-complex format).
pub fn parse_matrix_block(text: &str) -> Result<IntMatrix, LatticeError> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let m = read_matrix(&mut lines, header)?;
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, "trailing content after matrix"));
    }
    Ok(m)
}

/// Parses every generator block in `text` without reducing it. The header
/// is `n r`: ambient dimension, then generator count; the result is `r × n`.
pub fn parse_generator_matrices(text: &str) -> Result<Vec<IntMatrix>, LatticeError> {
    let mut lines = content_lines(text);
    let mut out = Vec::new();
    while let Some((hline, htext)) = lines.next() {
        let mut toks = htext.split_whitespace();
        let n = parse_count(hline, toks.next(), "ambient dimension")?;
        let r = parse_count(hline, toks.next(), "generator count")?;
        if toks.next().is_some() {
            return Err(parse_err(hline, "header must be \"n r\""));
        }
        let header = format!("{r} {n}");
        out.push(read_matrix(&mut lines, (hline, &header))?);
    }
    if out.is_empty() {
        return Err(parse_err(1, "no lattice found"));
    }
    Ok(out)
}

/// Parses every lattice block in `text`, each reduced to canonical form.
pub fn parse_lattices(text: &str) -> Result<Vec<Sublattice>, LatticeError> {
    Ok(parse_generator_matrices(text)?
        .iter()
        .map(Sublattice::from_matrix)
        .collect())
}

pub fn parse_lattice(text: &str) -> Result<Sublattice, LatticeError> {
    let mut all = parse_lattices(text)?;
    if all.len() != 1 {
        return Err(parse_err(
            1,
            format!("expected one lattice, found {}", all.len()),
        ));
    }
    Ok(all.remove(0))
}

/// Canonical basis in the same file format.
pub fn format_lattice(l: &Sublattice) -> String {
    format!("{} {}\n{}", l.ambient_dim(), l.rank(), l.basis())
}
