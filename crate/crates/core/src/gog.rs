//! Graphs of groups with virtually abelian vertex groups.
//!
//! Vertex and edge groups are described only by the rank of a finite-index
//! free abelian subgroup; rank 0 means finite. Acylindricity of the
//! splitting is taken from the input, not computed.
//!
//! Text format, one item per line, `#` starts a comment:
//!
//! ```text
//! vertex a rank=2
//! vertex b rank=3
//! edge a b finite        # or rank=<r>
//! acylindrical = true
//! ```

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::dims::{
    cell_stabilizer_bound, citations, virtually_abelian_fact, DimBound, DimFact, DimsError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GogError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: unknown vertex {name:?}")]
    UnknownVertex { line: usize, name: String },
    #[error("line {line}: vertex {name:?} declared twice")]
    DuplicateVertex { line: usize, name: String },
    #[error(
        "line {line}: edge {a}-{b} has rank {edge_rank}, more than the smaller endpoint rank {bound}"
    )]
    RankViolation {
        line: usize,
        a: String,
        b: String,
        edge_rank: u64,
        bound: u64,
    },
    #[error("underlying graph is disconnected: {unreached:?} cannot be reached from {root:?}")]
    Disconnected { root: String, unreached: String },
    #[error("graph of groups has no vertices")]
    Empty,
    #[error("splitting is not marked acylindrical")]
    NotAcylindrical,
    #[error("k = {0} is outside k >= 1")]
    KZero(u64),
    #[error(transparent)]
    Dims(#[from] DimsError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexGroupDesc {
    pub name: String,
    pub rank: u64,
}

impl VertexGroupDesc {
    pub fn is_infinite(&self) -> bool {
        self.rank >= 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeDesc {
    pub source: usize,
    pub target: usize,
    /// 0 for a finite edge group.
    pub rank: u64,
}

impl EdgeDesc {
    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphOfGroups {
    vertices: Vec<VertexGroupDesc>,
    edges: Vec<EdgeDesc>,
    acylindrical: bool,
}

/// Incremental construction with the same checks as the parser.
#[derive(Debug, Default)]
pub struct GogBuilder {
    vertices: Vec<VertexGroupDesc>,
    by_name: HashMap<String, usize>,
    edges: Vec<EdgeDesc>,
    acylindrical: bool,
}

impl GogBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, name: &str, rank: u64) -> Result<Self, GogError> {
        self.add_vertex(0, name, rank)?;
        Ok(self)
    }

    pub fn edge(mut self, a: &str, b: &str, rank: u64) -> Result<Self, GogError> {
        self.add_edge(0, a, b, rank)?;
        Ok(self)
    }

    pub fn acylindrical(mut self, flag: bool) -> Self {
        self.acylindrical = flag;
        self
    }

    fn add_vertex(&mut self, line: usize, name: &str, rank: u64) -> Result<(), GogError> {
        if self.by_name.contains_key(name) {
            return Err(GogError::DuplicateVertex {
                line,
                name: name.into(),
            });
        }
        self.by_name.insert(name.into(), self.vertices.len());
        self.vertices.push(VertexGroupDesc {
            name: name.into(),
            rank,
        });
        Ok(())
    }

    fn lookup(&self, line: usize, name: &str) -> Result<usize, GogError> {
        self.by_name
            .get(name)
            .copied()
            .ok_or_else(|| GogError::UnknownVertex {
                line,
                name: name.into(),
            })
    }

    fn add_edge(&mut self, line: usize, a: &str, b: &str, rank: u64) -> Result<(), GogError> {
        let source = self.lookup(line, a)?;
        let target = self.lookup(line, b)?;
        let bound = self.vertices[source].rank.min(self.vertices[target].rank);
        // an injective image of a virtually Z^r group has rank r
        if rank > bound {
            return Err(GogError::RankViolation {
                line,
                a: a.into(),
                b: b.into(),
                edge_rank: rank,
                bound,
            });
        }
        self.edges.push(EdgeDesc {
            source,
            target,
            rank,
        });
        Ok(())
    }

    pub fn build(self) -> Result<GraphOfGroups, GogError> {
        let n = self.vertices.len();
        if n == 0 {
            return Err(GogError::Empty);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                for (x, y) in [(e.source, e.target), (e.target, e.source)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        if let Some(u) = seen.iter().position(|s| !s) {
            return Err(GogError::Disconnected {
                root: self.vertices[0].name.clone(),
                unreached: self.vertices[u].name.clone(),
            });
        }
        Ok(GraphOfGroups {
            vertices: self.vertices,
            edges: self.edges,
            acylindrical: self.acylindrical,
        })
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> GogError {
    GogError::Parse {
        line,
        message: message.into(),
    }
}

/// `rank=<r>`, `rank=finite`, or a bare `finite`.
fn parse_rank(line: usize, tok: &str) -> Result<u64, GogError> {
    let value = match tok.strip_prefix("rank=") {
        Some(v) => v,
        None if tok == "finite" => return Ok(0),
        None => {
            return Err(parse_err(
                line,
                format!("expected rank=<r> or finite, found {tok:?}"),
            ))
        }
    };
    if value == "finite" {
        return Ok(0);
    }
    value
        .parse()
        .map_err(|_| parse_err(line, format!("bad rank {value:?}")))
}

pub fn parse_gog(text: &str) -> Result<GraphOfGroups, GogError> {
    let mut b = GogBuilder::new();
    let mut acylindrical_seen = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks[0] {
            "vertex" => {
                let [_, name, rank] = toks[..] else {
                    return Err(parse_err(line, "expected \"vertex <name> rank=<r>\""));
                };
                let rank = parse_rank(line, rank)?;
                b.add_vertex(line, name, rank)?;
            }
            "edge" => {
                let [_, a, c, rank] = toks[..] else {
                    return Err(parse_err(line, "expected \"edge <a> <b> rank=<r>|finite\""));
                };
                let rank = parse_rank(line, rank)?;
                b.add_edge(line, a, c, rank)?;
            }
            word if word.starts_with("acylindrical") => {
                let joined: String = content.split_whitespace().collect();
                let value = joined
                    .strip_prefix("acylindrical=")
                    .ok_or_else(|| parse_err(line, "expected \"acylindrical = true|false\""))?;
                if acylindrical_seen {
                    return Err(parse_err(line, "acylindrical given twice"));
                }
                acylindrical_seen = true;
                b.acylindrical = match value {
                    "true" => true,
                    "false" => false,
                    other => {
                        return Err(parse_err(
                            line,
                            format!("expected true or false, found {other:?}"),
                        ))
                    }
                };
            }
            other => return Err(parse_err(line, format!("unknown directive {other:?}"))),
        }
    }
    b.build()
}

impl GraphOfGroups {
    pub fn vertices(&self) -> &[VertexGroupDesc] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeDesc] {
        &self.edges
    }

    pub fn is_acylindrical(&self) -> bool {
        self.acylindrical
    }

    pub fn edge_name(&self, e: &EdgeDesc) -> String {
        format!(
            "{}-{}",
            self.vertices[e.source].name, self.vertices[e.target].name
        )
    }

    /// `m`, the largest vertex rank.
    pub fn max_vertex_rank(&self) -> u64 {
        self.vertices.iter().map(|v| v.rank).max().unwrap_or(0)
    }

    /// Hypotheses of the exact formula that fail for this `k`.
    pub fn exact_formula_obstructions(&self, k: u64) -> Vec<String> {
        let mut out = Vec::new();
        if !self.acylindrical {
            out.push("splitting is not marked acylindrical".to_string());
        }
        for v in self.vertices.iter().filter(|v| !v.is_infinite()) {
            out.push(format!("vertex {} is finite", v.name));
        }
        for e in &self.edges {
            let (rs, rt) = (self.vertices[e.source].rank, self.vertices[e.target].rank);
            if e.rank >= rs || e.rank >= rt {
                out.push(format!(
                    "edge {} has rank {}, not below both endpoint ranks {rs} and {rt}",
                    self.edge_name(e),
                    e.rank
                ));
            }
        }
        let m = self.max_vertex_rank();
        if k == 0 || k >= m {
            out.push(format!("k = {k} is outside 1 <= k < m = {m}"));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellKind {
    TreeVertex,
    ConePoint,
    TreeEdge,
    ConeEdge,
    Square,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilizerClass {
    VertexGroup(String),
    EdgeGroup(String),
    VirtuallyCyclic,
}

impl fmt::Display for StabilizerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilizerClass::VertexGroup(v) => write!(f, "G_{v}"),
            StabilizerClass::EdgeGroup(e) => write!(f, "G_{e}"),
            StabilizerClass::VirtuallyCyclic => f.write_str("virtually cyclic"),
        }
    }
}

/// One orbit class of cells in the tree with geodesic axes coned off.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellClass {
    pub kind: CellKind,
    pub dim: u64,
    pub stabilizer: StabilizerClass,
    /// Orbits in this class; `None` when indexed by axes, which the
    /// descriptor does not enumerate.
    pub count: Option<usize>,
    /// `gd` of the stabilizer for the restricted family.
    pub bound: DimBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCensus {
    pub k: u64,
    pub classes: Vec<CellClass>,
}

impl CellCensus {
    /// Every cone point, cone edge and square is stabilized by a virtually
    /// cyclic group, and tree vertices by vertex groups.
    pub fn is_well_formed(&self) -> bool {
        self.classes.iter().all(|c| match c.kind {
            CellKind::TreeVertex => matches!(c.stabilizer, StabilizerClass::VertexGroup(_)),
            CellKind::TreeEdge => matches!(c.stabilizer, StabilizerClass::EdgeGroup(_)),
            CellKind::ConePoint | CellKind::ConeEdge | CellKind::Square => {
                c.stabilizer == StabilizerClass::VirtuallyCyclic
            }
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.classes {
            let count = c.count.map_or("per axis".to_string(), |n| n.to_string());
            out.push_str(&format!(
                "{}-cell {:?} stabilizer={} count={} gd {}\n",
                c.dim,
                c.kind,
                c.stabilizer,
                count,
                c.bound.relation()
            ));
        }
        out
    }
}

/// Restricted-family `gd` of a virtually `Z^rank` group: `rank + k` when
/// `k < rank`, else the degenerate 0.
pub fn restricted_term(rank: u64, k: u64) -> DimFact {
    virtually_abelian_fact(rank, k)
}

/// Builds the census of cell classes for `F_k`, `k >= 1`. Virtually cyclic
/// groups lie in `F_1`, so their restricted `gd` is 0.
pub fn cell_census(y: &GraphOfGroups, k: u64) -> Result<CellCensus, GogError> {
    if k == 0 {
        return Err(GogError::KZero(k));
    }
    let vc = DimBound::exact(0);
    let mut classes = Vec::new();
    for v in &y.vertices {
        classes.push(CellClass {
            kind: CellKind::TreeVertex,
            dim: 0,
            stabilizer: StabilizerClass::VertexGroup(v.name.clone()),
            count: Some(1),
            bound: restricted_term(v.rank, k).bound,
        });
    }
    let axis_class = |kind, dim| CellClass {
        kind,
        dim,
        stabilizer: StabilizerClass::VirtuallyCyclic,
        count: None,
        bound: vc,
    };
    classes.push(axis_class(CellKind::ConePoint, 0));
    for e in &y.edges {
        classes.push(CellClass {
            kind: CellKind::TreeEdge,
            dim: 1,
            stabilizer: StabilizerClass::EdgeGroup(y.edge_name(e)),
            count: Some(1),
            bound: restricted_term(e.rank, k).bound,
        });
    }
    classes.push(axis_class(CellKind::ConeEdge, 1));
    classes.push(axis_class(CellKind::Square, 2));
    Ok(CellCensus { k, classes })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BassSerreBounds {
    pub bound: DimBound,
    pub census: CellCensus,
    /// The vertex and edge terms, in input order (vertices first).
    pub terms: Vec<DimFact>,
}

/// Two-sided bound for an acylindrical splitting and `k >= 1`: below by
/// every vertex and edge term, above by the cell stabilizers of the
/// coned-off tree.
pub fn bass_serre_bounds(y: &GraphOfGroups, k: u64) -> Result<BassSerreBounds, GogError> {
    if !y.acylindrical {
        return Err(GogError::NotAcylindrical);
    }
    let census = cell_census(y, k)?;
    let terms = subgroup_terms(y, k);
    let lower = terms.iter().map(|t| t.bound.lower()).max().unwrap_or(0);
    let cells: Vec<(DimBound, u64)> = census.classes.iter().map(|c| (c.bound, c.dim)).collect();
    let upper = cell_stabilizer_bound(&cells)?;
    let bound = upper.intersect(&DimBound::at_least(lower))?;
    Ok(BassSerreBounds {
        bound,
        census,
        terms,
    })
}

fn subgroup_terms(y: &GraphOfGroups, k: u64) -> Vec<DimFact> {
    let mut terms = Vec::new();
    for v in &y.vertices {
        let mut t = restricted_term(v.rank, k);
        t.quantity = format!("gd_F{k}(G_{})", v.name);
        terms.push(t);
    }
    for e in &y.edges {
        let mut t = restricted_term(e.rank, k);
        t.quantity = format!("gd_F{k}(G_{})", y.edge_name(e));
        terms.push(t);
    }
    terms
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GogResult {
    pub fact: DimFact,
    /// True when the exact formula applied.
    pub exact: bool,
    /// Why the exact formula did not apply.
    pub diagnostics: Vec<String>,
    pub bounds: Option<BassSerreBounds>,
}

/// `gd_{F_k}(π_1(Y)) = m + k` when the formula's hypotheses hold; otherwise
/// the best available bounds, with the failed hypotheses listed.
pub fn gog_gd(y: &GraphOfGroups, k: u64) -> Result<GogResult, GogError> {
    let diagnostics = y.exact_formula_obstructions(k);
    let quantity = format!("gd_F{k}(G)");
    if diagnostics.is_empty() {
        let m = y.max_vertex_rank();
        let bounds = bass_serre_bounds(y, k)?;
        let fact = DimFact::new(quantity, DimBound::exact(m + k), citations::GOG_FORMULA)
            .with_note("gd = cd");
        if bounds.bound != fact.bound {
            return Err(GogError::Dims(DimsError::Incompatible {
                left: bounds.bound,
                right: fact.bound,
            }));
        }
        return Ok(GogResult {
            fact,
            exact: true,
            diagnostics,
            bounds: Some(bounds),
        });
    }
    match bass_serre_bounds(y, k) {
        Ok(bounds) => {
            let fact = DimFact::new(quantity, bounds.bound, citations::GOG_BOUNDS);
            Ok(GogResult {
                fact,
                exact: false,
                diagnostics,
                bounds: Some(bounds),
            })
        }
        Err(GogError::NotAcylindrical | GogError::KZero(_)) => {
            // only the subgroup bound survives
            let lower = subgroup_terms(y, k)
                .iter()
                .map(|t| t.bound.lower())
                .max()
                .unwrap_or(0);
            let fact = DimFact::new(
                quantity,
                DimBound::at_least(lower),
                citations::SUBGROUP_LOWER,
            )
            .with_note("lower bound only: every vertex and edge group is a subgroup");
            Ok(GogResult {
                fact,
                exact: false,
                diagnostics,
                bounds: None,
            })
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_THREE: &str =
        "vertex a rank=2\nvertex b rank=3\nedge a b finite\nacylindrical = true\n";

    #[test]
    fn parse_valid() {
        let y = parse_gog(TWO_THREE).unwrap();
        assert_eq!(y.max_vertex_rank(), 3);
        assert!(y.is_acylindrical());
        assert!(y.edges()[0].is_finite());
        let single = parse_gog("vertex v rank=3\n").unwrap();
        assert!(!single.is_acylindrical());
        let y = parse_gog("# comment\nvertex a rank=5 # five\nvertex b rank=5\nvertex c rank=2\nedge a b rank=1\nedge b c rank=finite\nacylindrical=false\n").unwrap();
        assert_eq!(y.max_vertex_rank(), 5);
    }

    #[test]
    fn parse_errors() {
        let e = parse_gog("vertex a rank=2\nvertex b rank=2\nedge a b rank=4\n").unwrap_err();
        assert!(matches!(
            e,
            GogError::RankViolation {
                line: 3,
                edge_rank: 4,
                bound: 2,
                ..
            }
        ));
        assert!(matches!(
            parse_gog("vertex a rank=2\nvertex b rank=2\n"),
            Err(GogError::Disconnected { .. })
        ));
        assert!(matches!(
            parse_gog("vertex a rank=x\n"),
            Err(GogError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_gog("vertex a rank=1\nedge a z finite\n"),
            Err(GogError::UnknownVertex { line: 2, .. })
        ));
        assert!(matches!(
            parse_gog("vertex a rank=1\nvertex a rank=1\n"),
            Err(GogError::DuplicateVertex { line: 2, .. })
        ));
        assert!(matches!(parse_gog("# nothing\n"), Err(GogError::Empty)));
        assert!(matches!(
            parse_gog("vertex a rank=1\nacylindrical = maybe\n"),
            Err(GogError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_gog("node a\n"),
            Err(GogError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn exact_formula() {
        let y = parse_gog(TWO_THREE).unwrap();
        for k in 1..=2 {
            let r = gog_gd(&y, k).unwrap();
            assert!(r.exact);
            assert_eq!(r.fact.bound, DimBound::exact(3 + k));
        }
        let y = GogBuilder::new()
            .vertex("a", 2)
            .unwrap()
            .vertex("b", 3)
            .unwrap()
            .edge("a", "b", 1)
            .unwrap()
            .acylindrical(true)
            .build()
            .unwrap();
        assert_eq!(gog_gd(&y, 1).unwrap().fact.bound, DimBound::exact(4));
    }

    #[test]
    fn bounds_and_fallbacks() {
        let y = parse_gog(TWO_THREE).unwrap();
        assert_eq!(bass_serre_bounds(&y, 1).unwrap().bound, DimBound::exact(4));

        let single = parse_gog("vertex v rank=4\nacylindrical = true\n").unwrap();
        assert_eq!(
            bass_serre_bounds(&single, 2).unwrap().bound,
            DimBound::exact(6)
        );

        let y =
            parse_gog("vertex a rank=2\nvertex b rank=2\nedge a b rank=2\nacylindrical = true\n")
                .unwrap();
        let r = gog_gd(&y, 1).unwrap();
        assert!(!r.exact);
        assert_eq!(r.fact.bound, DimBound::new(3, Some(4)).unwrap());
        assert_eq!(r.diagnostics.len(), 1);

        let r = gog_gd(&parse_gog(TWO_THREE).unwrap(), 0).unwrap();
        assert_eq!(r.fact.bound, DimBound::at_least(3));
        assert!(r.bounds.is_none());

        let not_acyl = TWO_THREE.replace("true", "false");
        let y = parse_gog(&not_acyl).unwrap();
        assert_eq!(
            bass_serre_bounds(&y, 1).unwrap_err(),
            GogError::NotAcylindrical
        );
        assert_eq!(gog_gd(&y, 1).unwrap().fact.bound, DimBound::at_least(4));
    }

    #[test]
    fn census_shape() {
        let y = parse_gog(TWO_THREE).unwrap();
        let c = cell_census(&y, 1).unwrap();
        assert!(c.is_well_formed());
        assert_eq!(c.classes.len(), 2 + 1 + 1 + 1 + 1);
        assert!(c
            .classes
            .iter()
            .filter(|c| c.dim == 2)
            .all(|c| c.count.is_none()));
        assert!(c
            .render()
            .contains("2-cell Square stabilizer=virtually cyclic count=per axis gd = 0"));
    }
}
