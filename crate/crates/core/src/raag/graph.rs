use rand::Rng;

use super::RaagError;

/// Finite simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    // sorted neighbor lists
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn edgeless(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, RaagError> {
        let mut g = Self::edgeless(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&w| w != v).collect())
            .collect();
        SimpleGraph { adj }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).expect("cycle closing edge is new");
        }
        g
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Self::from_edges(10, &edges).expect("Petersen edges are valid")
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Self::edgeless(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).expect("fresh pair");
                }
            }
        }
        g
    }

    /// Adds `{u, v}`; loops, repeats and unknown vertices are errors.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), RaagError> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(RaagError::VertexOutOfRange {
                    vertex: w,
                    count: n,
                });
            }
        }
        if u == v {
            return Err(RaagError::Loop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(RaagError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|a| a.binary_search(&v).is_ok())
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, a) in self.adj.iter().enumerate() {
            out.extend(a.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Disjoint union: `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let shift = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|a| a.iter().map(|v| v + shift).collect()),
        );
        SimpleGraph { adj }
    }

    /// Edge-list format: `"V E"` then `E` lines `"u v"`.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn content_lines<'a>(
    text: &'a str,
    is_comment: impl Fn(&str) -> bool + 'a,
) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !is_comment(l))
}

fn parse_err(line: usize, message: impl Into<String>) -> RaagError {
    RaagError::Parse {
        line,
        message: message.into(),
    }
}

fn numbers<const N: usize>(line: usize, text: &str, what: &str) -> Result<[usize; N], RaagError> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    if toks.len() != N {
        return Err(parse_err(line, format!("expected {what}, found {text:?}")));
    }
    let mut out = [0; N];
    for (o, tok) in out.iter_mut().zip(&toks) {
        *o = tok
            .parse()
            .map_err(|_| parse_err(line, format!("not a vertex number: {tok:?}")))?;
    }
    Ok(out)
}

fn located(line: usize, e: RaagError) -> RaagError {
    match e {
        RaagError::Parse { .. } => e,
        other => parse_err(line, other.to_string()),
    }
}

/// Reads either format: DIMACS when the first content line starts with `c`
/// or `p`, the edge-list format otherwise.
pub fn parse_graph(text: &str) -> Result<SimpleGraph, RaagError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with('c') || l.starts_with('p') => parse_dimacs(text),
        _ => parse_edge_list(text),
    }
}

/// `"V E"` followed by `E` lines `"u v"`, 0-based. `#` starts a comment line.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, RaagError> {
    let mut lines = content_lines(text, |l| l.starts_with('#'));
    let (hline, htext) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let [n, e] = numbers::<2>(hline, htext, "header \"V E\"")?;
    let mut g = SimpleGraph::edgeless(n);
    let mut seen = 0;
    for (line, text) in lines {
        if seen == e {
            return Err(parse_err(line, format!("more than the declared {e} edges")));
        }
        let [u, v] = numbers::<2>(line, text, "edge \"u v\"")?;
        g.add_edge(u, v).map_err(|err| located(line, err))?;
        seen += 1;
    }
    if seen != e {
        return Err(parse_err(
            hline,
            format!("declared {e} edges, found {seen}"),
        ));
    }
    Ok(g)
}

/// DIMACS `.col`: `c` comments, `p edge V E`, then `e u v` with 1-based
/// vertices. Both orientations of an edge may appear; they are merged, so
/// the declared edge count is not checked.
pub fn parse_dimacs(text: &str) -> Result<SimpleGraph, RaagError> {
    let mut g: Option<SimpleGraph> = None;
    for (line, text) in content_lines(text, |l| l == "c" || l.starts_with("c ")) {
        let mut toks = text.split_whitespace();
        match toks.next() {
            Some("p") => {
                if g.is_some() {
                    return Err(parse_err(line, "second problem line"));
                }
                let rest: Vec<&str> = toks.collect();
                if rest.len() != 3 || !matches!(rest[0], "edge" | "col") {
                    return Err(parse_err(
                        line,
                        format!("expected \"p edge V E\", found {text:?}"),
                    ));
                }
                let [n, _] = numbers::<2>(line, &rest[1..].join(" "), "\"V E\"")?;
                g = Some(SimpleGraph::edgeless(n));
            }
            Some("e") => {
                let graph = g
                    .as_mut()
                    .ok_or_else(|| parse_err(line, "edge before problem line"))?;
                let rest: Vec<&str> = toks.collect();
                let [u, v] = numbers::<2>(line, &rest.join(" "), "edge \"e u v\"")?;
                if u == 0 || v == 0 {
                    return Err(parse_err(line, "DIMACS vertices are numbered from 1"));
                }
                match graph.add_edge(u - 1, v - 1) {
                    Ok(()) | Err(RaagError::DuplicateEdge(..)) => {}
                    Err(err) => return Err(located(line, err)),
                }
            }
            _ => return Err(parse_err(line, format!("unrecognized line {text:?}"))),
        }
    }
    g.ok_or_else(|| parse_err(1, "missing problem line"))
}
