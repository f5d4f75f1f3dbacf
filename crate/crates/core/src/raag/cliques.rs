use super::SimpleGraph;

/// Every clique of a graph, grouped by size. `by_size[0]` holds the empty
/// clique; each list is sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueTable {
    by_size: Vec<Vec<Vec<usize>>>,
}

impl CliqueTable {
    pub fn by_size(&self) -> &[Vec<Vec<usize>>] {
        &self.by_size
    }

    pub fn of_size(&self, k: usize) -> &[Vec<usize>] {
        self.by_size.get(k).map_or(&[], Vec::as_slice)
    }

    /// `[#0-cliques, #1-cliques, ..., #ω-cliques]`.
    pub fn counts(&self) -> Vec<usize> {
        self.by_size.iter().map(Vec::len).collect()
    }

    pub fn clique_number(&self) -> usize {
        self.by_size.len() - 1
    }

    pub fn total(&self) -> usize {
        self.by_size.iter().map(Vec::len).sum()
    }
}

/// All cliques, by extending each clique only with larger vertices adjacent
/// to every member. Each clique is produced exactly once.
pub fn cliques(g: &SimpleGraph) -> CliqueTable {
    let mut by_size: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    let mut current = Vec::new();
    for v in 0..g.vertex_count() {
        let candidates: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w > v).collect();
        current.push(v);
        extend(g, &mut current, &candidates, &mut by_size);
        current.pop();
    }
    for level in &mut by_size {
        level.sort_unstable();
    }
    CliqueTable { by_size }
}

fn extend(
    g: &SimpleGraph,
    current: &mut Vec<usize>,
    candidates: &[usize],
    by_size: &mut Vec<Vec<Vec<usize>>>,
) {
    if by_size.len() <= current.len() {
        by_size.push(Vec::new());
    }
    by_size[current.len()].push(current.clone());
    for (i, &w) in candidates.iter().enumerate() {
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&x| g.has_edge(w, x))
            .collect();
        current.push(w);
        extend(g, current, &next, by_size);
        current.pop();
    }
}

/// Vertices in degeneracy order: repeatedly remove a vertex of minimum
/// remaining degree (smallest index on ties).
pub fn degeneracy_order(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.neighbors(v).len()).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("a vertex remains");
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    order
}

/// Maximal cliques by Bron–Kerbosch with pivoting, outer loop in
/// degeneracy order. Each clique is sorted; the list is sorted.
pub fn maximal_cliques(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let order = degeneracy_order(g);
    let mut position = vec![0; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut out = Vec::new();
    for &v in &order {
        let (later, earlier): (Vec<usize>, Vec<usize>) = g
            .neighbors(v)
            .iter()
            .partition(|&&w| position[w] > position[v]);
        bron_kerbosch(g, &mut vec![v], later, earlier, &mut out);
    }
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort_unstable();
    out
}

fn bron_kerbosch(
    g: &SimpleGraph,
    r: &mut Vec<usize>,
    mut p: Vec<usize>,
    mut x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    // pivot with the most neighbors in P
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| {
            (
                p.iter().filter(|&&w| g.has_edge(u, w)).count(),
                std::cmp::Reverse(u),
            )
        })
        .expect("P is nonempty");
    let branch: Vec<usize> = p
        .iter()
        .copied()
        .filter(|&v| !g.has_edge(pivot, v))
        .collect();
    for v in branch {
        let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// Size of the largest clique; 0 for the graph with no vertices.
pub fn clique_number(g: &SimpleGraph) -> usize {
    maximal_cliques(g).iter().map(Vec::len).max().unwrap_or(0)
}

/// A largest clique, smallest lexicographically among those.
pub fn maximum_clique(g: &SimpleGraph) -> Vec<usize> {
    let all = maximal_cliques(g);
    let best = all.iter().map(Vec::len).max().unwrap_or(0);
    all.into_iter()
        .find(|c| c.len() == best)
        .unwrap_or_default()
}
