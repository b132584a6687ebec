//! Simple undirected graphs on at most 62 vertices, with the degree and
//! 2-walk bookkeeping the rest of the crate is built on.

use crate::error::{Error, Result};

/// Largest supported vertex count (keeps every graph encodable in
/// short-form graph6).
pub const MAX_VERTICES: usize = 62;

/// A simple undirected graph stored as sorted adjacency lists.
///
/// Invariants: no self-loops, no duplicate neighbors, symmetric adjacency,
/// neighbor lists sorted ascending, `1 <= n <= 62`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { n, adjacency })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adjacency[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degrees of all vertices.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Relabels the graph: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let edges: Vec<(usize, usize)> = self
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edges(self.n, &edges).expect("permutation preserves validity")
    }
}

/// Per-vertex degrees `d(v)` and 2-walk sums `s(v)`, where `s(v)` adds up
/// the degrees of the neighbors of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoWalkProfile {
    pub degrees: Vec<usize>,
    pub two_walk_sums: Vec<usize>,
}

/// Computes the degree / 2-walk profile of a graph.
pub fn degree_profile(g: &Graph) -> TwoWalkProfile {
    let degrees = g.degrees();
    let two_walk_sums = (0..g.n())
        .map(|v| g.neighbors(v).iter().map(|&u| degrees[u]).sum())
        .collect();
    TwoWalkProfile {
        degrees,
        two_walk_sums,
    }
}

/// True when every vertex is reachable from vertex 0.
pub fn is_connected(g: &Graph) -> bool {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == g.n()
}

fn component_count(g: &Graph) -> usize {
    let mut seen = vec![false; g.n()];
    let mut components = 0;
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    components
}

/// Smallest vertex degree.
pub fn min_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).min().unwrap_or(0)
}

/// Cyclomatic number: `|E| - n + (number of connected components)`.
pub fn cycle_rank(g: &Graph) -> usize {
    g.edge_count() + component_count(g) - g.n()
}

/// Connected with exactly one more edge than vertices.
pub fn is_bicyclic(g: &Graph) -> bool {
    is_connected(g) && g.edge_count() == g.n() + 1
}

/// Result of deleting all pendant vertices in a single pass.
#[derive(Clone, Debug)]
pub struct CoreDecomposition {
    /// The graph induced on the vertices of degree >= 2.
    pub core: Graph,
    /// Maps each core vertex index back to its index in the input graph.
    pub core_to_original: Vec<usize>,
    /// For each core vertex, the number of deleted pendant neighbors.
    pub pendant_count_at: Vec<usize>,
}

impl CoreDecomposition {
    /// Degree a core vertex had in the original graph.
    pub fn original_degree(&self, core_vertex: usize) -> usize {
        self.core.degree(core_vertex) + self.pendant_count_at[core_vertex]
    }
}

/// Removes every vertex of degree exactly 1, in one pass. The pass is not
/// iterated: the core it returns may itself contain vertices of degree 1.
pub fn delete_pendants(g: &Graph) -> Result<CoreDecomposition> {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) != 1).collect();
    if keep.len() <= 1 {
        return Err(Error::CoreEmpty);
    }
    let mut new_index = vec![usize::MAX; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        new_index[v] = i;
    }
    let mut edges = Vec::new();
    let mut pendant_count_at = vec![0usize; keep.len()];
    for (i, &v) in keep.iter().enumerate() {
        for &u in g.neighbors(v) {
            if g.degree(u) == 1 {
                pendant_count_at[i] += 1;
            } else if v < u {
                edges.push((i, new_index[u]));
            }
        }
    }
    let core = Graph::from_edges(keep.len(), &edges)?;
    Ok(CoreDecomposition {
        core,
        core_to_original: keep,
        pendant_count_at,
    })
}

/// Iterates pendant deletion until no degree-1 vertex remains (the 2-core).
/// Returns the stable core and the map back to original vertex indices.
pub fn iterated_core(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    let mut core = g.clone();
    let mut to_original: Vec<usize> = (0..g.n()).collect();
    while min_degree(&core) == 1 {
        let dec = delete_pendants(&core)?;
        to_original = dec
            .core_to_original
            .iter()
            .map(|&v| to_original[v])
            .collect();
        core = dec.core;
    }
    Ok((core, to_original))
}

/// A maximal run of degree-2 vertices between two vertices of other degree,
/// or a cycle hanging off a single such vertex (then `vertices` starts and
/// ends with that vertex).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    /// Endpoint, interior vertices in order, endpoint. First equals last
    /// exactly when the chain closes into a cycle.
    pub vertices: Vec<usize>,
}

impl Chain {
    /// Number of edges; a chain spans at least one.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_cycle(&self) -> bool {
        self.vertices[0] == self.vertices[self.vertices.len() - 1]
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], self.vertices[self.vertices.len() - 1])
    }

    /// Interior vertices (everything strictly between the endpoints).
    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

/// Decomposes a graph into chains: every edge lies on exactly one chain.
/// Interior vertices have degree exactly 2; endpoints have degree != 2.
/// Graphs where every vertex has degree 2 (disjoint cycles) yield nothing.
pub fn degree2_chains(g: &Graph) -> Vec<Chain> {
    let mut used = std::collections::HashSet::new();
    let mut chains = Vec::new();
    let mark = |used: &mut std::collections::HashSet<(usize, usize)>, a: usize, b: usize| {
        used.insert((a.min(b), a.max(b)))
    };
    for start in 0..g.n() {
        if g.degree(start) == 2 {
            continue;
        }
        for &first in g.neighbors(start) {
            if used.contains(&(start.min(first), start.max(first))) {
                continue;
            }
            let mut vertices = vec![start, first];
            mark(&mut used, start, first);
            let (mut prev, mut cur) = (start, first);
            while g.degree(cur) == 2 {
                let next = if g.neighbors(cur)[0] == prev {
                    g.neighbors(cur)[1]
                } else {
                    g.neighbors(cur)[0]
                };
                mark(&mut used, cur, next);
                vertices.push(next);
                prev = cur;
                cur = next;
            }
            chains.push(Chain { vertices });
        }
    }
    chains
}

/// Parses the plain edge-list format: first line `n`, then one `u v` pair
/// per line (0-based). Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::MalformedEncoding("empty edge-list input".into()))?
        .parse()
        .map_err(|_| Error::MalformedEncoding("first line must be the vertex count".into()))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::MalformedEncoding(format!("bad edge line: {line:?}")))?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::MalformedEncoding(format!("bad edge line: {line:?}")))?;
        if parts.next().is_some() {
            return Err(Error::MalformedEncoding(format!(
                "edge line has extra fields: {line:?}"
            )));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

/// Emits the plain edge-list format accepted by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
