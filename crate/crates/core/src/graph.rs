//! Simple undirected labeled graphs.
//!
//! A [`Graph`] has vertices `0..n` and a set of unordered edges stored
//! normalized as `(u, v)` with `u < v`, sorted lexicographically. Two graphs
//! compare equal exactly when they have the same order and the same labeled
//! edge set. Loops exist only in [`LoopyMatrix`].

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: &'static str, reason: String },
}

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and endpoints `>= n`.
    /// Edge orientation in the input is irrelevant.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unique(n, normalized))
    }

    /// Internal constructor for construction routines that may emit the
    /// same pair more than once; loops and range are the caller's contract.
    pub(crate) fn from_pairs_dedup(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            debug_assert!(e.0 != e.1 && e.0 < n && e.1 < n);
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Self::from_sorted_unique(n, edges)
    }

    /// Graph whose edges are the pairs `u < v` with `adjacent(u, v)`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_sorted_unique(n, edges)
    }

    fn from_sorted_unique(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in adjacency.iter_mut() {
            list.sort_unstable();
        }
        Self { n, edges, adjacency }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unique(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Returns the common degree if every vertex has the same degree.
    /// The graph on zero vertices is not considered regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency.iter().all(|a| a.len() == first).then_some(first)
    }

    pub fn is_regular(&self) -> bool {
        self.regular_degree().is_some()
    }

    /// Component index for every vertex, components numbered in order of
    /// their smallest vertex.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().into_iter().max().map_or(0, |c| c + 1)
    }

    /// Connected means exactly one component; `K_0` is not connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Proper 2-coloring if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adjacency[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Dense 0/1 adjacency rows.
    pub fn adjacency_rows(&self) -> Vec<Vec<u8>> {
        let mut rows = vec![vec![0u8; self.n]; self.n];
        for &(u, v) in &self.edges {
            rows[u][v] = 1;
            rows[v][u] = 1;
        }
        rows
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges).finish()
    }
}

/// The graph families that have a canonical labeled realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedFamily {
    /// `K_n`, params `[n]`.
    Complete,
    /// Edgeless graph on `n` vertices, params `[n]`.
    Empty,
    /// `K_{q,r}` with parts `0..q` and `q..q+r`, params `[q, r]`.
    CompleteBipartite,
    /// Path `0-1-...-(n-1)`, params `[n]`.
    Path,
    /// Cycle `0-1-...-(n-1)-0`, params `[n]`, `n >= 3`.
    Cycle,
    /// Hypercube `Q_s` on `2^s` bit strings, params `[s]`.
    Hypercube,
}

impl NamedFamily {
    pub fn name(self) -> &'static str {
        match self {
            NamedFamily::Complete => "complete",
            NamedFamily::Empty => "empty",
            NamedFamily::CompleteBipartite => "complete_bipartite",
            NamedFamily::Path => "path",
            NamedFamily::Cycle => "cycle",
            NamedFamily::Hypercube => "hypercube",
        }
    }
}

/// Builds a member of a named family.
pub fn build_named(family: NamedFamily, params: &[usize]) -> Result<Graph, GraphError> {
    let invalid = |reason: String| GraphError::InvalidParameters { family: family.name(), reason };
    let expected = if family == NamedFamily::CompleteBipartite { 2 } else { 1 };
    if params.len() != expected {
        return Err(invalid(format!("expected {expected} parameter(s), got {}", params.len())));
    }
    if let Some(&bad) = params.iter().find(|&&p| p == 0) {
        return Err(invalid(format!("size must be positive, got {bad}")));
    }
    let n = params[0];
    Ok(match family {
        NamedFamily::Complete => complete(n),
        NamedFamily::Empty => Graph::empty(n),
        NamedFamily::CompleteBipartite => complete_bipartite(params[0], params[1]),
        NamedFamily::Path => path(n),
        NamedFamily::Cycle => {
            if n < 3 {
                return Err(invalid(format!("a cycle needs at least 3 vertices, got {n}")));
            }
            cycle(n)
        }
        NamedFamily::Hypercube => {
            if n > 20 {
                return Err(invalid(format!("dimension {n} is too large")));
            }
            hypercube(n)
        }
    })
}

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

pub fn complete_bipartite(q: usize, r: usize) -> Graph {
    Graph::from_fn(q + r, |u, v| u < q && v >= q)
}

pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| v == u + 1)
}

/// Cycle on `n >= 3` vertices; smaller `n` degrade to a path.
pub fn cycle(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| v == u + 1 || (n >= 3 && u == 0 && v == n - 1))
}

/// `Q_s`; `Q_0` is `K_1`.
pub fn hypercube(s: usize) -> Graph {
    Graph::from_fn(1 << s, |u, v| (u ^ v).count_ones() == 1)
}

/// Square symmetric 0/1 matrix whose diagonal may hold ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopyMatrix {
    order: usize,
    entries: Vec<u8>,
}

impl LoopyMatrix {
    /// Row-major entries; rejects non-square, non-symmetric or non-0/1 input.
    pub fn new(order: usize, entries: Vec<u8>) -> Option<Self> {
        if entries.len() != order * order || entries.iter().any(|&e| e > 1) {
            return None;
        }
        for i in 0..order {
            for j in 0..i {
                if entries[i * order + j] != entries[j * order + i] {
                    return None;
                }
            }
        }
        Some(Self { order, entries })
    }

    /// `T_k`: complete graph with a loop at every vertex, i.e. the all-ones matrix.
    pub fn complete_with_loops(k: usize) -> Self {
        Self { order: k, entries: vec![1; k * k] }
    }

    pub fn from_graph(g: &Graph) -> Self {
        Self { order: g.n(), entries: g.adjacency_rows().concat() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.order + j]
    }

    pub fn has_loops(&self) -> bool {
        (0..self.order).any(|i| self.get(i, i) == 1)
    }

    /// Kronecker product, row `(i, a)` mapped to `i * other.order + a`.
    pub fn kronecker(&self, other: &Self) -> Self {
        let order = self.order * other.order;
        let mut entries = vec![0u8; order * order];
        for i in 0..self.order {
            for j in 0..self.order {
                if self.get(i, j) == 0 {
                    continue;
                }
                for a in 0..other.order {
                    for b in 0..other.order {
                        entries[(i * other.order + a) * order + j * other.order + b] = other.get(a, b);
                    }
                }
            }
        }
        Self { order, entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(GraphError::EndpointOutOfRange { u: 0, v: 2, n: 2 })));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
        assert_eq!(g.component_count(), 2);
        assert!(!g.is_bipartite());
    }

    #[test]
    fn named_families() {
        let k3 = build_named(NamedFamily::Complete, &[3]).unwrap();
        assert_eq!((k3.n(), k3.m()), (3, 3));
        let e4 = build_named(NamedFamily::Empty, &[4]).unwrap();
        assert_eq!((e4.n(), e4.m()), (4, 0));
        let c4 = build_named(NamedFamily::Cycle, &[4]).unwrap();
        assert_eq!((c4.n(), c4.m()), (4, 4));
        assert!(c4.degrees().iter().all(|&d| d == 2));
        let q3 = build_named(NamedFamily::Hypercube, &[3]).unwrap();
        assert_eq!((q3.n(), q3.m(), q3.regular_degree()), (8, 12, Some(3)));
        let k23 = build_named(NamedFamily::CompleteBipartite, &[2, 3]).unwrap();
        assert_eq!(k23.m(), 6);
        assert!(k23.is_bipartite());
    }

    #[test]
    fn named_family_parameter_errors() {
        assert!(build_named(NamedFamily::Complete, &[]).is_err());
        assert!(build_named(NamedFamily::Path, &[0]).is_err());
        assert!(build_named(NamedFamily::CompleteBipartite, &[3]).is_err());
        assert!(build_named(NamedFamily::Cycle, &[2]).is_err());
    }

    #[test]
    fn loopy_matrix_validation() {
        assert!(LoopyMatrix::new(2, vec![1, 1, 0, 1]).is_none());
        assert!(LoopyMatrix::new(2, vec![1, 2, 2, 1]).is_none());
        let t2 = LoopyMatrix::complete_with_loops(2);
        assert!(t2.has_loops());
        assert!(!LoopyMatrix::from_graph(&complete(3)).has_loops());
    }

    #[test]
    fn zero_vertex_graph() {
        let g = Graph::empty(0);
        assert_eq!(g.component_count(), 0);
        assert!(!g.is_connected());
        assert!(g.is_bipartite());
        assert_eq!(g.regular_degree(), None);
    }
}
