//! Graph constructions: complements, unions, joins, products, extended double
//! covers, k-fold graphs and line graphs.
//!
//! Labeling conventions (relied upon by the matrix identities in the tests):
//! - products map `(u, v)` to `u * n2 + v`;
//! - the extended double cover puts `x_i` at `i` and `y_i` at `n + i`;
//! - `k_fold` puts copy `a` of vertex `u` at `u * k + a`;
//! - the line graph numbers vertices by position in [`Graph::edges`].

use crate::graph::Graph;

pub fn complement(g: &Graph) -> Graph {
    Graph::from_fn(g.n(), |u, v| !g.has_edge(u, v))
}

/// `g1 ⊔ g2`, vertices of `g2` shifted by `g1.n()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let shift = g1.n();
    let edges = g1.edges().iter().copied().chain(g2.edges().iter().map(|&(u, v)| (u + shift, v + shift))).collect();
    Graph::from_pairs_dedup(g1.n() + g2.n(), edges)
}

/// `k` disjoint copies of `g`, copy `c` occupying `c * n .. (c + 1) * n`.
pub fn copies(g: &Graph, k: usize) -> Graph {
    let n = g.n();
    let edges = (0..k).flat_map(|c| g.edges().iter().map(move |&(u, v)| (u + c * n, v + c * n))).collect();
    Graph::from_pairs_dedup(k * n, edges)
}

/// `g1 ∨ g2`: disjoint union plus every edge between the two sides.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.n(), g2.n());
    let mut edges = disjoint_union(g1, g2).edges().to_vec();
    edges.reserve(n1 * n2);
    for u in 0..n1 {
        for v in 0..n2 {
            edges.push((u, n1 + v));
        }
    }
    Graph::from_pairs_dedup(n1 + n2, edges)
}

/// `g1 × g2`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.n(), g2.n());
    let mut edges = Vec::with_capacity(n1 * g2.m() + n2 * g1.m());
    for u in 0..n1 {
        for &(a, b) in g2.edges() {
            edges.push((u * n2 + a, u * n2 + b));
        }
    }
    for &(u, w) in g1.edges() {
        for v in 0..n2 {
            edges.push((u * n2 + v, w * n2 + v));
        }
    }
    Graph::from_pairs_dedup(n1 * n2, edges)
}

/// `g1 ⊗ g2`: `(u1, v1) ~ (u2, v2)` iff `u1 ~ u2` and `v1 ~ v2`.
pub fn kronecker_product(g1: &Graph, g2: &Graph) -> Graph {
    let n2 = g2.n();
    let mut edges = Vec::with_capacity(2 * g1.m() * g2.m());
    for &(u, w) in g1.edges() {
        for &(a, b) in g2.edges() {
            edges.push((u * n2 + a, w * n2 + b));
            edges.push((u * n2 + b, w * n2 + a));
        }
    }
    Graph::from_pairs_dedup(g1.n() * n2, edges)
}

/// Extended double cover `G*`: `x_i ~ y_j` iff `i == j` or `v_i ~ v_j`.
pub fn extended_double_cover(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.m() + n);
    for i in 0..n {
        edges.push((i, n + i));
    }
    for &(u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    Graph::from_pairs_dedup(2 * n, edges)
}

/// `G^{k*}`; `k = 0` returns a copy of `g`.
pub fn iterated_edc(g: &Graph, k: usize) -> Graph {
    let mut current = g.clone();
    for _ in 0..k {
        current = extended_double_cover(&current);
    }
    current
}

/// Order of `G^{k*}` without building it, `None` on overflow.
pub fn iterated_edc_order(n: usize, k: usize) -> Option<usize> {
    1usize.checked_shl(k as u32).and_then(|f| f.checked_mul(n))
}

/// `D^k[G]`: `k` copies of `g`, each vertex joined to the neighbours of its
/// counterparts in every copy. Copies of the same vertex stay non-adjacent,
/// so the adjacency matrix is `A(G) ⊗ J_k`.
///
/// # Panics
/// If `k == 0`.
pub fn k_fold(g: &Graph, k: usize) -> Graph {
    assert!(k >= 1, "k-fold graph needs k >= 1");
    let mut edges = Vec::with_capacity(k * k * g.m());
    for &(u, v) in g.edges() {
        for a in 0..k {
            for b in 0..k {
                edges.push((u * k + a, v * k + b));
            }
        }
    }
    Graph::from_pairs_dedup(g.n() * k, edges)
}

/// `D[G] = D^2[G]`.
pub fn double_graph(g: &Graph) -> Graph {
    k_fold(g, 2)
}

/// Line graph; vertex `i` is the `i`-th edge of `g` in sorted order.
pub fn line_graph(g: &Graph) -> Graph {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (idx, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(idx);
        incident[v].push(idx);
    }
    let mut edges = Vec::new();
    for list in &incident {
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    Graph::from_pairs_dedup(g.m(), edges)
}

/// `s`-fold Kronecker power of `K_2` (isomorphic to `2^{s-1}` disjoint
/// edges); `s = 0` gives `K_1`.
pub fn kronecker_power_k2(s: usize) -> Graph {
    let k2 = crate::graph::complete(2);
    if s == 0 {
        return crate::graph::complete(1);
    }
    (1..s).fold(k2.clone(), |acc, _| kronecker_product(&acc, &k2))
}
