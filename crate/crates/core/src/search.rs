//! Exhaustive enumeration of small labeled graphs.

use std::ops::ControlFlow;

use crate::graph::Graph;
use crate::scalar::Real;
use crate::spectra::{laplacian_spectrum, Spectrum};

/// Every labeled graph on `n <= 8` vertices, in edge-bitmask order over the
/// pairs `(u, v)`, `u < v`, sorted lexicographically.
///
/// # Panics
/// If `n > 8`.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "labeled enumeration is limited to 8 vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|&(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e);
        Graph::new(n, edges).expect("distinct pairs in range")
    })
}

/// Visits `d`-regular graphs on `n` vertices whose vertex 0 is adjacent to
/// exactly `1..=d`. Every `d`-regular graph on `n` vertices is isomorphic to
/// at least one visited graph, so the walk covers all isomorphism classes.
/// Returns the value that stopped the walk, if any.
pub fn for_each_regular<B>(n: usize, d: usize, mut visit: impl FnMut(&Graph) -> ControlFlow<B>) -> Option<B> {
    if d >= n || (n * d) % 2 == 1 {
        return None;
    }
    let mut adj = vec![vec![false; n]; n];
    let mut deg = vec![0usize; n];
    for v in 1..=d {
        adj[0][v] = true;
        adj[v][0] = true;
        deg[v] = 1;
    }
    deg[0] = d;
    match extend(n, d, 1, &mut adj, &mut deg, &mut visit) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

fn extend<B>(
    n: usize,
    d: usize,
    v: usize,
    adj: &mut [Vec<bool>],
    deg: &mut [usize],
    visit: &mut impl FnMut(&Graph) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if v == n {
        let g = Graph::from_fn(n, |a, b| adj[a][b]);
        return visit(&g);
    }
    let need = d - deg[v];
    let candidates: Vec<usize> = (v + 1..n).filter(|&u| deg[u] < d && !adj[v][u]).collect();
    if candidates.len() < need {
        return ControlFlow::Continue(());
    }
    choose(n, d, v, &candidates, 0, need, adj, deg, visit)
}

#[allow(clippy::too_many_arguments)]
fn choose<B>(
    n: usize,
    d: usize,
    v: usize,
    candidates: &[usize],
    from: usize,
    need: usize,
    adj: &mut [Vec<bool>],
    deg: &mut [usize],
    visit: &mut impl FnMut(&Graph) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if need == 0 {
        return extend(n, d, v + 1, adj, deg, visit);
    }
    for idx in from..candidates.len() {
        if candidates.len() - idx < need {
            break;
        }
        let u = candidates[idx];
        adj[v][u] = true;
        adj[u][v] = true;
        deg[v] += 1;
        deg[u] += 1;
        let flow = choose(n, d, v, candidates, idx + 1, need - 1, adj, deg, visit);
        adj[v][u] = false;
        adj[u][v] = false;
        deg[v] -= 1;
        deg[u] -= 1;
        flow?;
    }
    ControlFlow::Continue(())
}

/// Number of graphs visited by [`for_each_regular`].
pub fn count_regular(n: usize, d: usize) -> usize {
    let mut count = 0;
    for_each_regular::<()>(n, d, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// First `d`-regular graph on `n` vertices (in the order of
/// [`for_each_regular`]) whose Laplacian spectrum matches `target` within
/// `eps`.
pub fn find_regular_with_laplacian_spectrum<T: Real>(
    n: usize,
    d: usize,
    target: &Spectrum<T>,
    eps: T,
) -> Option<Graph> {
    for_each_regular(n, d, |g| {
        if laplacian_spectrum::<T>(g).max_deviation(target) <= eps {
            ControlFlow::Break(g.clone())
        } else {
            ControlFlow::Continue(())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn labeled_counts() {
        assert_eq!(labeled_graphs(0).count(), 1);
        assert_eq!(labeled_graphs(4).count(), 64);
        assert_eq!(labeled_graphs(4).filter(|g| g.m() == 3).count(), 20);
    }

    #[test]
    fn regular_walk_produces_regular_graphs() {
        let mut seen = 0;
        for_each_regular::<()>(8, 3, |g| {
            assert_eq!(g.regular_degree(), Some(3));
            assert!((1..=3).all(|v| g.has_edge(0, v)));
            seen += 1;
            ControlFlow::Continue(())
        });
        assert!(seen > 0);
        assert_eq!(count_regular(5, 3), 0);
        assert_eq!(count_regular(4, 4), 0);
    }

    #[test]
    fn two_regular_on_five_is_the_pentagon() {
        // With 0 adjacent to 1 and 2, the rest is a path 1 - x - y - 2
        // through {3, 4} in either order.
        assert_eq!(count_regular(5, 2), 2);
        let target = laplacian_spectrum::<f64>(&cycle(5));
        assert!(find_regular_with_laplacian_spectrum(5, 2, &target, 1e-9).is_some());
    }
}
