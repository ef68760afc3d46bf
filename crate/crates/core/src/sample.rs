//! Seedable random graph generators for property tests and experiments.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p.clamp(0.0, 1.0)))
}

/// Connected graph: a uniformly random labeled tree (random attachment
/// order) overlaid with `G(n, p)` edges.
pub fn connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (order[rng.gen_range(0..i)], order[i])).collect();
    edges.extend(gnp(n, p, rng).edges().iter().copied());
    dedup(n, edges)
}

/// Bipartite graph with a random split of `0..n` and cross edges kept with
/// probability `p`.
pub fn bipartite<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    Graph::from_fn(n, |u, v| side[u] != side[v] && rng.gen_bool(p.clamp(0.0, 1.0)))
}

/// `G(n, p)` plus the triangle on `0, 1, 2`, hence never bipartite.
///
/// # Panics
/// If `n < 3`.
pub fn non_bipartite<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    assert!(n >= 3, "an odd cycle needs three vertices");
    let mut edges = gnp(n, p, rng).edges().to_vec();
    edges.extend([(0, 1), (1, 2), (0, 2)]);
    dedup(n, edges)
}

fn dedup(n: usize, mut edges: Vec<(usize, usize)>) -> Graph {
    for e in &mut edges {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(n, edges).expect("normalized distinct edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_respect_their_promises() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..10 {
            assert!(connected(n, 0.2, &mut rng).is_connected());
            assert!(bipartite(n, 0.6, &mut rng).is_bipartite());
            if n >= 3 {
                assert!(!non_bipartite(n, 0.3, &mut rng).is_bipartite());
            }
        }
        assert_eq!(gnp(6, 1.0, &mut rng).m(), 15);
        assert_eq!(gnp(6, 0.0, &mut rng).m(), 0);
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = gnp(9, 0.5, &mut ChaCha8Rng::seed_from_u64(3));
        let b = gnp(9, 0.5, &mut ChaCha8Rng::seed_from_u64(3));
        assert_eq!(a, b);
    }
}
