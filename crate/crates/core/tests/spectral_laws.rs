use proptest::prelude::*;
use specgraph::construct::{cartesian_product, kronecker_product};
use specgraph::graph::Graph;
use specgraph::linalg::{symmetric_eigen, SymMatrix};
use specgraph::spectra::{
    adjacency_spectrum, energy, laplacian_energy, laplacian_spectrum, signless_laplacian_spectrum,
    spanning_trees_eigen, spanning_trees_exact, spectra_equal,
};
use specgraph::spectra::{matrix_of, MatrixKind};

const EPS: f64 = 1e-7;

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len)
            .prop_map(move |keep| Graph::new(n, pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e)).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trace_laws(g in arb_graph(1, 9)) {
        let a = adjacency_spectrum::<f64>(&g);
        let l = laplacian_spectrum::<f64>(&g);
        let q = signless_laplacian_spectrum::<f64>(&g);
        let m2 = 2.0 * g.m() as f64;
        prop_assert!(a.sum().abs() < EPS);
        prop_assert!((a.values().iter().map(|x| x * x).sum::<f64>() - m2).abs() < EPS);
        prop_assert!((l.sum() - m2).abs() < EPS);
        prop_assert!((q.sum() - m2).abs() < EPS);
        prop_assert!(l.values()[0].abs() < EPS);
        prop_assert!(q.values()[0] > -EPS);
    }

    #[test]
    fn zero_multiplicity_counts_components(g in arb_graph(1, 9)) {
        let l = laplacian_spectrum::<f64>(&g);
        prop_assert_eq!(l.count_near(0.0, 1e-6), g.component_count());
    }

    #[test]
    fn bipartite_graphs_have_symmetric_spectra(g in arb_graph(1, 9)) {
        let a = adjacency_spectrum::<f64>(&g);
        let l = laplacian_spectrum::<f64>(&g);
        let q = signless_laplacian_spectrum::<f64>(&g);
        if g.is_bipartite() {
            prop_assert!(spectra_equal(&a, &a.map(|x| -x), EPS));
            prop_assert!(spectra_equal(&l, &q, EPS));
        } else if g.is_connected() {
            prop_assert!(q.values()[0] > 1e-9);
        }
    }

    #[test]
    fn regular_graphs_have_equal_energies(g in arb_graph(1, 9)) {
        if g.is_regular() {
            let e = energy::<f64>(&g).value;
            let le = laplacian_energy::<f64>(&g).unwrap().value;
            prop_assert!((e - le).abs() < EPS);
        }
    }

    #[test]
    fn product_rules(g in arb_graph(1, 5), h in arb_graph(1, 5)) {
        let sum = |x: &[f64], y: &[f64]| x.iter().flat_map(|a| y.iter().map(move |b| a + b)).collect::<Vec<_>>();
        let prod = |x: &[f64], y: &[f64]| x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect::<Vec<_>>();
        let (ag, ah) = (adjacency_spectrum::<f64>(&g), adjacency_spectrum::<f64>(&h));
        let (lg, lh) = (laplacian_spectrum::<f64>(&g), laplacian_spectrum::<f64>(&h));
        let cart_a = specgraph::Spectrum::new(sum(ag.values(), ah.values()), EPS);
        let cart_l = specgraph::Spectrum::new(sum(lg.values(), lh.values()), EPS);
        let kron_a = specgraph::Spectrum::new(prod(ag.values(), ah.values()), EPS);
        prop_assert!(spectra_equal(&cart_a, &adjacency_spectrum(&cartesian_product(&g, &h)), EPS));
        prop_assert!(spectra_equal(&cart_l, &laplacian_spectrum(&cartesian_product(&g, &h)), EPS));
        prop_assert!(spectra_equal(&kron_a, &adjacency_spectrum(&kronecker_product(&g, &h)), EPS));
    }

    #[test]
    fn tree_counts_agree(g in arb_graph(1, 9)) {
        let exact = spanning_trees_exact(&g);
        let eigen = spanning_trees_eigen::<f64>(&g);
        prop_assert_eq!(exact.to_string(), format!("{}", eigen.round() as i64));
    }

    #[test]
    fn eigensolver_reconstructs(g in arb_graph(1, 10)) {
        for kind in [MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::SignlessLaplacian] {
            let m: SymMatrix<f64> = matrix_of(&g, kind);
            let dec = symmetric_eigen(&m);
            prop_assert!(dec.reconstruction_residual(&m) <= 1e-9 * g.n() as f64 * m.max_abs().max(1.0));
        }
    }
}

#[test]
fn single_precision_matches_double_loosely() {
    let g = specgraph::graph::cycle(7);
    let s32 = laplacian_spectrum::<f32>(&g);
    let s64 = laplacian_spectrum::<f64>(&g);
    for (a, b) in s32.values().iter().zip(s64.values()) {
        assert!((f64::from(*a) - b).abs() < 1e-4);
    }
}
