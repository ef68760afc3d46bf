use super::cospectral::{check_cospectrality_family, CospectralityCheck};
use super::energy::{check_energy_identity, EnergyIdentity};
use super::predict::{
    predict_edc_a_spectrum, predict_edc_l_spectrum, predict_iterated_edc_l_spectrum,
    predict_iterated_edc_l_spectrum_bipartite, predict_join_l_spectrum, predict_kfold_a_spectrum,
    predict_kfold_l_spectrum, predict_product_spectrum, ProductKind,
};
use super::report::{Extra, TheoremReport};
use super::{CheckConfig, TheoremError, TheoremId};
use crate::construct::{
    cartesian_product, extended_double_cover, iterated_edc, iterated_edc_order, join, k_fold, kronecker_product,
};
use crate::graph::Graph;
use crate::scalar::Real;
use crate::spectra::{
    adjacency_spectrum, average_degree, bigint_to_real, edc_spanning_trees_formula, is_laplacian_integral,
    laplacian_energy, laplacian_spectrum, spanning_trees_exact, spectra_equal, spectrum_of, MatrixKind, Spectrum,
};

/// Arguments for [`verify`]. Checks that need a second graph fall back to
/// `graph` itself; `k` and `s` default to 2.
#[derive(Debug, Clone, Copy)]
pub struct VerifyInput<'a> {
    pub graph: &'a Graph,
    pub other: Option<&'a Graph>,
    pub k: Option<usize>,
    pub s: Option<usize>,
    pub kind: Option<MatrixKind>,
}

impl<'a> VerifyInput<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        Self { graph, other: None, k: None, s: None, kind: None }
    }
}

/// Runs the non-family check named by `id`.
pub fn verify<T: Real>(
    id: TheoremId,
    input: &VerifyInput<'_>,
    cfg: &CheckConfig<T>,
) -> Result<TheoremReport<T>, TheoremError> {
    let g = input.graph;
    let other = input.other.unwrap_or(g);
    let k = input.k.unwrap_or(2);
    let s = input.s.unwrap_or(2);
    let kind = input.kind.unwrap_or(MatrixKind::Adjacency);
    match id {
        TheoremId::CartesianSpectrum => check_cartesian_spectrum(g, other, kind, cfg),
        TheoremId::KroneckerSpectrum => check_kronecker_spectrum(g, other, kind, cfg),
        TheoremId::JoinLaplacian => check_join_spectrum(g, other, cfg),
        TheoremId::EdcAdjacency => check_edc_adjacency(g, cfg),
        TheoremId::KFoldAdjacency => check_kfold_adjacency(g, k, cfg),
        TheoremId::KFoldEnergy => check_energy_identity(EnergyIdentity::KFoldScaling { k }, g, cfg),
        TheoremId::DoubleVsKronecker => check_energy_identity(EnergyIdentity::DoubleVsKronecker, g, cfg),
        TheoremId::KFoldVsKroneckerPower => {
            let k = input.k.unwrap_or(1 << s.min(20));
            check_energy_identity(EnergyIdentity::KFoldVsKroneckerPower { k, s }, g, cfg)
        }
        TheoremId::SecondCoverEnergy => check_energy_identity(EnergyIdentity::SecondCover, g, cfg),
        TheoremId::BipartiteCoverEnergy => check_energy_identity(EnergyIdentity::BipartiteCover, g, cfg),
        TheoremId::EdcEnergy => check_energy_identity(EnergyIdentity::EdcEnergy, g, cfg),
        TheoremId::ProductEnergy => check_energy_identity(EnergyIdentity::ProductEnergy, g, cfg),
        TheoremId::EdcLaplacian => check_edc_laplacian(g, cfg),
        TheoremId::IteratedEdcLaplacian => check_iterated_edc_laplacian(g, k, cfg),
        TheoremId::IteratedEdcBipartite => check_iterated_edc_bipartite(g, k, cfg),
        TheoremId::EdcSpanningTrees => check_edc_spanning_trees(g, cfg),
        TheoremId::EdcCartesianCospectral => {
            check_cospectrality_family(CospectralityCheck::EdcVsCartesian, g, None, cfg)
        }
        TheoremId::LaplacianIntegralCover => check_laplacian_integral_cover(g, k, cfg),
        TheoremId::IteratedCospectral => {
            check_cospectrality_family(CospectralityCheck::Iterated { k }, g, Some(other), cfg)
        }
        TheoremId::CoverChain => check_cospectrality_family(CospectralityCheck::Chain { s }, g, None, cfg),
        TheoremId::KFoldLaplacian => check_kfold_laplacian(g, k, cfg),
        TheoremId::LaplacianDoubling => check_le_doubling(g, cfg),
        TheoremId::KFoldLaplacianEnergy => kfold_le_formula(g, k, cfg),
        family_id => Err(TheoremError::Parameter(format!(
            "`{family_id}` is an equienergetic family; run it through the family generator"
        ))),
    }
}

pub(crate) fn spectrum_report<T: Real>(
    id: TheoremId,
    predicted: &Spectrum<T>,
    computed: &Spectrum<T>,
    cfg: &CheckConfig<T>,
) -> super::report::ReportBuilder<T> {
    TheoremReport::builder(id, cfg.eps)
        .predicted(predicted.values().iter().copied())
        .computed(computed.values().iter().copied())
}

fn product_order(g1: &Graph, g2: &Graph) -> Option<usize> {
    g1.n().checked_mul(g2.n())
}

/// Spectrum of `G1 × G2` against all pairwise sums.
pub fn check_cartesian_spectrum<T: Real>(
    g1: &Graph,
    g2: &Graph,
    kind: MatrixKind,
    cfg: &CheckConfig<T>,
) -> Result<TheoremReport<T>, TheoremError> {
    cfg.ensure_order(product_order(g1, g2))?;
    let predicted = predict_product_spectrum(g1, g2, ProductKind::Cartesian, kind);
    let computed = spectrum_of::<T>(&cartesian_product(g1, g2), kind);
    Ok(spectrum_report(TheoremId::CartesianSpectrum, &predicted, &computed, cfg).finish())
}

/// Spectrum of `G1 ⊗ G2` against all pairwise products. The product rule is
/// a hypothesis-free identity for adjacency spectra only; other kinds are
/// reported with the `adjacency kind` condition unmet.
pub fn check_kronecker_spectrum<T: Real>(
    g1: &Graph,
    g2: &Graph,
    kind: MatrixKind,
    cfg: &CheckConfig<T>,
) -> Result<TheoremReport<T>, TheoremError> {
    cfg.ensure_order(product_order(g1, g2))?;
    let predicted = predict_product_spectrum(g1, g2, ProductKind::Kronecker, kind);
    let computed = spectrum_of::<T>(&kronecker_product(g1, g2), kind);
    Ok(spectrum_report(TheoremId::KroneckerSpectrum, &predicted, &computed, cfg)
        .condition("adjacency kind", kind == MatrixKind::Adjacency)
        .finish())
}

pub fn check_join_spectrum<T: Real>(
    g1: &Graph,
    g2: &Graph,
    cfg: &CheckConfig<T>,
) -> Result<TheoremReport<T>, TheoremError> {
    cfg.ensure_order(g1.n().checked_add(g2.n()))?;
    let predicted = predict_join_l_spectrum(g1, g2)?;
    let computed = laplacian_spectrum::<T>(&join(g1, g2));
    Ok(spectrum_report(TheoremId::JoinLaplacian, &predicted, &computed, cfg).finish())
}

pub fn check_edc_adjacency<T: Real>(g: &Graph, cfg: &CheckConfig<T>) -> Result<TheoremReport<T>, TheoremError> {
    cfg.ensure_order(iterated_edc_order(g.n(), 1))?;
    let predicted = predict_edc_a_spectrum(g);
    let computed = adjacency_spectrum::<T>(&extended_double_cover(g));
    Ok(spectrum_report(TheoremId::EdcAdjacency, &predicted, &computed, cfg).finish())
}

pub fn check_kfold_adjacency<T: Real>(
    g: &Graph,
    k: usize,
    cfg: &CheckConfig<T>,
) -> Result<TheoremReport<T>, TheoremError> {
    let predicted = predict_kfold_a_spectrum(g, k)?;
    cfg.ensure_order(g.n().checked_mul(k))?;
    let computed = adjacency_spectrum::<T>(&k_fold(g, k));
    Ok(spectrum_report(TheoremId::KFoldAdjacency, &predicted, &computed, cfg).finish())
}

pub fn check_edc_laplacian<T: Real>(g: &Graph, cfg: &CheckConfig<T>) -> Result<TheoremReport<T>, TheoremError> {
    cfg.ensure_order(iterated_edc_order(g.n(), 1))?;
    let predicted = predict_edc_l_spectrum(g);
    let computed = laplacian_spectrum::<T>(&extended_double_cover(g));
    Ok(spectrum_report(TheoremId::EdcLaplacian, &predicted, &computed, cfg).finish())
}

/// General binomial prediction for `G^{k*}`. For bipartite `G` the report
/// also records whether the bipartite shortcut gives the same multiset.
pub fn check_iterated_edc_laplacian<T: Real>(
    g: &Graph,
    k: usize,
    cfg: &CheckConfig<T>,
) -> Result<TheoremReport<T>, TheoremError> {
    let predicted = predict_iterated_edc_l_spectrum(g, k, cfg)?;
    let computed = laplacian_spectrum::<T>(&iterated_edc(g, k));
    let mut builder = spectrum_report(TheoremId::IteratedEdcLaplacian, &predicted, &computed, cfg);
    if g.is_bipartite() {
        let shortcut = predict_iterated_edc_l_spectrum_bipartite(g, k, cfg)?;
        builder = builder.flag("bipartite_shortcut_agrees", spectra_equal(&predicted, &shortcut, cfg.eps));
    }
    Ok(builder.finish())
}

pub fn check_iterated_edc_bipartite<T: Real>(
    g: &Graph,
    k: usize,
    cfg: &CheckConfig<T>,
) -> Result<TheoremReport<T>, TheoremError> {
    let predicted = predict_iterated_edc_l_spectrum_bipartite(g, k, cfg)?;
    let computed = laplacian_spectrum::<T>(&iterated_edc(g, k));
    Ok(spectrum_report(TheoremId::IteratedEdcBipartite, &predicted, &computed, cfg)
        .condition("bipartite", g.is_bipartite())
        .finish())
}

/// `τ(G*)` from the spectra of `G` against the exact count on `G*`.
///
/// The comparison tolerance is relative: `eps * max(1, τ(G*))`.
pub fn check_edc_spanning_trees<T: Real>(g: &Graph, cfg: &CheckConfig<T>) -> Result<TheoremReport<T>, TheoremError> {
    if g.n() == 0 {
        return Err(TheoremError::Parameter("spanning trees need at least one vertex".into()));
    }
    cfg.ensure_order(iterated_edc_order(g.n(), 1))?;
    let formula = edc_spanning_trees_formula::<T>(g);
    let exact = spanning_trees_exact(&extended_double_cover(g));
    let exact_real = bigint_to_real::<T>(&exact);
    let mut predicted = vec![formula.general];
    let mut computed = vec![exact_real];
    if let Some(b) = formula.bipartite {
        predicted.push(b);
        computed.push(exact_real);
    }
    let eps = cfg.eps * exact_real.abs().max(T::one());
    Ok(TheoremReport::builder(TheoremId::EdcSpanningTrees, eps)
        .predicted(predicted)
        .computed(computed)
        .extra("cover_trees", Extra::Exact(exact.to_string()))
        .extra("base_trees", Extra::Exact(formula.base_trees.to_string()))
        .flag("bipartite_form_used", formula.bipartite.is_some())
        .finish())
}

/// Laplacian integrality of `G` (predicted) against that of `G^{k*}`
/// (computed), as 0/1.
pub fn check_laplacian_integral_cover<T: Real>(
    g: &Graph,
    k: usize,
    cfg: &CheckConfig<T>,
) -> Result<TheoremReport<T>, TheoremError> {
    if k == 0 {
        return Err(TheoremError::Parameter("k must be at least 1".into()));
    }
    cfg.ensure_order(iterated_edc_order(g.n(), k))?;
    let base = is_laplacian_integral(g, cfg.eps);
    let cover = is_laplacian_integral(&iterated_edc(g, k), cfg.eps);
    Ok(TheoremReport::builder(TheoremId::LaplacianIntegralCover, cfg.eps)
        .predicted([bool_value(base)])
        .computed([bool_value(cover)])
        .flag("base_integral", base)
        .flag("cover_integral", cover)
        .finish())
}

pub fn check_kfold_laplacian<T: Real>(
    g: &Graph,
    k: usize,
    cfg: &CheckConfig<T>,
) -> Result<TheoremReport<T>, TheoremError> {
    let predicted = predict_kfold_l_spectrum(g, k)?;
    cfg.ensure_order(g.n().checked_mul(k))?;
    let computed = laplacian_spectrum::<T>(&k_fold(g, k));
    Ok(spectrum_report(TheoremId::KFoldLaplacian, &predicted, &computed, cfg).finish())
}

/// `LE(G*)` against `2 LE(G)`. The gap condition is reported as a hypothesis;
/// when it fails the two values are expected to differ, recorded in the
/// `doubling_holds` flag.
pub fn check_le_doubling<T: Real>(g: &Graph, cfg: &CheckConfig<T>) -> Result<TheoremReport<T>, TheoremError> {
    cfg.ensure_order(iterated_edc_order(g.n(), 1))?;
    let base = laplacian_energy::<T>(g)?;
    let avg = base.avg_degree.unwrap_or_else(T::zero);
    let min_gap = laplacian_spectrum::<T>(g).values().iter().fold(T::infinity(), |acc, &mu| acc.min((mu - avg).abs()));
    let cover = laplacian_energy::<T>(&extended_double_cover(g))?;
    let doubled = T::two() * base.value;
    Ok(TheoremReport::builder(TheoremId::LaplacianDoubling, cfg.eps)
        .condition("bipartite", g.is_bipartite())
        .condition("min |mu_i - 2m/n| >= 1", min_gap >= T::one() - cfg.eps)
        .predicted([doubled])
        .computed([cover.value])
        .number("min_gap", min_gap)
        .flag("doubling_holds", (doubled - cover.value).abs() <= cfg.eps)
        .finish())
}

/// `LE(D^k[G])` against `k LE(G) + k(k-1) Σ|d_i - 2m/n|`.
pub fn kfold_le_formula<T: Real>(g: &Graph, k: usize, cfg: &CheckConfig<T>) -> Result<TheoremReport<T>, TheoremError> {
    if k == 0 {
        return Err(TheoremError::Parameter("k must be at least 1".into()));
    }
    cfg.ensure_order(g.n().checked_mul(k))?;
    let avg = average_degree::<T>(g)?;
    let base = laplacian_energy::<T>(g)?.value;
    let irregularity: T = g.degrees().iter().map(|&d| (T::of_usize(d) - avg).abs()).sum();
    let kk = T::of_usize(k);
    let predicted = kk * base + kk * (kk - T::one()) * irregularity;
    let computed = laplacian_energy::<T>(&k_fold(g, k))?.value;
    Ok(TheoremReport::builder(TheoremId::KFoldLaplacianEnergy, cfg.eps)
        .predicted([predicted])
        .computed([computed])
        .number("degree_irregularity", irregularity)
        .finish())
}

pub(crate) fn bool_value<T: Real>(b: bool) -> T {
    if b {
        T::one()
    } else {
        T::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path};
    use crate::theorems::Verdict;

    fn cfg() -> CheckConfig<f64> {
        CheckConfig::default()
    }

    #[test]
    fn spectrum_checks_confirm_on_small_graphs() {
        let c = cfg();
        let g = path(4);
        let h = cycle(5);
        for r in [
            check_cartesian_spectrum(&g, &h, MatrixKind::Laplacian, &c).unwrap(),
            check_cartesian_spectrum(&g, &h, MatrixKind::Adjacency, &c).unwrap(),
            check_kronecker_spectrum(&g, &h, MatrixKind::Adjacency, &c).unwrap(),
            check_join_spectrum(&g, &h, &c).unwrap(),
            check_edc_adjacency(&h, &c).unwrap(),
            check_kfold_adjacency(&h, 3, &c).unwrap(),
            check_edc_laplacian(&h, &c).unwrap(),
            check_iterated_edc_laplacian(&h, 2, &c).unwrap(),
            check_kfold_laplacian(&g, 3, &c).unwrap(),
            check_edc_spanning_trees(&h, &c).unwrap(),
            kfold_le_formula(&g, 2, &c).unwrap(),
        ] {
            assert_eq!(r.verdict, Verdict::Confirmed, "{r:?}");
        }
    }

    #[test]
    fn kronecker_laplacian_rule_is_flagged() {
        let r = check_kronecker_spectrum(&path(3), &complete(2), MatrixKind::Laplacian, &cfg()).unwrap();
        assert_eq!(r.hypothesis("adjacency kind"), Some(false));
        assert!(!r.agrees);
    }

    #[test]
    fn bipartite_shortcut_needs_bipartite() {
        let c = cfg();
        let r = check_iterated_edc_laplacian(&path(4), 3, &c).unwrap();
        assert_eq!(r.extra_flag("bipartite_shortcut_agrees"), Some(true));
        let k3 = check_iterated_edc_bipartite(&complete(3), 2, &c).unwrap();
        assert_eq!(k3.verdict, Verdict::HypothesisNotMet);
        assert!(!k3.agrees);
    }

    #[test]
    fn spanning_tree_forced_cases() {
        let r = check_edc_spanning_trees(&complete(2), &cfg()).unwrap();
        assert_eq!(r.extras["cover_trees"], Extra::Exact("4".into()));
        let r = check_edc_spanning_trees(&complete(3), &cfg()).unwrap();
        assert_eq!(r.extras["cover_trees"], Extra::Exact("81".into()));
        assert!(r.is_confirmed());
    }

    #[test]
    fn doubling_examples() {
        let c = cfg();
        let k2 = check_le_doubling(&complete(2), &c).unwrap();
        assert!(k2.is_confirmed());
        assert!((k2.computed[0] - 4.0).abs() < 1e-9);
        let p3 = check_le_doubling(&path(3), &c).unwrap();
        assert_eq!(p3.hypothesis("min |mu_i - 2m/n| >= 1"), Some(false));
        assert_eq!(p3.extra_flag("doubling_holds"), Some(false));
        assert!(check_le_doubling(&cycle(6), &c).unwrap().is_confirmed());
    }

    #[test]
    fn kfold_le_examples() {
        let c = cfg();
        let r = kfold_le_formula(&complete(3), 2, &c).unwrap();
        assert!((r.computed[0] - 8.0).abs() < 1e-9);
        let one = kfold_le_formula(&path(5), 1, &c).unwrap();
        assert!((one.computed[0] - laplacian_energy::<f64>(&path(5)).unwrap().value).abs() < 1e-12);
    }

    #[test]
    fn integral_cover() {
        let c = cfg();
        let r = check_laplacian_integral_cover(&complete_bipartite(2, 3), 2, &c).unwrap();
        assert_eq!(r.predicted, vec![1.0]);
        assert!(r.is_confirmed());
        let r = check_laplacian_integral_cover(&path(4), 1, &c).unwrap();
        assert_eq!(r.predicted, vec![0.0]);
        assert!(r.is_confirmed());
    }

    #[test]
    fn verify_rejects_family_ids() {
        let g = complete(3);
        assert!(verify::<f64>(TheoremId::CartesianFamily, &VerifyInput::new(&g), &cfg()).is_err());
        assert!(verify::<f64>(TheoremId::EdcLaplacian, &VerifyInput::new(&g), &cfg()).unwrap().is_confirmed());
    }

    #[test]
    fn cap_is_enforced() {
        let c = CheckConfig::<f64> { eps: 1e-7, max_vertices: 5 };
        assert!(matches!(
            check_edc_laplacian(&complete(3), &c),
            Err(TheoremError::ResourceCap { vertices: 6, cap: 5 })
        ));
    }
}
