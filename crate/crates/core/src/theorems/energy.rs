use serde::Serialize;

use super::report::TheoremReport;
use super::{CheckConfig, TheoremError, TheoremId};
use crate::construct::{
    cartesian_product, double_graph, extended_double_cover, iterated_edc, iterated_edc_order, k_fold,
    kronecker_power_k2, kronecker_product,
};
use crate::graph::{complete, Graph};
use crate::scalar::Real;
use crate::spectra::{adjacency_spectrum, energy, spectra_equal};

/// Energy identities relating covers, k-fold graphs and Kronecker products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "identity")]
pub enum EnergyIdentity {
    /// `E(G*) = 2Σ|λ_i + 1|`.
    EdcEnergy,
    /// `E(D^k[G]) = k E(G)`.
    KFoldScaling { k: usize },
    /// `E(G ⊗ K_2) = E(D[G])`.
    DoubleVsKronecker,
    /// `E(G ⊗ K_2^{⊗s}) = E(D^k[G])` exactly when `k = 2^s`.
    KFoldVsKroneckerPower { k: usize, s: usize },
    /// `E(G* ⊗ K_2) = E(G**) = 4Σ|λ_i| + 4θ` when every nonzero `|λ_i| >= 2`.
    SecondCover,
    /// Bipartite `G`: `E(G*) = E(D[G])` exactly when every `|λ_i| >= 1`.
    BipartiteCover,
    /// `E((G ⊗ K_2) × K_2) = 2 E(G × K_2)`.
    ProductEnergy,
}

impl EnergyIdentity {
    pub fn theorem(self) -> TheoremId {
        match self {
            EnergyIdentity::EdcEnergy => TheoremId::EdcEnergy,
            EnergyIdentity::KFoldScaling { .. } => TheoremId::KFoldEnergy,
            EnergyIdentity::DoubleVsKronecker => TheoremId::DoubleVsKronecker,
            EnergyIdentity::KFoldVsKroneckerPower { .. } => TheoremId::KFoldVsKroneckerPower,
            EnergyIdentity::SecondCover => TheoremId::SecondCoverEnergy,
            EnergyIdentity::BipartiteCover => TheoremId::BipartiteCoverEnergy,
            EnergyIdentity::ProductEnergy => TheoremId::ProductEnergy,
        }
    }
}

fn e<T: Real>(g: &Graph) -> T {
    energy::<T>(g).value
}

pub fn check_energy_identity<T: Real>(
    identity: EnergyIdentity,
    g: &Graph,
    cfg: &CheckConfig<T>,
) -> Result<TheoremReport<T>, TheoremError> {
    let id = identity.theorem();
    let eps = cfg.eps;
    let n = g.n();
    let report = match identity {
        EnergyIdentity::EdcEnergy => {
            cfg.ensure_order(iterated_edc_order(n, 1))?;
            let closed: T = adjacency_spectrum::<T>(g).values().iter().map(|&x| (x + T::one()).abs()).sum();
            TheoremReport::builder(id, eps)
                .predicted([T::two() * closed])
                .computed([e::<T>(&extended_double_cover(g))])
                .finish()
        }
        EnergyIdentity::KFoldScaling { k } => {
            if k == 0 {
                return Err(TheoremError::Parameter("k must be at least 1".into()));
            }
            cfg.ensure_order(n.checked_mul(k))?;
            TheoremReport::builder(id, eps)
                .predicted([T::of_usize(k) * e::<T>(g)])
                .computed([e::<T>(&k_fold(g, k))])
                .finish()
        }
        EnergyIdentity::DoubleVsKronecker => {
            cfg.ensure_order(n.checked_mul(2))?;
            let kron = kronecker_product(g, &complete(2));
            let double = double_graph(g);
            let cospectral = spectra_equal(&adjacency_spectrum::<T>(&kron), &adjacency_spectrum(&double), eps);
            TheoremReport::builder(id, eps)
                .predicted([e::<T>(&double)])
                .computed([e::<T>(&kron)])
                .flag("cospectral", cospectral)
                .finish()
        }
        EnergyIdentity::KFoldVsKroneckerPower { k, s } => {
            if k == 0 {
                return Err(TheoremError::Parameter("k must be at least 1".into()));
            }
            let power = 1usize.checked_shl(s as u32).filter(|&p| s < 32 && p > 0);
            cfg.ensure_order(power.and_then(|p| p.checked_mul(n)))?;
            cfg.ensure_order(n.checked_mul(k))?;
            let power = power.unwrap_or(usize::MAX);
            let base = e::<T>(g);
            let kron = e::<T>(&kronecker_product(g, &kronecker_power_k2(s)));
            let fold = e::<T>(&k_fold(g, k));
            TheoremReport::builder(id, eps)
                .condition("k == 2^s", k == power)
                .predicted([T::of_usize(power) * base, T::of_usize(k) * base])
                .computed([kron, fold])
                .flag("energies_equal", (kron - fold).abs() <= eps)
                .finish()
        }
        EnergyIdentity::SecondCover => {
            cfg.ensure_order(iterated_edc_order(n, 2))?;
            let spec = adjacency_spectrum::<T>(g);
            let two = T::two();
            let large = spec.values().iter().all(|&x| x.abs() <= eps || x.abs() >= two - eps);
            let nonneg = spec.values().iter().filter(|&&x| x >= -eps).count();
            let theta = T::of_i64(nonneg as i64 - (n - nonneg) as i64);
            let closed = T::of(4.0) * (spec.abs_sum() + theta);
            let cover = extended_double_cover(g);
            TheoremReport::builder(id, eps)
                .condition("nonzero |lambda_i| >= 2", large)
                .predicted([closed, closed])
                .computed([e::<T>(&kronecker_product(&cover, &complete(2))), e::<T>(&iterated_edc(g, 2))])
                .number("theta", theta)
                .finish()
        }
        EnergyIdentity::BipartiteCover => {
            cfg.ensure_order(iterated_edc_order(n, 1))?;
            let spec = adjacency_spectrum::<T>(g);
            let large = spec.values().iter().all(|&x| x.abs() >= T::one() - eps);
            let cover = e::<T>(&extended_double_cover(g));
            let double = e::<T>(&double_graph(g));
            TheoremReport::builder(id, eps)
                .condition("bipartite", g.is_bipartite())
                .condition("all |lambda_i| >= 1", large)
                .predicted([double])
                .computed([cover])
                .flag("energies_equal", (cover - double).abs() <= eps)
                .finish()
        }
        EnergyIdentity::ProductEnergy => {
            cfg.ensure_order(n.checked_mul(4))?;
            let k2 = complete(2);
            let lhs = e::<T>(&cartesian_product(&kronecker_product(g, &k2), &k2));
            let rhs = e::<T>(&cartesian_product(g, &k2));
            TheoremReport::builder(id, eps).predicted([T::two() * rhs]).computed([lhs]).finish()
        }
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle, path};
    use crate::theorems::Verdict;

    fn run(identity: EnergyIdentity, g: &Graph) -> TheoremReport<f64> {
        check_energy_identity(identity, g, &CheckConfig::default()).unwrap()
    }

    #[test]
    fn unconditional_identities_hold() {
        for g in [complete(3), path(5), cycle(6), Graph::empty(3)] {
            for id in [
                EnergyIdentity::EdcEnergy,
                EnergyIdentity::KFoldScaling { k: 3 },
                EnergyIdentity::DoubleVsKronecker,
                EnergyIdentity::ProductEnergy,
                EnergyIdentity::KFoldVsKroneckerPower { k: 4, s: 2 },
            ] {
                assert_eq!(run(id, &g).verdict, Verdict::Confirmed, "{id:?} {g:?}");
            }
        }
    }

    #[test]
    fn double_vs_kronecker_on_triangle() {
        let r = run(EnergyIdentity::DoubleVsKronecker, &complete(3));
        assert!((r.computed[0] - 8.0).abs() < 1e-9);
        assert_eq!(r.extra_flag("cospectral"), Some(false));
        let edgeless = run(EnergyIdentity::DoubleVsKronecker, &Graph::empty(3));
        assert_eq!(edgeless.extra_flag("cospectral"), Some(true));
    }

    #[test]
    fn kronecker_power_needs_matching_k() {
        let r = run(EnergyIdentity::KFoldVsKroneckerPower { k: 3, s: 1 }, &complete(3));
        assert_eq!(r.verdict, Verdict::HypothesisNotMet);
        assert!(r.agrees);
        assert_eq!(r.extra_flag("energies_equal"), Some(false));
    }

    #[test]
    fn second_cover() {
        let k3 = run(EnergyIdentity::SecondCover, &complete(3));
        assert_eq!(k3.hypothesis("nonzero |lambda_i| >= 2"), Some(false));
        let k22 = run(EnergyIdentity::SecondCover, &complete_bipartite(2, 2));
        assert_eq!(k22.verdict, Verdict::Confirmed);
        assert_eq!(k22.extra_number("theta"), Some(2.0));
    }

    #[test]
    fn bipartite_cover() {
        let c6 = run(EnergyIdentity::BipartiteCover, &cycle(6));
        assert_eq!(c6.verdict, Verdict::Confirmed);
        let c4 = run(EnergyIdentity::BipartiteCover, &cycle(4));
        assert_eq!(c4.verdict, Verdict::HypothesisNotMet);
        assert_eq!(c4.extra_flag("energies_equal"), Some(false));
    }
}
