use serde::Serialize;

use super::checks::bool_value;
use super::report::TheoremReport;
use super::{CheckConfig, TheoremError, TheoremId};
use crate::construct::{cartesian_product, extended_double_cover, iterated_edc, iterated_edc_order};
use crate::graph::{complete, hypercube, Graph};
use crate::scalar::Real;
use crate::spectra::{laplacian_spectrum, spectra_equal};

/// Laplacian cospectrality statements about covers and products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "check")]
pub enum CospectralityCheck {
    /// `G*` and `G × K_2` are L-cospectral exactly when `G` is `K_1` or
    /// bipartite.
    EdcVsCartesian,
    /// `G1, G2` are L-cospectral exactly when `G1^{k*}, G2^{k*}` are.
    Iterated { k: usize },
    /// `G^{s*}`, `G^{(s-1)*} × K_2`, `(G × K_2)^{(s-1)*}` and `G × Q_s` are
    /// mutually L-cospectral for bipartite `G`.
    Chain { s: usize },
}

impl CospectralityCheck {
    pub fn theorem(self) -> TheoremId {
        match self {
            CospectralityCheck::EdcVsCartesian => TheoremId::EdcCartesianCospectral,
            CospectralityCheck::Iterated { .. } => TheoremId::IteratedCospectral,
            CospectralityCheck::Chain { .. } => TheoremId::CoverChain,
        }
    }
}

/// `other` is only read by [`CospectralityCheck::Iterated`], where it is
/// required.
pub fn check_cospectrality_family<T: Real>(
    check: CospectralityCheck,
    g: &Graph,
    other: Option<&Graph>,
    cfg: &CheckConfig<T>,
) -> Result<TheoremReport<T>, TheoremError> {
    let id = check.theorem();
    let eps = cfg.eps;
    let report = match check {
        CospectralityCheck::EdcVsCartesian => {
            cfg.ensure_order(iterated_edc_order(g.n(), 1))?;
            let cover = laplacian_spectrum::<T>(&extended_double_cover(g));
            let product = laplacian_spectrum::<T>(&cartesian_product(g, &complete(2)));
            let cospectral = spectra_equal(&cover, &product, eps);
            TheoremReport::builder(id, eps)
                .condition("K_1 or bipartite", g.n() == 1 || g.is_bipartite())
                .predicted(product.values().iter().copied())
                .computed(cover.values().iter().copied())
                .flag("cospectral", cospectral)
                .finish()
        }
        CospectralityCheck::Iterated { k } => {
            let h = other.ok_or_else(|| TheoremError::Parameter("a second graph is required".into()))?;
            if k == 0 {
                return Err(TheoremError::Parameter("k must be at least 1".into()));
            }
            cfg.ensure_order(iterated_edc_order(g.n().max(h.n()), k))?;
            let base = spectra_equal(&laplacian_spectrum::<T>(g), &laplacian_spectrum(h), eps);
            let covers = spectra_equal(
                &laplacian_spectrum::<T>(&iterated_edc(g, k)),
                &laplacian_spectrum(&iterated_edc(h, k)),
                eps,
            );
            TheoremReport::builder(id, eps)
                .predicted([bool_value(base)])
                .computed([bool_value(covers)])
                .flag("base_cospectral", base)
                .flag("covers_cospectral", covers)
                .finish()
        }
        CospectralityCheck::Chain { s } => {
            if s == 0 || s > 30 {
                return Err(TheoremError::Parameter(format!("s must lie in 1..=30, got {s}")));
            }
            cfg.ensure_order(iterated_edc_order(g.n(), s))?;
            let k2 = complete(2);
            let reference = laplacian_spectrum::<T>(&iterated_edc(g, s));
            let members = [
                ("cover_times_k2", cartesian_product(&iterated_edc(g, s - 1), &k2)),
                ("product_cover", iterated_edc(&cartesian_product(g, &k2), s - 1)),
                ("times_hypercube", cartesian_product(g, &hypercube(s))),
            ];
            let mut builder = TheoremReport::builder(id, eps).condition("bipartite", g.is_bipartite());
            for (name, member) in &members {
                let spec = laplacian_spectrum::<T>(member);
                builder = builder
                    .predicted(reference.values().iter().copied())
                    .computed(spec.values().iter().copied())
                    .flag(format!("{name}_cospectral"), spectra_equal(&reference, &spec, eps));
            }
            builder.finish()
        }
    };
    Ok(report)
}
