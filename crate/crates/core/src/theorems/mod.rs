//! Closed-form spectral predictions and their numerical certification.
//!
//! Every check builds the graphs involved, computes the relevant spectra or
//! energies directly and compares them with the closed form. Hypotheses are
//! evaluated and reported rather than assumed, so a failing hypothesis is a
//! [`Verdict::HypothesisNotMet`] and never an error.

mod checks;
mod cospectral;
mod energy;
mod family;
mod predict;
mod report;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub use checks::{
    check_cartesian_spectrum, check_edc_adjacency, check_edc_laplacian, check_edc_spanning_trees,
    check_iterated_edc_bipartite, check_iterated_edc_laplacian, check_join_spectrum, check_kfold_adjacency,
    check_kfold_laplacian, check_kronecker_spectrum, check_laplacian_integral_cover, check_le_doubling,
    kfold_le_formula, verify, VerifyInput,
};
pub use cospectral::{check_cospectrality_family, CospectralityCheck};
pub use energy::{check_energy_identity, EnergyIdentity};
pub use family::{
    family, family_cartesian, family_join_double, family_join_edc, family_join_kfold, family_mixed, find_mixed_witness,
    partner_edge_count, smallest_join_edc_params, smallest_join_kfold_params, smallest_mixed_params, FamilyInput,
    FamilyOutcome, FamilySpec, MixedFamily, MixedWitness,
};
pub use predict::{
    iterated_cover_terms, predict_edc_a_spectrum, predict_edc_l_spectrum, predict_iterated_edc_l_spectrum,
    predict_iterated_edc_l_spectrum_bipartite, predict_join_l_spectrum, predict_kfold_a_spectrum,
    predict_kfold_l_spectrum, predict_product_spectrum, CoverTerm, ProductKind, SpectrumSource,
};
pub use report::{Condition, Extra, ReportBuilder, TheoremReport, Verdict};

use crate::graph::GraphError;
use crate::scalar::Real;
use crate::spectra::SpectraError;

/// Default bound on the order of any graph a check is allowed to build.
pub const DEFAULT_MAX_VERTICES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TheoremError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("graph on {vertices} vertices exceeds the configured cap of {cap}")]
    ResourceCap { vertices: usize, cap: usize },
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Tolerance and size limits shared by all checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckConfig<T> {
    pub eps: T,
    pub max_vertices: usize,
}

impl<T: Real> Default for CheckConfig<T> {
    fn default() -> Self {
        Self { eps: T::of(1e-7), max_vertices: DEFAULT_MAX_VERTICES }
    }
}

impl<T: Real> CheckConfig<T> {
    pub fn with_eps(eps: T) -> Self {
        Self { eps, ..Self::default() }
    }

    pub(crate) fn ensure_order(&self, vertices: Option<usize>) -> Result<usize, TheoremError> {
        match vertices {
            Some(v) if v <= self.max_vertices => Ok(v),
            Some(v) => Err(TheoremError::ResourceCap { vertices: v, cap: self.max_vertices }),
            None => Err(TheoremError::ResourceCap { vertices: usize::MAX, cap: self.max_vertices }),
        }
    }
}

macro_rules! theorem_ids {
    ($($variant:ident => $tag:literal, $doc:literal;)*) => {
        /// Identifier of every check the crate can run. The string tags are
        /// the ones accepted on the command line.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $(#[doc = $doc] $variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn tag(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $tag,)*
                }
            }

            pub fn description(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $doc,)*
                }
            }
        }

        impl FromStr for TheoremId {
            type Err = TheoremError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($tag => Ok(TheoremId::$variant),)*
                    other => Err(TheoremError::Parameter(format!("unknown theorem id `{other}`"))),
                }
            }
        }
    };
}

theorem_ids! {
    CartesianSpectrum => "2.1", "Spectrum of a cartesian product is all pairwise sums.";
    KroneckerSpectrum => "2.2", "A-spectrum of a Kronecker product is all pairwise products.";
    JoinLaplacian => "2.3", "L-spectrum of a join from the L-spectra of its sides.";
    EdcAdjacency => "2.4", "A-spectrum of G* is ±(λ_i + 1).";
    KFoldAdjacency => "2.5", "A-spectrum of D^k[G] is kλ_i plus (k-1)n zeros.";
    KFoldEnergy => "kfold-energy", "E(D^k[G]) = k E(G).";
    DoubleVsKronecker => "2.6", "E(G ⊗ K_2) = E(D[G]).";
    KFoldVsKroneckerPower => "2.7", "E(G ⊗ K_2^{⊗s}) = E(D^k[G]) exactly when k = 2^s.";
    SecondCoverEnergy => "2.8", "E(G* ⊗ K_2) = E(G**) = 4Σ|λ_i| + 4θ when nonzero |λ_i| >= 2.";
    BipartiteCoverEnergy => "2.9", "For bipartite G, E(G*) = E(D[G]) exactly when all |λ_i| >= 1.";
    EdcEnergy => "edc-energy", "E(G*) = 2Σ|λ_i + 1|.";
    ProductEnergy => "product-energy", "E((G ⊗ K_2) × K_2) = 2E(G × K_2).";
    EdcLaplacian => "3.2", "L-spectrum of G* is μ_i together with μ⁺_i + 2.";
    IteratedEdcLaplacian => "3.3", "L-spectrum of G^{k*} with binomial multiplicities.";
    IteratedEdcBipartite => "3.4", "For bipartite G, L-spectrum of G^{k*} is μ_i + 2r with multiplicity C(k, r).";
    EdcSpanningTrees => "3.5", "τ(G*) = ½ τ(G) ∏(μ⁺_i + 2).";
    EdcCartesianCospectral => "3.6", "G* and G × K_2 are L-cospectral exactly when G is K_1 or bipartite.";
    LaplacianIntegralCover => "3.7", "G is Laplacian integral exactly when G^{k*} is.";
    IteratedCospectral => "3.8", "G_1, G_2 L-cospectral exactly when G_1^{k*}, G_2^{k*} are.";
    CoverChain => "cover-chain", "G^{s*}, G^{(s-1)*} × K_2, (G × K_2)^{(s-1)*}, G × Q_s are L-cospectral for bipartite G.";
    KFoldLaplacian => "4.1", "L-spectrum of D^k[G] is kμ_i together with kd_i (k-1 times).";
    LaplacianDoubling => "4.2", "For bipartite G, LE(G*) = 2LE(G) exactly when all |μ_i - 2m/n| >= 1.";
    KFoldLaplacianEnergy => "kfold-le", "LE(D^k[G]) = kLE(G) + k(k-1)Σ|d_i - 2m/n|.";
    JoinEdcFamily => "4.3", "LE(G* ∨ K̄_p) = 6n + (p - 2n)2m'/n' + 4m.";
    JoinIteratedEdcFamily => "4.4", "LE(G^{t*} ∨ K̄_p) = 2^t n(t + 2) + (p - 2^t n)2m'/n' + 2^{t+1} m.";
    JoinDoubleFamily => "4.6", "LE(D[G] ∨ K̄_p) = 4n + (p - 2n)2m'/n' + 8m.";
    JoinKFoldFamily => "4.7", "LE(D^k[G] ∨ K̄_p) = 2kn + (p - kn)2m'/n' + 2k²m.";
    MixedDoubleCover => "4.8", "LE(D(G_1*) ∨ K̄_p) = LE(D(G_2)* ∨ K̄_p) when m_2 = m_1 + n/4.";
    MixedSecondCover => "4.9", "LE(D(G_1*) ∨ K̄_p) = LE(G_2** ∨ K̄_p) when m_2 = 2m_1.";
    CrossFamily => "eq41", "LE(D[G_1] ∨ K̄_p) = LE(G_2* ∨ K̄_p) when 4m_1 = 2m_2 + n.";
    CartesianFamily => "4.10", "LE(G* × K_p) = (p - 1)LE(G) + 4pn - 4n for connected non-bipartite G.";
}

impl TheoremId {
    /// True for the equienergetic family generators handled by [`family`].
    pub fn is_family(self) -> bool {
        matches!(
            self,
            TheoremId::JoinEdcFamily
                | TheoremId::JoinIteratedEdcFamily
                | TheoremId::JoinDoubleFamily
                | TheoremId::JoinKFoldFamily
                | TheoremId::MixedDoubleCover
                | TheoremId::MixedSecondCover
                | TheoremId::CrossFamily
                | TheoremId::CartesianFamily
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip_through_tags() {
        for &id in TheoremId::ALL {
            assert_eq!(id.tag().parse::<TheoremId>().unwrap(), id);
        }
        assert!("9.9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn resource_cap() {
        let cfg = CheckConfig::<f64> { eps: 1e-7, max_vertices: 10 };
        assert_eq!(cfg.ensure_order(Some(10)), Ok(10));
        assert_eq!(cfg.ensure_order(Some(11)), Err(TheoremError::ResourceCap { vertices: 11, cap: 10 }));
    }
}
