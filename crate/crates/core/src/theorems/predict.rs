use serde::Serialize;

use super::{CheckConfig, TheoremError};
use crate::construct::iterated_edc_order;
use crate::graph::Graph;
use crate::scalar::Real;
use crate::spectra::{
    adjacency_spectrum, laplacian_spectrum, signless_laplacian_spectrum, spectrum_of, MatrixKind, Spectrum,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    Cartesian,
    Kronecker,
}

/// Which spectrum of the base graph a block of `G^{k*}` is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumSource {
    Laplacian,
    SignlessLaplacian,
}

/// One block of the L-spectrum of `G^{k*}`: every eigenvalue of `source`
/// shifted by `shift`, repeated `multiplicity` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoverTerm {
    pub source: SpectrumSource,
    pub shift: usize,
    pub multiplicity: u64,
}

fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Blocks of the L-spectrum of `G^{k*}` for general `G`, `k >= 1`:
/// `μ_i + 2r` and `μ⁺_i + 2 + 2r`, each `C(k-1, r)` times, `r = 0..k-1`.
pub fn iterated_cover_terms(k: usize) -> Vec<CoverTerm> {
    let k = k as u64;
    let mut terms = Vec::new();
    for r in 0..k {
        let multiplicity = binomial(k - 1, r);
        terms.push(CoverTerm { source: SpectrumSource::Laplacian, shift: 2 * r as usize, multiplicity });
        terms.push(CoverTerm { source: SpectrumSource::SignlessLaplacian, shift: 2 + 2 * r as usize, multiplicity });
    }
    terms
}

fn expand<T: Real>(base: &[T], shift: T, multiplicity: u64, out: &mut Vec<T>) {
    for _ in 0..multiplicity {
        out.extend(base.iter().map(|&x| x + shift));
    }
}

/// `{±(λ_i + 1)}`.
pub fn predict_edc_a_spectrum<T: Real>(g: &Graph) -> Spectrum<T> {
    let a = adjacency_spectrum::<T>(g);
    let mut v = Vec::with_capacity(2 * a.len());
    for &x in a.values() {
        v.push(x + T::one());
        v.push(-(x + T::one()));
    }
    Spectrum::new(v, a.tol())
}

/// `{kλ_i} ∪ {0 × (k-1)n}`.
pub fn predict_kfold_a_spectrum<T: Real>(g: &Graph, k: usize) -> Result<Spectrum<T>, TheoremError> {
    require_positive("k", k)?;
    let a = adjacency_spectrum::<T>(g);
    let kk = T::of_usize(k);
    let mut v: Vec<T> = a.values().iter().map(|&x| kk * x).collect();
    v.extend(std::iter::repeat_n(T::zero(), (k - 1) * g.n()));
    Ok(Spectrum::new(v, a.tol() * kk))
}

/// `{μ_i} ∪ {μ⁺_i + 2}`.
pub fn predict_edc_l_spectrum<T: Real>(g: &Graph) -> Spectrum<T> {
    let l = laplacian_spectrum::<T>(g);
    let q = signless_laplacian_spectrum::<T>(g);
    l.merged(&q.map(|x| x + T::two()))
}

/// L-spectrum of `G^{k*}` from the spectra of `G` via [`iterated_cover_terms`].
pub fn predict_iterated_edc_l_spectrum<T: Real>(
    g: &Graph,
    k: usize,
    cfg: &CheckConfig<T>,
) -> Result<Spectrum<T>, TheoremError> {
    require_positive("k", k)?;
    cfg.ensure_order(iterated_edc_order(g.n(), k))?;
    let l = laplacian_spectrum::<T>(g);
    let q = signless_laplacian_spectrum::<T>(g);
    let mut v = Vec::new();
    for term in iterated_cover_terms(k) {
        let base = match term.source {
            SpectrumSource::Laplacian => l.values(),
            SpectrumSource::SignlessLaplacian => q.values(),
        };
        expand(base, T::of_usize(term.shift), term.multiplicity, &mut v);
    }
    Ok(Spectrum::new(v, l.tol().max(q.tol())))
}

/// Bipartite shortcut: `μ_i + 2r`, `C(k, r)` times, `r = 0..k`. Uses only the
/// Laplacian spectrum; it equals the general prediction exactly when `G` is
/// bipartite.
pub fn predict_iterated_edc_l_spectrum_bipartite<T: Real>(
    g: &Graph,
    k: usize,
    cfg: &CheckConfig<T>,
) -> Result<Spectrum<T>, TheoremError> {
    require_positive("k", k)?;
    cfg.ensure_order(iterated_edc_order(g.n(), k))?;
    let l = laplacian_spectrum::<T>(g);
    let mut v = Vec::new();
    for r in 0..=k as u64 {
        expand(l.values(), T::of_usize(2 * r as usize), binomial(k as u64, r), &mut v);
    }
    Ok(Spectrum::new(v, l.tol()))
}

/// `{kμ_i} ∪ {kd_i × (k-1)}`.
pub fn predict_kfold_l_spectrum<T: Real>(g: &Graph, k: usize) -> Result<Spectrum<T>, TheoremError> {
    require_positive("k", k)?;
    let l = laplacian_spectrum::<T>(g);
    let kk = T::of_usize(k);
    let mut v: Vec<T> = l.values().iter().map(|&x| kk * x).collect();
    for d in g.degrees() {
        v.extend(std::iter::repeat_n(T::of_usize(k * d), k - 1));
    }
    Ok(Spectrum::new(v, l.tol() * kk))
}

/// L-spectrum of `G1 ∨ G2`: `n1 + n2`, `n1 + σ_j` and `n2 + μ_i` over all
/// but the smallest eigenvalue of each side, and `0`.
pub fn predict_join_l_spectrum<T: Real>(g1: &Graph, g2: &Graph) -> Result<Spectrum<T>, TheoremError> {
    if g1.n() == 0 || g2.n() == 0 {
        return Err(TheoremError::Parameter("join sides must have at least one vertex".into()));
    }
    let mu = laplacian_spectrum::<T>(g1);
    let sigma = laplacian_spectrum::<T>(g2);
    let (n1, n2) = (T::of_usize(g1.n()), T::of_usize(g2.n()));
    let mut v = vec![n1 + n2, T::zero()];
    v.extend(sigma.values()[1..].iter().map(|&s| n1 + s));
    v.extend(mu.values()[1..].iter().map(|&m| n2 + m));
    Ok(Spectrum::new(v, mu.tol().max(sigma.tol())))
}

/// Pairwise sums (cartesian) or products (Kronecker) of the `kind` spectra.
///
/// The sum rule holds for every kind. The product rule is exact for the
/// adjacency kind only; for the Laplacian kinds it is returned as stated
/// and has to be checked per instance.
pub fn predict_product_spectrum<T: Real>(
    g1: &Graph,
    g2: &Graph,
    product: ProductKind,
    kind: MatrixKind,
) -> Spectrum<T> {
    let s1 = spectrum_of::<T>(g1, kind);
    let s2 = spectrum_of::<T>(g2, kind);
    let mut v = Vec::with_capacity(s1.len() * s2.len());
    for &a in s1.values() {
        for &b in s2.values() {
            v.push(match product {
                ProductKind::Cartesian => a + b,
                ProductKind::Kronecker => a * b,
            });
        }
    }
    let scale = match product {
        ProductKind::Cartesian => T::one(),
        ProductKind::Kronecker => {
            let m1 = s1.values().iter().fold(T::one(), |acc, x| acc.max(x.abs()));
            let m2 = s2.values().iter().fold(T::one(), |acc, x| acc.max(x.abs()));
            m1.max(m2)
        }
    };
    Spectrum::new(v, s1.tol().max(s2.tol()) * scale)
}

fn require_positive(name: &str, value: usize) -> Result<(), TheoremError> {
    if value == 0 {
        Err(TheoremError::Parameter(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}
