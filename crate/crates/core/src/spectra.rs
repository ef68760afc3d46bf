//! Graph matrices, their spectra, graph energies and spanning-tree counts.
//!
//! ```
//! use specgraph::{graph, spectra};
//!
//! let k3 = graph::complete(3);
//! assert!((spectra::energy::<f64>(&k3).value - 4.0).abs() < 1e-12);
//! assert_eq!(spectra::spanning_trees_exact(&k3), 3u32.into());
//! ```

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::construct::extended_double_cover;
use crate::graph::Graph;
use crate::linalg::{bareiss_determinant, symmetric_eigen, symmetric_eigenvalues, LinalgError, SymMatrix};
use crate::scalar::{near_integer, Real};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("average degree 2m/n is undefined for the graph on zero vertices")]
    UndefinedAverageDegree,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    /// `A(G)`.
    Adjacency,
    /// `L(G) = D(G) - A(G)`.
    Laplacian,
    /// `L⁺(G) = D(G) + A(G)`, the signless Laplacian.
    SignlessLaplacian,
}

impl MatrixKind {
    pub fn short_name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "a",
            MatrixKind::Laplacian => "l",
            MatrixKind::SignlessLaplacian => "q",
        }
    }
}

pub fn matrix_of<T: Real>(g: &Graph, kind: MatrixKind) -> SymMatrix<T> {
    let degrees = g.degrees();
    let off = match kind {
        MatrixKind::Adjacency | MatrixKind::SignlessLaplacian => T::one(),
        MatrixKind::Laplacian => -T::one(),
    };
    SymMatrix::from_lower(g.n(), |i, j| {
        if i == j {
            match kind {
                MatrixKind::Adjacency => T::zero(),
                _ => T::of_usize(degrees[i]),
            }
        } else if g.has_edge(i, j) {
            off
        } else {
            T::zero()
        }
    })
}

/// Sorted eigenvalue multiset together with the tolerance used to compare it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum<T> {
    values: Vec<T>,
    tol: T,
}

impl<T: Real> Spectrum<T> {
    /// Sorts `values` ascending; NaNs are not expected and sort last.
    pub fn new(mut values: Vec<T>, tol: T) -> Self {
        values.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Greater));
        Self { values, tol: tol.abs() }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn tol(&self) -> T {
        self.tol
    }

    pub fn with_tol(mut self, tol: T) -> Self {
        self.tol = tol.abs();
        self
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> Option<T> {
        self.values.first().copied()
    }

    pub fn max(&self) -> Option<T> {
        self.values.last().copied()
    }

    pub fn sum(&self) -> T {
        self.values.iter().copied().sum()
    }

    pub fn abs_sum(&self) -> T {
        self.values.iter().map(|x| x.abs()).sum()
    }

    /// `Σ |x - center|`.
    pub fn deviation_sum(&self, center: T) -> T {
        self.values.iter().map(|&x| (x - center).abs()).sum()
    }

    /// Number of entries within `eps` of `target`.
    pub fn count_near(&self, target: T, eps: T) -> usize {
        self.values.iter().filter(|&&x| (x - target).abs() <= eps).count()
    }

    /// Largest elementwise gap, infinite when the lengths differ.
    pub fn max_deviation(&self, other: &Self) -> T {
        if self.len() != other.len() {
            return T::infinity();
        }
        self.values.iter().zip(&other.values).fold(T::zero(), |acc, (&a, &b)| acc.max((a - b).abs()))
    }

    /// Multiset equality at the larger of the two stored tolerances.
    pub fn approx_eq(&self, other: &Self) -> bool {
        spectra_equal(self, other, self.tol.max(other.tol))
    }

    /// Union of two multisets.
    pub fn merged(&self, other: &Self) -> Self {
        let mut v = self.values.clone();
        v.extend_from_slice(&other.values);
        Self::new(v, self.tol.max(other.tol))
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Self::new(self.values.iter().map(|&x| f(x)).collect(), self.tol)
    }

    /// Copy with entries within `tol` of an integer snapped to it.
    pub fn snapped(&self) -> Self {
        Self::new(
            self.values.iter().map(|&x| if near_integer(x, self.tol) { x.round() } else { x }).collect(),
            self.tol,
        )
    }
}

/// Same length and elementwise `|a_i - b_i| <= eps` after sorting.
pub fn spectra_equal<T: Real>(s1: &Spectrum<T>, s2: &Spectrum<T>, eps: T) -> bool {
    s1.max_deviation(s2) <= eps
}

/// Comparison tolerance for spectra of `m`: `1e-8 * max(1, ‖M‖_max)`.
pub fn default_tolerance<T: Real>(m: &SymMatrix<T>) -> T {
    T::of(1e-8) * m.max_abs().max(T::one())
}

/// Eigenvalues of a symmetric matrix, ascending.
pub fn eigenvalues<T: Real>(m: &SymMatrix<T>) -> Spectrum<T> {
    Spectrum::new(symmetric_eigenvalues(m), default_tolerance(m))
}

/// Validates symmetry of raw row-major entries before solving.
pub fn eigenvalues_of_entries<T: Real>(order: usize, entries: Vec<T>) -> Result<Spectrum<T>, SpectraError> {
    let m = SymMatrix::new(order, entries)?;
    Ok(eigenvalues(&m))
}

/// Eigenvalues plus the reconstruction residual `max |M - QΛQ^T|`.
pub fn eigenvalues_with_residual<T: Real>(m: &SymMatrix<T>) -> (Spectrum<T>, T) {
    let dec = symmetric_eigen(m);
    let residual = dec.reconstruction_residual(m);
    (Spectrum::new(dec.values, default_tolerance(m)), residual)
}

pub fn spectrum_of<T: Real>(g: &Graph, kind: MatrixKind) -> Spectrum<T> {
    eigenvalues(&matrix_of::<T>(g, kind))
}

pub fn adjacency_spectrum<T: Real>(g: &Graph) -> Spectrum<T> {
    spectrum_of(g, MatrixKind::Adjacency)
}

pub fn laplacian_spectrum<T: Real>(g: &Graph) -> Spectrum<T> {
    spectrum_of(g, MatrixKind::Laplacian)
}

pub fn signless_laplacian_spectrum<T: Real>(g: &Graph) -> Spectrum<T> {
    spectrum_of(g, MatrixKind::SignlessLaplacian)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnergyKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyValue<T> {
    pub value: T,
    pub kind: EnergyKind,
    /// `2m/n`, present for the Laplacian kinds.
    pub avg_degree: Option<T>,
}

/// `2m/n`.
pub fn average_degree<T: Real>(g: &Graph) -> Result<T, SpectraError> {
    if g.n() == 0 {
        return Err(SpectraError::UndefinedAverageDegree);
    }
    Ok(T::of_usize(2 * g.m()) / T::of_usize(g.n()))
}

/// `E(G) = Σ |λ_i|`.
pub fn energy<T: Real>(g: &Graph) -> EnergyValue<T> {
    EnergyValue { value: adjacency_spectrum::<T>(g).abs_sum(), kind: EnergyKind::Adjacency, avg_degree: None }
}

/// `LE(G) = Σ |μ_i - 2m/n|`.
pub fn laplacian_energy<T: Real>(g: &Graph) -> Result<EnergyValue<T>, SpectraError> {
    let avg = average_degree::<T>(g)?;
    Ok(EnergyValue {
        value: laplacian_spectrum::<T>(g).deviation_sum(avg),
        kind: EnergyKind::Laplacian,
        avg_degree: Some(avg),
    })
}

/// `LE⁺(G) = Σ |μ⁺_i - 2m/n|`.
pub fn signless_laplacian_energy<T: Real>(g: &Graph) -> Result<EnergyValue<T>, SpectraError> {
    let avg = average_degree::<T>(g)?;
    Ok(EnergyValue {
        value: signless_laplacian_spectrum::<T>(g).deviation_sum(avg),
        kind: EnergyKind::SignlessLaplacian,
        avg_degree: Some(avg),
    })
}

/// `τ(G)` from the Laplacian spectrum: `(1/n) ∏` of the `n - 1` largest
/// eigenvalues. Disconnected graphs (second-smallest eigenvalue within the
/// spectrum tolerance of zero) give exactly zero; `K_1` gives one.
///
/// # Panics
/// If `g` has no vertices.
pub fn spanning_trees_eigen<T: Real>(g: &Graph) -> T {
    assert!(g.n() >= 1, "spanning trees need at least one vertex");
    let spec = laplacian_spectrum::<T>(g);
    let vals = spec.values();
    if vals.len() == 1 {
        return T::one();
    }
    if vals[1] <= spec.tol() {
        return T::zero();
    }
    vals[1..].iter().fold(T::one(), |acc, &x| acc * x) / T::of_usize(g.n())
}

/// Exact `τ(G)`: determinant of `L(G)` with its last row and column deleted.
///
/// # Panics
/// If `g` has no vertices.
pub fn spanning_trees_exact(g: &Graph) -> BigInt {
    assert!(g.n() >= 1, "spanning trees need at least one vertex");
    let k = g.n() - 1;
    let rows = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        BigInt::from(g.degree(i))
                    } else if g.has_edge(i, j) {
                        BigInt::from(-1)
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    bareiss_determinant(rows)
}

/// Right-hand sides of the spanning-tree formula for the extended double
/// cover, evaluated from `G` alone.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverTreeFormula<T> {
    /// `½ τ(G) ∏_{i=1}^{n} (μ⁺_i + 2)`.
    pub general: T,
    /// `τ(G) ∏_{i=1}^{n-1} (μ_i + 2)` over the `n - 1` largest Laplacian
    /// eigenvalues; only for bipartite `G`.
    pub bipartite: Option<T>,
    /// Exact `τ(G)` used in both forms.
    #[serde(serialize_with = "serialize_bigint")]
    pub base_trees: BigInt,
}

fn serialize_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Predicted `τ(G*)` from `τ(G)` and the spectra of `G`.
///
/// # Panics
/// If `g` has no vertices.
pub fn edc_spanning_trees_formula<T: Real>(g: &Graph) -> CoverTreeFormula<T> {
    let base_trees = spanning_trees_exact(g);
    let tau = bigint_to_real::<T>(&base_trees);
    let q = signless_laplacian_spectrum::<T>(g);
    let general = q.values().iter().fold(tau / T::two(), |acc, &x| acc * (x + T::two()));
    let bipartite = g.is_bipartite().then(|| {
        let l = laplacian_spectrum::<T>(g);
        l.values()[1..].iter().fold(tau, |acc, &x| acc * (x + T::two()))
    });
    CoverTreeFormula { general, bipartite, base_trees }
}

/// Exact `τ(G*)`, building the cover.
pub fn edc_spanning_trees_exact(g: &Graph) -> BigInt {
    spanning_trees_exact(&extended_double_cover(g))
}

pub fn bigint_to_real<T: Real>(x: &BigInt) -> T {
    T::from_f64(x.to_f64().unwrap_or(f64::INFINITY)).unwrap_or_else(T::infinity)
}

/// True iff every Laplacian eigenvalue lies within `eps` of an integer.
pub fn is_laplacian_integral<T: Real>(g: &Graph, eps: T) -> bool {
    laplacian_spectrum::<T>(g).values().iter().all(|&x| near_integer(x, eps))
}
