//! Spectral graph toolkit for extended double covers, k-fold graphs and
//! their joins and products.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`] and [`construct`]: simple labeled graphs and every
//!   construction (complements, joins, cartesian/Kronecker products,
//!   extended double covers `G*`, iterated covers `G^{k*}`, k-fold graphs
//!   `D^k[G]`, line graphs);
//! - [`linalg`]: dense symmetric eigensolver and exact integer determinants;
//! - [`spectra`]: adjacency / Laplacian / signless Laplacian spectra, graph
//!   energy `E`, Laplacian energy `LE`, `LE⁺`, spanning-tree counts;
//! - [`theorems`]: closed-form spectral predictors, energy identities and
//!   equienergetic family generators, each checked against direct
//!   eigencomputation and summarised in a [`TheoremReport`];
//! - [`io`]: graph6 and edge-list formats.
//!
//! Floating-point code is generic over [`Real`] (`f32` or `f64`); the
//! `*64` aliases below fix the scalar to `f64`, which is what the checks use.

pub mod construct;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod sample;
pub mod scalar;
pub mod search;
pub mod spectra;
pub mod theorems;

pub use graph::{Graph, GraphError, LoopyMatrix, NamedFamily};
pub use scalar::Real;
pub use spectra::{EnergyKind, EnergyValue, MatrixKind, Spectrum};
pub use theorems::{FamilySpec, TheoremError, TheoremId, TheoremReport, Verdict};

pub type Spectrum64 = Spectrum<f64>;
pub type SymMatrix64 = linalg::SymMatrix<f64>;
pub type EnergyValue64 = EnergyValue<f64>;
pub type TheoremReport64 = TheoremReport<f64>;
pub type FamilySpec64 = FamilySpec<f64>;
