//! Dense linear algebra used by the spectral layer: symmetric matrices, a
//! tridiagonal QL eigensolver and fraction-free integer determinants.

mod bareiss;
mod eigen;
mod sym;

pub use bareiss::{bareiss_determinant, ExactRing};
pub use eigen::{symmetric_eigen, symmetric_eigenvalues, EigenDecomposition};
pub use sym::{LinalgError, SymMatrix};
