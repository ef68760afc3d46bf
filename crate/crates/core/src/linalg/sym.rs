use thiserror::Error;

use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("expected {expected} entries for a square matrix, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {gap:e}")]
    NotSymmetric { i: usize, j: usize, gap: f64 },
    #[error("matrix contains a non-finite entry at ({0}, {1})")]
    NonFinite(usize, usize),
}

/// Dense real symmetric matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix<T> {
    order: usize,
    entries: Vec<T>,
}

impl<T: Real> SymMatrix<T> {
    /// Largest tolerated `|a_ij - a_ji|`.
    pub fn symmetry_tolerance() -> T {
        T::of(1e-12)
    }

    pub fn new(order: usize, entries: Vec<T>) -> Result<Self, LinalgError> {
        if entries.len() != order * order {
            return Err(LinalgError::Shape { expected: order * order, got: entries.len() });
        }
        for i in 0..order {
            for j in 0..order {
                let a = entries[i * order + j];
                if !a.is_finite() {
                    return Err(LinalgError::NonFinite(i, j));
                }
                if j < i {
                    let gap = (a - entries[j * order + i]).abs();
                    if gap > Self::symmetry_tolerance() {
                        return Err(LinalgError::NotSymmetric { i, j, gap: gap.as_f64() });
                    }
                }
            }
        }
        Ok(Self { order, entries })
    }

    /// Builds `f(i, j)` for `j <= i` and mirrors it, so the result is
    /// symmetric by construction.
    pub fn from_lower(order: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = vec![T::zero(); order * order];
        for i in 0..order {
            for j in 0..=i {
                let v = f(i, j);
                entries[i * order + j] = v;
                entries[j * order + i] = v;
            }
        }
        Self { order, entries }
    }

    pub fn zeros(order: usize) -> Self {
        Self { order, entries: vec![T::zero(); order * order] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    /// `max |a_ij|`, zero for the empty matrix.
    pub fn max_abs(&self) -> T {
        self.entries.iter().fold(T::zero(), |acc, &x| acc.max(x.abs()))
    }

    pub fn trace(&self) -> T {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sums(&self) -> Vec<T> {
        (0..self.order).map(|i| self.row(i).iter().copied().sum()).collect()
    }
}
