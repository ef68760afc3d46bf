//! Symmetric eigensolver: Householder reduction to tridiagonal form followed
//! by the implicit-shift QL iteration, both accumulating the orthogonal
//! factor. Adapted from the EISPACK `tred2` / `tql2` pair.
//!
//! No pivoting or randomization is involved, so identical input produces
//! bit-identical output.

use super::sym::SymMatrix;
use crate::scalar::Real;

const MAX_SWEEPS_PER_EIGENVALUE: usize = 64;

/// `M = Q diag(values) Q^T` with `values` ascending and the columns of `Q`
/// the matching orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct EigenDecomposition<T> {
    pub values: Vec<T>,
    /// Row-major `order x order`, eigenvector `j` in column `j`.
    pub vectors: Vec<T>,
    order: usize,
}

impl<T: Real> EigenDecomposition<T> {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vector_entry(&self, row: usize, col: usize) -> T {
        self.vectors[row * self.order + col]
    }

    /// `max |M - Q Λ Q^T|`.
    pub fn reconstruction_residual(&self, m: &SymMatrix<T>) -> T {
        let n = self.order;
        let mut worst = T::zero();
        for i in 0..n {
            for j in 0..n {
                let mut acc = T::zero();
                for k in 0..n {
                    acc = acc + self.vector_entry(i, k) * self.values[k] * self.vector_entry(j, k);
                }
                worst = worst.max((m.get(i, j) - acc).abs());
            }
        }
        worst
    }
}

/// Eigenvalues in ascending order.
pub fn symmetric_eigenvalues<T: Real>(m: &SymMatrix<T>) -> Vec<T> {
    symmetric_eigen(m).values
}

/// Full decomposition of a symmetric matrix.
pub fn symmetric_eigen<T: Real>(m: &SymMatrix<T>) -> EigenDecomposition<T> {
    let n = m.order();
    if n == 0 {
        return EigenDecomposition { values: Vec::new(), vectors: Vec::new(), order: 0 };
    }
    let mut v: Vec<Vec<T>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut d = vec![T::zero(); n];
    let mut e = vec![T::zero(); n];
    tridiagonalize(&mut v, &mut d, &mut e);
    ql_implicit(&mut v, &mut d, &mut e);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].partial_cmp(&d[b]).unwrap_or(std::cmp::Ordering::Equal).then(a.cmp(&b)));
    let values = order.iter().map(|&k| d[k]).collect();
    let mut vectors = vec![T::zero(); n * n];
    for (col, &k) in order.iter().enumerate() {
        for row in 0..n {
            vectors[row * n + col] = v[row][k];
        }
    }
    EigenDecomposition { values, vectors, order: n }
}

/// Householder reduction. On exit `d` holds the diagonal, `e[1..]` the
/// subdiagonal and `v` the accumulated orthogonal transform.
fn tridiagonalize<T: Real>(v: &mut [Vec<T>], d: &mut [T], e: &mut [T]) {
    let n = d.len();
    let zero = T::zero();
    d.copy_from_slice(&v[n - 1][..n]);

    for i in (1..n).rev() {
        let mut scale = zero;
        let mut h = zero;
        for &x in &d[..i] {
            scale = scale + x.abs();
        }
        if scale == zero {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[i - 1][j];
                v[i][j] = zero;
                v[j][i] = zero;
            }
        } else {
            for x in &mut d[..i] {
                *x = *x / scale;
                h = h + *x * *x;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > zero {
                g = -g;
            }
            e[i] = scale * g;
            h = h - f * g;
            d[i - 1] = f - g;
            for ej in e.iter_mut().take(i) {
                *ej = zero;
            }

            for j in 0..i {
                f = d[j];
                v[j][i] = f;
                g = e[j] + v[j][j] * f;
                for k in (j + 1)..i {
                    g = g + v[k][j] * d[k];
                    e[k] = e[k] + v[k][j] * f;
                }
                e[j] = g;
            }
            f = zero;
            for j in 0..i {
                e[j] = e[j] / h;
                f = f + e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] = e[j] - hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[k][j] = v[k][j] - (f * e[k] + g * d[k]);
                }
                d[j] = v[i - 1][j];
                v[i][j] = zero;
            }
        }
        d[i] = h;
    }

    for i in 0..n - 1 {
        v[n - 1][i] = v[i][i];
        v[i][i] = T::one();
        let h = d[i + 1];
        if h != zero {
            for (dk, row) in d.iter_mut().zip(v.iter()).take(i + 1) {
                *dk = row[i + 1] / h;
            }
            for j in 0..=i {
                let g = v[..=i].iter().fold(zero, |acc, row| acc + row[i + 1] * row[j]);
                for k in 0..=i {
                    v[k][j] = v[k][j] - g * d[k];
                }
            }
        }
        for row in v.iter_mut().take(i + 1) {
            row[i + 1] = zero;
        }
    }
    for j in 0..n {
        d[j] = v[n - 1][j];
        v[n - 1][j] = zero;
    }
    v[n - 1][n - 1] = T::one();
    e[0] = zero;
}

/// Implicit QL with Wilkinson-style shifts on the tridiagonal `(d, e)`.
fn ql_implicit<T: Real>(v: &mut [Vec<T>], d: &mut [T], e: &mut [T]) {
    let n = d.len();
    let zero = T::zero();
    let one = T::one();
    let two = T::two();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = zero;

    let mut f = zero;
    let mut tst1 = zero;
    let eps = T::epsilon();
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }

        if m > l {
            let mut sweeps = 0;
            loop {
                sweeps += 1;
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (two * e[l]);
                let mut r = p.hypot(one);
                if p < zero {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di = *di - h;
                }
                f = f + h;

                p = d[m];
                let mut c = one;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = zero;
                let mut s2 = zero;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for row in v.iter_mut() {
                        let hk = row[i + 1];
                        row[i + 1] = s * row[i] + c * hk;
                        row[i] = c * row[i] - s * hk;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;

                if e[l].abs() <= eps * tst1 || sweeps >= MAX_SWEEPS_PER_EIGENVALUE {
                    break;
                }
            }
        }
        d[l] = d[l] + f;
        e[l] = zero;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(order: usize, rows: &[f64]) -> SymMatrix<f64> {
        SymMatrix::new(order, rows.to_vec()).unwrap()
    }

    #[test]
    fn two_by_two() {
        let vals = symmetric_eigenvalues(&sym(2, &[1.0, -1.0, -1.0, 1.0]));
        assert!((vals[0] - 0.0).abs() < 1e-14 && (vals[1] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn diagonal_and_trivial_sizes() {
        assert!(symmetric_eigenvalues(&SymMatrix::<f64>::zeros(0)).is_empty());
        assert_eq!(symmetric_eigenvalues(&sym(1, &[4.5])), vec![4.5]);
        let vals = symmetric_eigenvalues(&sym(3, &[3.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 2.0]));
        assert_eq!(vals, vec![-1.0, 2.0, 3.0]);
    }

    #[test]
    fn complete_bipartite_three_three() {
        let a = SymMatrix::<f64>::from_lower(6, |i, j| if (i < 3) != (j < 3) { 1.0 } else { 0.0 });
        let vals = symmetric_eigenvalues(&a);
        let expected = [-3.0, 0.0, 0.0, 0.0, 0.0, 3.0];
        for (x, y) in vals.iter().zip(expected) {
            assert!((x - y).abs() < 1e-12, "{vals:?}");
        }
    }

    #[test]
    fn reconstruction_and_orthogonality() {
        let m = SymMatrix::<f64>::from_lower(7, |i, j| ((i * 31 + j * 17) % 11) as f64 - 5.0);
        let dec = symmetric_eigen(&m);
        let bound = 1e-9 * 7.0 * m.max_abs();
        assert!(dec.reconstruction_residual(&m) <= bound);
        for a in 0..7 {
            for b in 0..7 {
                let dot: f64 = (0..7).map(|r| dec.vector_entry(r, a) * dec.vector_entry(r, b)).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                assert!((dot - target).abs() < 1e-12);
            }
        }
        assert!(dec.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn deterministic() {
        let m = SymMatrix::<f64>::from_lower(9, |i, j| ((i + 2 * j) % 3) as f64);
        let a = symmetric_eigen(&m);
        let b = symmetric_eigen(&m);
        assert_eq!(a.values, b.values);
        assert_eq!(a.vectors, b.vectors);
    }

    #[test]
    fn single_precision() {
        let m = SymMatrix::<f32>::from_lower(3, |i, j| if i == j { 2.0 } else { 1.0 });
        let vals = symmetric_eigenvalues(&m);
        assert!((vals[0] - 1.0).abs() < 1e-5 && (vals[1] - 1.0).abs() < 1e-5 && (vals[2] - 4.0).abs() < 1e-5);
    }
}
