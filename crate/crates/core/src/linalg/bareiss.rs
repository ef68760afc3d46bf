use std::ops::Neg;

use num_integer::Integer;

/// Integral domain with exact division, enough for fraction-free elimination.
pub trait ExactRing: Integer + Clone + Neg<Output = Self> {}

impl<T: Integer + Clone + Neg<Output = T>> ExactRing for T {}

/// Determinant by Bareiss fraction-free elimination.
///
/// Every intermediate is itself a minor of the input, so the divisions are
/// exact and no rational arithmetic is needed. The empty matrix has
/// determinant one.
///
/// # Panics
/// If the rows are not all of length `rows.len()`.
pub fn bareiss_determinant<R: ExactRing>(mut rows: Vec<Vec<R>>) -> R {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "determinant needs a square matrix");
    let mut sign_flipped = false;
    let mut prev_pivot = R::one();
    for k in 0..n {
        if rows[k][k].is_zero() {
            match (k + 1..n).find(|&r| !rows[r][k].is_zero()) {
                Some(r) => {
                    rows.swap(k, r);
                    sign_flipped = !sign_flipped;
                }
                None => return R::zero(),
            }
        }
        let pivot = rows[k][k].clone();
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = pivot.clone() * rows[i][j].clone() - rows[i][k].clone() * rows[k][j].clone();
                rows[i][j] = num / prev_pivot.clone();
            }
            rows[i][k] = R::zero();
        }
        prev_pivot = pivot;
    }
    let det = if n == 0 { R::one() } else { rows[n - 1][n - 1].clone() };
    if sign_flipped {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn cofactor_det(m: &[Vec<i64>]) -> i64 {
        // Laplace expansion along the first row; independent of elimination.
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn small_known_values() {
        assert_eq!(bareiss_determinant::<i64>(vec![]), 1);
        assert_eq!(bareiss_determinant(vec![vec![7i64]]), 7);
        assert_eq!(bareiss_determinant(vec![vec![0i64, 1], vec![1, 0]]), -1);
        assert_eq!(bareiss_determinant(vec![vec![1i64, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn agrees_with_cofactor_expansion() {
        let mut seed = 12345u64;
        for n in 1..7 {
            for _ in 0..20 {
                let m: Vec<Vec<i64>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                                ((seed >> 33) % 7) as i64 - 3
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(bareiss_determinant(m.clone()), cofactor_det(&m));
            }
        }
    }

    #[test]
    fn big_integers() {
        let m: Vec<Vec<BigInt>> =
            (0..3).map(|i| (0..3).map(|j| BigInt::from(if i == j { 3 } else { -1 })).collect()).collect();
        assert_eq!(bareiss_determinant(m), BigInt::from(16));
    }
}
