//! Small dense linear-algebra routines shared by the estimation and kernel
//! modules: a pivoted Gaussian solver and a Jacobi eigenvalue sweep for
//! symmetric matrices. Matrices are row-major `&[f64]` slices of length
//! `n * n`; nothing here is tuned for large `n`.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float as _;

/// Solves `a * x = b` for square row-major `a` by Gaussian elimination with
/// partial pivoting. Returns `None` when a pivot collapses to (near) zero.
pub fn solve_dense(a: &[f64], b: &[f64], n: usize) -> Option<Vec<f64>> {
    assert_eq!(a.len(), n * n, "matrix shape mismatch");
    assert_eq!(b.len(), n, "rhs length mismatch");
    let mut m = a.to_vec();
    let mut x = b.to_vec();

    for col in 0..n {
        let mut pivot = col;
        let mut best = m[col * n + col].abs();
        for row in col + 1..n {
            let v = m[row * n + col].abs();
            if v > best {
                best = v;
                pivot = row;
            }
        }
        if best < f64::EPSILON * n as f64 {
            return None;
        }
        if pivot != col {
            for k in 0..n {
                m.swap(col * n + k, pivot * n + k);
            }
            x.swap(col, pivot);
        }
        let diag = m[col * n + col];
        for row in col + 1..n {
            let factor = m[row * n + col] / diag;
            if factor == 0.0 {
                continue;
            }
            for k in col..n {
                m[row * n + k] -= factor * m[col * n + k];
            }
            x[row] -= factor * x[col];
        }
    }

    for col in (0..n).rev() {
        let mut sum = x[col];
        for k in col + 1..n {
            sum -= m[col * n + k] * x[k];
        }
        x[col] = sum / m[col * n + col];
    }
    Some(x)
}

/// All eigenvalues of a symmetric row-major matrix via cyclic Jacobi
/// rotations, returned in ascending order. Only the values are accumulated;
/// eigenvectors are not tracked.
pub fn symmetric_eigenvalues(a: &[f64], n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n, "matrix shape mismatch");
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![a[0]];
    }
    let mut m = a.to_vec();

    // Scale-aware stopping threshold on the off-diagonal Frobenius mass.
    let norm: f64 = a.iter().map(|v| v * v).sum::<f64>().sqrt().max(1.0);
    let tol = 1e-14 * norm;

    const MAX_SWEEPS: usize = 64;
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += m[p * n + q] * m[p * n + q];
            }
        }
        if off.sqrt() <= tol {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq.abs() <= tol / (n as f64) {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for k in 0..n {
                    let mkp = m[k * n + p];
                    let mkq = m[k * n + q];
                    m[k * n + p] = c * mkp - s * mkq;
                    m[k * n + q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p * n + k];
                    let mqk = m[q * n + k];
                    m[p * n + k] = c * mpk - s * mqk;
                    m[q * n + k] = s * mpk + c * mqk;
                }
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| m[i * n + i]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalue is NaN"));
    eig
}

/// Smallest eigenvalue of a symmetric matrix; used for Gram PSD validation.
pub fn min_symmetric_eigenvalue(a: &[f64], n: usize) -> f64 {
    symmetric_eigenvalues(a, n).first().copied().unwrap_or(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn solves_small_system() {
        // [2 1; 1 3] x = [3; 5] -> x = [4/5, 7/5]
        let a = [2.0, 1.0, 1.0, 3.0];
        let b = [3.0, 5.0];
        let x = solve_dense(&a, &b, 2).unwrap();
        assert_abs_diff_eq!(x[0], 0.8, epsilon = 1e-12);
        assert_abs_diff_eq!(x[1], 1.4, epsilon = 1e-12);
    }

    #[test]
    fn rejects_singular_system() {
        let a = [1.0, 2.0, 2.0, 4.0];
        let b = [1.0, 2.0];
        assert!(solve_dense(&a, &b, 2).is_none());
    }

    #[test]
    fn pivoting_handles_zero_leading_entry() {
        let a = [0.0, 1.0, 1.0, 0.0];
        let b = [2.0, 3.0];
        let x = solve_dense(&a, &b, 2).unwrap();
        assert_abs_diff_eq!(x[0], 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(x[1], 2.0, epsilon = 1e-12);
    }

    #[test]
    fn eigenvalues_of_diagonal_matrix() {
        let a = [3.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 2.0];
        let eig = symmetric_eigenvalues(&a, 3);
        assert_abs_diff_eq!(eig[0], -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(eig[1], 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(eig[2], 3.0, epsilon = 1e-12);
    }

    #[test]
    fn eigenvalues_of_known_symmetric_matrix() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3.
        let a = [2.0, 1.0, 1.0, 2.0];
        let eig = symmetric_eigenvalues(&a, 2);
        assert_abs_diff_eq!(eig[0], 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(eig[1], 3.0, epsilon = 1e-10);
    }

    #[test]
    fn eigenvalue_sum_matches_trace_on_random_matrix() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let n = 25;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let v = rng.gen_range(-1.0..1.0);
                a[i * n + j] = v;
                a[j * n + i] = v;
            }
        }
        let eig = symmetric_eigenvalues(&a, n);
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        let sum: f64 = eig.iter().sum();
        assert_abs_diff_eq!(sum, trace, epsilon = 1e-8);

        // Frobenius norm identity: sum of squared eigenvalues.
        let frob: f64 = a.iter().map(|v| v * v).sum();
        let eig_sq: f64 = eig.iter().map(|v| v * v).sum();
        assert_abs_diff_eq!(frob, eig_sq, epsilon = 1e-7);
    }
}
