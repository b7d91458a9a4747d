//! Dense symmetric linear algebra for small channel-count matrices.
//!
//! Spatial covariances here are at most a few dozen rows, so a cyclic
//! Jacobi eigensolver and an unblocked Cholesky are both fast and more
//! accurate than anything fancier, and they stay generic over the scalar
//! type.

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Eigendecomposition of a symmetric matrix: `a = v * diag(values) * v^T`.
///
/// Eigenvalues are sorted descending; eigenvectors are the matching
/// columns of `v` (orthonormal).
pub struct SymEigen<T: Scalar> {
    pub values: Vec<T>,
    pub vectors: Array2<T>,
}

/// Cyclic Jacobi rotations on a symmetric matrix.
pub fn symmetric_eigen<T: Scalar>(a: &Array2<T>) -> SymEigen<T> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "matrix must be square");
    let mut m = a.clone();
    let mut v = Array2::<T>::eye(n);
    if n <= 1 {
        return SymEigen {
            values: m.diag().to_vec(),
            vectors: v,
        };
    }

    let frob = m.iter().map(|x| *x * *x).sum::<T>().sqrt();
    let tol = T::epsilon() * frob.max(T::one());
    let max_sweeps = 64;

    for _ in 0..max_sweeps {
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off += m[[p, q]] * m[[p, q]];
            }
        }
        if off.sqrt() <= tol {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = m[[p, q]];
                if apq.abs() <= tol * T::from_f64c(1e-3) {
                    continue;
                }
                let app = m[[p, p]];
                let aqq = m[[q, q]];
                let theta = (aqq - app) / (T::from_f64c(2.0) * apq);
                // Smaller-magnitude root keeps rotations stable.
                let t = if theta.abs() > T::from_f64c(1e10) {
                    (T::from_f64c(2.0) * theta).recip()
                } else {
                    let sign = if theta >= T::zero() {
                        T::one()
                    } else {
                        -T::one()
                    };
                    sign / (theta.abs() + (theta * theta + T::one()).sqrt())
                };
                let c = (t * t + T::one()).sqrt().recip();
                let s = t * c;

                for k in 0..n {
                    let mkp = m[[k, p]];
                    let mkq = m[[k, q]];
                    m[[k, p]] = c * mkp - s * mkq;
                    m[[k, q]] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[[p, k]];
                    let mqk = m[[q, k]];
                    m[[p, k]] = c * mpk - s * mqk;
                    m[[q, k]] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[[k, p]];
                    let vkq = v[[k, q]];
                    v[[k, p]] = c * vkp - s * vkq;
                    v[[k, q]] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        m[[j, j]]
            .partial_cmp(&m[[i, i]])
            .expect("NaN eigenvalue")
    });
    let values = order.iter().map(|&i| m[[i, i]]).collect();
    let mut vectors = Array2::<T>::zeros((n, n));
    for (dst, &src) in order.iter().enumerate() {
        for k in 0..n {
            vectors[[k, dst]] = v[[k, src]];
        }
    }
    SymEigen { values, vectors }
}

/// Cholesky factor `l` (lower triangular) of a symmetric positive-definite
/// matrix; `Err(SingularCovariance)` if a pivot is not strictly positive.
pub fn cholesky<T: Scalar>(a: &Array2<T>) -> Result<Array2<T>> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "matrix must be square");
    let mut l = Array2::<T>::zeros((n, n));
    for i in 0..n {
        for j in 0..=i {
            let mut sum = a[[i, j]];
            for k in 0..j {
                sum -= l[[i, k]] * l[[j, k]];
            }
            if i == j {
                if sum <= T::zero() || !sum.is_finite() {
                    return Err(Error::SingularCovariance);
                }
                l[[i, i]] = sum.sqrt();
            } else {
                l[[i, j]] = sum / l[[j, j]];
            }
        }
    }
    Ok(l)
}

/// Solves `a x = b` for symmetric positive-definite `a` via Cholesky.
pub fn solve_spd<T: Scalar>(a: &Array2<T>, b: &[T]) -> Result<Vec<T>> {
    let l = cholesky(a)?;
    let n = b.len();
    // forward: l y = b
    let mut y = vec![T::zero(); n];
    for i in 0..n {
        let mut sum = b[i];
        for k in 0..i {
            sum -= l[[i, k]] * y[k];
        }
        y[i] = sum / l[[i, i]];
    }
    // backward: l^T x = y
    let mut x = vec![T::zero(); n];
    for i in (0..n).rev() {
        let mut sum = y[i];
        for k in i + 1..n {
            sum -= l[[k, i]] * x[k];
        }
        x[i] = sum / l[[i, i]];
    }
    Ok(x)
}

/// Shrinks a covariance toward the scaled identity:
/// `(1 - gamma) * s + gamma * (trace(s)/d) * I`.
pub fn shrink_covariance<T: Scalar>(s: &Array2<T>, gamma: T) -> Array2<T> {
    if gamma == T::zero() {
        return s.clone();
    }
    let d = s.nrows();
    let target = s.diag().sum() / T::from_f64c(d as f64);
    let mut out = s.mapv(|x| (T::one() - gamma) * x);
    for i in 0..d {
        out[[i, i]] += gamma * target;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::arr2;

    fn max_abs_diff(a: &Array2<f64>, b: &Array2<f64>) -> f64 {
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn eigen_of_known_2x2() {
        // [[2, 1], [1, 2]] has eigenpairs (3, [1,1]/sqrt2), (1, [1,-1]/sqrt2).
        let a = arr2(&[[2.0_f64, 1.0], [1.0, 2.0]]);
        let e = symmetric_eigen(&a);
        assert!((e.values[0] - 3.0).abs() < 1e-12);
        assert!((e.values[1] - 1.0).abs() < 1e-12);
        let v0 = (e.vectors[[0, 0]], e.vectors[[1, 0]]);
        assert!((v0.0.abs() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((v0.0 - v0.1).abs() < 1e-12);
    }

    #[test]
    fn eigen_reconstructs_random_symmetric() {
        let mut a = Array2::<f64>::zeros((8, 8));
        // deterministic "random" entries
        let mut state = 0x9e3779b97f4a7c15_u64;
        for i in 0..8 {
            for j in 0..=i {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                let v = ((state >> 11) as f64 / (1u64 << 53) as f64) - 0.5;
                a[[i, j]] = v;
                a[[j, i]] = v;
            }
        }
        let e = symmetric_eigen(&a);
        let lambda = Array2::from_diag(&ndarray::Array1::from(e.values.clone()));
        let recon = e.vectors.dot(&lambda).dot(&e.vectors.t());
        assert!(max_abs_diff(&a, &recon) < 1e-12);
        // orthonormal columns
        let gram = e.vectors.t().dot(&e.vectors);
        assert!(max_abs_diff(&gram, &Array2::eye(8)) < 1e-12);
    }

    #[test]
    fn cholesky_solve_roundtrip() {
        let a = arr2(&[[4.0, 2.0, 0.6], [2.0, 5.0, 1.0], [0.6, 1.0, 3.0]]);
        let x_true = vec![1.0, -2.0, 0.5];
        let b: Vec<f64> = (0..3)
            .map(|i| (0..3).map(|j| a[[i, j]] * x_true[j]).sum())
            .collect();
        let x = solve_spd(&a, &b).unwrap();
        for (xi, ti) in x.iter().zip(&x_true) {
            assert!((xi - ti).abs() < 1e-12);
        }
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let a = arr2(&[[1.0, 2.0], [2.0, 1.0]]); // eigenvalues 3, -1
        assert!(matches!(cholesky(&a), Err(Error::SingularCovariance)));
    }

    #[test]
    fn shrinkage_preserves_trace() {
        let s = arr2(&[[0.8, 0.3], [0.3, 0.2]]);
        let sh = shrink_covariance(&s, 0.05);
        let tr: f64 = sh.diag().sum();
        assert!((tr - 1.0).abs() < 1e-12);
        assert!((sh[[0, 1]] - 0.95 * 0.3).abs() < 1e-15);
    }
}
