//! Singular values by one-sided Jacobi column orthogonalization. Adequate
//! for the small dense matrices this crate analyzes; avoids forming the
//! Gram matrix, so small singular values keep full relative accuracy.

use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;

/// Relative threshold below which a singular value counts as zero.
pub const RANK_REL_TOL: f64 = 1e-9;

const MAX_SWEEPS: usize = 64;

/// Singular values in descending order.
pub fn singular_values<T: Scalar>(a: &DenseMatrix<T>) -> Vec<T> {
    let m = a.rows();
    let n = a.cols();
    let mut cols: Vec<Vec<T>> = (0..n)
        .map(|j| (0..m).map(|i| a.get(i, j)).collect())
        .collect();
    let eps = T::epsilon() * T::from_usize(8 * m.max(n));
    let two = T::from_f64(2.0);

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let (head, tail) = cols.split_at_mut(q);
                let cp = &mut head[p];
                let cq = &mut tail[0];
                let mut alpha = T::zero();
                let mut beta = T::zero();
                let mut gamma = T::zero();
                for i in 0..m {
                    alpha = alpha + cp[i] * cp[i];
                    beta = beta + cq[i] * cq[i];
                    gamma = gamma + cp[i] * cq[i];
                }
                if alpha == T::zero() || beta == T::zero() {
                    continue;
                }
                if gamma.abs() <= eps * (alpha.sqrt() * beta.sqrt()) {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (two * gamma);
                let tan = zeta.signum() / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let cos = T::one() / (T::one() + tan * tan).sqrt();
                let sin = cos * tan;
                for i in 0..m {
                    let vp = cp[i];
                    let vq = cq[i];
                    cp[i] = cos * vp - sin * vq;
                    cq[i] = sin * vp + cos * vq;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut sv: Vec<T> = cols
        .iter()
        .map(|c| {
            let mut s = T::zero();
            for &v in c {
                s = s + v * v;
            }
            s.sqrt()
        })
        .collect();
    sv.sort_by(|a, b| b.partial_cmp(a).expect("singular values are finite"));
    sv
}

/// Number of singular values above `RANK_REL_TOL` times the largest one.
pub fn numerical_rank<T: Scalar>(a: &DenseMatrix<T>) -> usize {
    let sv = singular_values(a);
    let smax = sv[0];
    if smax == T::zero() {
        return 0;
    }
    let threshold = T::from_f64(RANK_REL_TOL) * smax;
    sv.iter().filter(|&&s| s > threshold).count()
}
