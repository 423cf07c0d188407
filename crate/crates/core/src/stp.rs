//! Semi-tensor products. Operands of mismatched inner dimension are padded
//! up to the least common multiple `t` with Kronecker identity factors
//! (matrix operands) or one-vectors (vector operands); when the inner
//! dimensions already agree every product degenerates to the conventional
//! one. The Kronecker factors are materialized explicitly, then multiplied
//! with the fixed-order dense product.

use crate::dims::{checked_mul, lcm};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;
use crate::side::Side;
use crate::vector::MixedVector;

/// The all-ones vector of dimension `k`.
pub fn one_vector<T: Scalar>(k: usize) -> Result<MixedVector<T>> {
    if k == 0 {
        return Err(Error::ZeroDimension);
    }
    Ok(MixedVector::from_raw(vec![T::one(); k]))
}

/// Kronecker product: block `(i, j)` of the result is `a[i,j] * b`.
pub fn kron<T: Scalar>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    let rows = checked_mul(a.rows(), b.rows(), "kron rows")?;
    let cols = checked_mul(a.cols(), b.cols(), "kron cols")?;
    checked_mul(rows, cols, "kron size")?;
    let mut data = vec![T::zero(); rows * cols];
    for ia in 0..a.rows() {
        for ja in 0..a.cols() {
            let scale = a.get(ia, ja);
            for ib in 0..b.rows() {
                let row = ia * b.rows() + ib;
                for jb in 0..b.cols() {
                    let col = ja * b.cols() + jb;
                    data[row * cols + col] = scale * b.get(ib, jb);
                }
            }
        }
    }
    Ok(DenseMatrix::from_raw(rows, cols, data))
}

/// Matrix-matrix semi-tensor product. With `t = lcm(cols_a, rows_b)`:
/// `Left` computes `(A ⊗ I_{t/n})(B ⊗ I_{t/p})`, `Right` computes
/// `(I_{t/n} ⊗ A)(I_{t/p} ⊗ B)`. The result is
/// `(rows_a·t/cols_a) x (cols_b·t/rows_b)`.
pub fn mm<T: Scalar>(
    a: &DenseMatrix<T>,
    b: &DenseMatrix<T>,
    side: Side,
) -> Result<DenseMatrix<T>> {
    let t = lcm(a.cols(), b.rows())?;
    let fa = t / a.cols();
    let fb = t / b.rows();
    let (pa, pb) = match side {
        Side::Left => (
            kron(a, &DenseMatrix::identity(fa))?,
            kron(b, &DenseMatrix::identity(fb))?,
        ),
        Side::Right => (
            kron(&DenseMatrix::identity(fa), a)?,
            kron(&DenseMatrix::identity(fb), b)?,
        ),
    };
    pa.matmul(&pb)
}

/// Matrix-vector semi-tensor product. With `t = lcm(cols_a, dim_x)`:
/// `Left` computes `(A ⊗ I_{t/n})(x ⊗ J_{t/p})`, `Right` computes
/// `(I_{t/n} ⊗ A)(J_{t/p} ⊗ x)`. The matrix factor is `(m·t/n) x t`, so
/// the result lies in `R^{m·t/n}` (it equals `A x` when the dimensions
/// already match).
pub fn mv<T: Scalar>(
    a: &DenseMatrix<T>,
    x: &MixedVector<T>,
    side: Side,
) -> Result<MixedVector<T>> {
    let t = lcm(a.cols(), x.dim())?;
    let fa = t / a.cols();
    let fx = t / x.dim();
    let (mat, expanded) = match side {
        Side::Left => (
            kron(a, &DenseMatrix::identity(fa))?,
            x.expand(fx, Side::Left)?,
        ),
        Side::Right => (
            kron(&DenseMatrix::identity(fa), a)?,
            x.expand(fx, Side::Right)?,
        ),
    };
    Ok(MixedVector::from_raw(mat.mul_vector(expanded.as_slice())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[Vec<f64>]) -> DenseMatrix<f64> {
        DenseMatrix::from_rows(rows).unwrap()
    }

    fn vecx(data: &[f64]) -> MixedVector<f64> {
        MixedVector::new(data.to_vec()).unwrap()
    }

    // Elementwise oracle: (A ⊗ B)[i, j] = A[i/p, j/q] * B[i mod p, j mod q].
    fn kron_oracle(a: &DenseMatrix<f64>, b: &DenseMatrix<f64>) -> DenseMatrix<f64> {
        let (p, q) = (b.rows(), b.cols());
        let rows = a.rows() * p;
        let cols = a.cols() * q;
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(a.get(i / p, j / q) * b.get(i % p, j % q));
            }
        }
        DenseMatrix::new(rows, cols, data).unwrap()
    }

    #[test]
    fn one_vector_examples() {
        assert_eq!(one_vector::<f64>(1).unwrap().as_slice(), &[1.0]);
        assert_eq!(one_vector::<f64>(3).unwrap().as_slice(), &[1.0, 1.0, 1.0]);
        assert_eq!(one_vector::<f64>(5).unwrap().dim(), 5);
        assert_eq!(one_vector::<f64>(0), Err(Error::ZeroDimension));
    }

    #[test]
    fn kron_identity_times_scalar() {
        let i2 = DenseMatrix::<f64>::identity(2);
        let s = mat(&[vec![5.0]]);
        let k = kron(&i2, &s).unwrap();
        assert_eq!(k.data(), &[5.0, 0.0, 0.0, 5.0]);
    }

    #[test]
    fn kron_row_by_identity() {
        let a = mat(&[vec![1.0, 2.0]]);
        let i2 = DenseMatrix::<f64>::identity(2);
        let k = kron(&a, &i2).unwrap();
        let expected = mat(&[vec![1.0, 0.0, 2.0, 0.0], vec![0.0, 1.0, 0.0, 2.0]]);
        assert_eq!(k, expected);
        assert_eq!(k, kron_oracle(&a, &i2));
    }

    #[test]
    fn kron_column_by_row() {
        let a = mat(&[vec![1.0], vec![2.0]]);
        let b = mat(&[vec![3.0, 4.0]]);
        let k = kron(&a, &b).unwrap();
        assert_eq!(k, mat(&[vec![3.0, 4.0], vec![6.0, 8.0]]));
        assert_eq!(k, kron_oracle(&a, &b));
    }

    #[test]
    fn mm_left_pads_to_lcm() {
        let a = mat(&[vec![1.0, 2.0]]);
        let b = mat(&[vec![1.0], vec![2.0], vec![3.0], vec![4.0]]);
        let c = mm(&a, &b, Side::Left).unwrap();
        assert_eq!((c.rows(), c.cols()), (2, 1));
        assert_eq!(c.data(), &[7.0, 10.0]);
    }

    #[test]
    fn mm_right_pads_to_lcm() {
        let a = mat(&[vec![1.0, 2.0]]);
        let b = mat(&[vec![1.0], vec![2.0], vec![3.0], vec![4.0]]);
        let c = mm(&a, &b, Side::Right).unwrap();
        assert_eq!(c.data(), &[5.0, 11.0]);
    }

    #[test]
    fn mm_degenerates_to_conventional_product() {
        let a = DenseMatrix::<f64>::identity(2);
        let b = mat(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
        for side in [Side::Left, Side::Right] {
            assert_eq!(mm(&a, &b, side).unwrap(), b);
        }
    }

    #[test]
    fn mv_left_examples() {
        let a = mat(&[vec![1.0, 0.0, 0.0], vec![0.0, 0.0, 1.0]]);
        let x = vecx(&[1.0, 2.0]);
        let y = mv(&a, &x, Side::Left).unwrap();
        assert_eq!(y.as_slice(), &[1.0, 1.0, 2.0, 2.0]);

        let x6 = vecx(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let y6 = mv(&a, &x6, Side::Left).unwrap();
        assert_eq!(y6.as_slice(), &[1.0, 2.0, 5.0, 6.0]);
    }

    #[test]
    fn mv_identity_matching_dims() {
        let a = DenseMatrix::<f64>::identity(3);
        let x = vecx(&[1.0, 2.0, 3.0]);
        assert_eq!(mv(&a, &x, Side::Left).unwrap(), x);
        assert_eq!(mv(&a, &x, Side::Right).unwrap(), x);
    }

    #[test]
    fn mm_output_shape_law() {
        // rows_a·t/cols_a by cols_b·t/rows_b, exhaustively for dims <= 6.
        for m in 1..=6usize {
            for n in 1..=6usize {
                for p in 1..=6usize {
                    for q in 1..=6usize {
                        let a = DenseMatrix::<f64>::ones(m, n);
                        let b = DenseMatrix::<f64>::ones(p, q);
                        let t = crate::dims::lcm(n, p).unwrap();
                        for side in [Side::Left, Side::Right] {
                            let c = mm(&a, &b, side).unwrap();
                            assert_eq!((c.rows(), c.cols()), (m * t / n, q * t / p));
                        }
                    }
                }
            }
        }
    }
}
