//! Order-d hypermatrices stored in lexicographic index order with the last
//! index varying fastest (row-major order for d = 2). Provides the vector
//! form, the contraction product pairing one axis of each operand, and
//! per-axis operator application via strided loops.

use crate::dims::checked_product;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;
use crate::vector::MixedVector;

#[derive(Debug, Clone, PartialEq)]
pub struct Hypermatrix<T> {
    dims: Vec<usize>,
    data: Vec<T>,
}

impl<T: Scalar> Hypermatrix<T> {
    pub fn new(dims: Vec<usize>, data: Vec<T>) -> Result<Self> {
        if dims.is_empty() || dims.iter().any(|&d| d == 0) {
            return Err(Error::ZeroDimension);
        }
        let expected = checked_product(&dims, "hypermatrix size")?;
        if data.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: data.len(),
            });
        }
        if let Some(index) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { dims, data })
    }

    pub(crate) fn from_raw(dims: Vec<usize>, data: Vec<T>) -> Self {
        debug_assert!(!dims.is_empty() && dims.iter().all(|&d| d >= 1));
        debug_assert_eq!(data.len(), dims.iter().product::<usize>());
        Self { dims, data }
    }

    pub fn order(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        false // dims are all >= 1, so there is always at least one entry
    }

    /// Entry at a full multi-index.
    pub fn get(&self, index: &[usize]) -> T {
        assert_eq!(index.len(), self.order(), "index arity mismatch");
        let mut offset = 0;
        for (k, (&i, &d)) in index.iter().zip(&self.dims).enumerate() {
            assert!(i < d, "index {i} out of range for axis {k}");
            offset = offset * d + i;
        }
        self.data[offset]
    }

    /// The vector form: all entries in lexicographic order (last index
    /// fastest), as a mixed-dimension vector of dimension `prod(dims)`.
    pub fn vectorize(&self) -> MixedVector<T> {
        MixedVector::from_raw(self.data.clone())
    }

    /// Inverse of [`vectorize`](Self::vectorize) for a given shape.
    pub fn devectorize(v: &MixedVector<T>, dims: &[usize]) -> Result<Self> {
        if dims.is_empty() || dims.iter().any(|&d| d == 0) {
            return Err(Error::ZeroDimension);
        }
        let expected = checked_product(dims, "hypermatrix size")?;
        if v.dim() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: v.dim(),
            });
        }
        Ok(Self::from_raw(dims.to_vec(), v.as_slice().to_vec()))
    }

    /// An order-2 hypermatrix from a matrix (same row-major layout).
    pub fn from_matrix(m: &DenseMatrix<T>) -> Self {
        Self::from_raw(vec![m.rows(), m.cols()], m.data().to_vec())
    }

    /// The matrix view of an order-2 hypermatrix.
    pub fn to_matrix(&self) -> Result<DenseMatrix<T>> {
        if self.order() != 2 {
            return Err(Error::Shape(format!(
                "expected an order-2 hypermatrix, got order {}",
                self.order()
            )));
        }
        Ok(DenseMatrix::from_raw(
            self.dims[0],
            self.dims[1],
            self.data.clone(),
        ))
    }

    /// Contraction product pairing axis `s` of `self` with axis `t` of
    /// `other` (both zero-based). The result carries the remaining axes of
    /// `self` followed by the remaining axes of `other`; entries are sums
    /// over the shared range in ascending order.
    pub fn contract(&self, s: usize, other: &Self, t: usize) -> Result<Self> {
        if s >= self.order() || t >= other.order() {
            return Err(Error::Shape(format!(
                "contraction axes ({s}, {t}) out of range for orders ({}, {})",
                self.order(),
                other.order()
            )));
        }
        if self.dims[s] != other.dims[t] {
            return Err(Error::Shape(format!(
                "contracted axes have ranges {} and {}",
                self.dims[s], other.dims[t]
            )));
        }
        let mut out_dims: Vec<usize> = Vec::with_capacity(self.order() + other.order() - 2);
        out_dims.extend(self.dims.iter().enumerate().filter(|&(k, _)| k != s).map(|(_, &d)| d));
        out_dims.extend(other.dims.iter().enumerate().filter(|&(k, _)| k != t).map(|(_, &d)| d));
        if out_dims.is_empty() {
            return Err(Error::Shape(
                "contraction of two order-1 operands has order 0, which is not representable"
                    .to_owned(),
            ));
        }

        let shared = self.dims[s];
        let (pre_a, suf_a) = split_products(&self.dims, s);
        let (pre_b, suf_b) = split_products(&other.dims, t);
        let outer_b = pre_b * suf_b;
        let mut data = vec![T::zero(); pre_a * suf_a * outer_b];
        let mut out = 0;
        for hi_a in 0..pre_a {
            for lo_a in 0..suf_a {
                let base_a = hi_a * shared * suf_a + lo_a;
                for hi_b in 0..pre_b {
                    for lo_b in 0..suf_b {
                        let base_b = hi_b * shared * suf_b + lo_b;
                        let mut acc = T::zero();
                        for k in 0..shared {
                            acc = acc
                                + self.data[base_a + k * suf_a] * other.data[base_b + k * suf_b];
                        }
                        data[out] = acc;
                        out += 1;
                    }
                }
            }
        }
        Ok(Self::from_raw(out_dims, data))
    }

    /// Applies a matrix along one axis: the axis range `n_k` is replaced by
    /// `rows(op)` and each fiber along that axis is multiplied by `op`.
    /// Equivalent to the Kronecker-expanded operator
    /// `I_{pre} ⊗ op ⊗ I_{suf}` acting on the vector form, but computed by
    /// strided loops without materializing it.
    pub fn apply_axis(&self, axis: usize, op: &DenseMatrix<T>) -> Result<Self> {
        if axis >= self.order() {
            return Err(Error::Shape(format!(
                "axis {axis} out of range for order {}",
                self.order()
            )));
        }
        if op.cols() != self.dims[axis] {
            return Err(Error::Shape(format!(
                "operator has {} columns but axis {axis} has range {}",
                op.cols(),
                self.dims[axis]
            )));
        }
        let (pre, suf) = split_products(&self.dims, axis);
        let n = self.dims[axis];
        let r = op.rows();
        let mut out_dims = self.dims.clone();
        out_dims[axis] = r;
        let mut data = vec![T::zero(); pre * r * suf];
        for hi in 0..pre {
            for row in 0..r {
                let out_base = (hi * r + row) * suf;
                let in_base = hi * n * suf;
                for lo in 0..suf {
                    let mut acc = T::zero();
                    for k in 0..n {
                        acc = acc + op.get(row, k) * self.data[in_base + k * suf + lo];
                    }
                    data[out_base + lo] = acc;
                }
            }
        }
        Ok(Self::from_raw(out_dims, data))
    }
}

/// Products of the axis ranges before and after `axis`.
fn split_products(dims: &[usize], axis: usize) -> (usize, usize) {
    let pre = dims[..axis].iter().product();
    let suf = dims[axis + 1..].iter().product();
    (pre, suf)
}
