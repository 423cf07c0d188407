//! Projection-based compression and decompression for 1-D vectors, 2-D
//! matrices, and order-d hypermatrices, with round-trip error reporting.
//!
//! Two equivalent realizations of the d-dimensional codec are kept: the
//! production path applies the per-axis projector with strided loops, and
//! the staged-Kronecker path materializes
//! `I_{n^{<i}} ⊗ Π ⊗ I_{m^{>i}}` for each axis (in descending axis order)
//! and applies it to the vector form. The second path costs quadratic
//! memory and exists so the two routes can be checked against each other.

use crate::dims::{checked_product, lcm};
use crate::error::{Error, Result};
use crate::hypermatrix::Hypermatrix;
use crate::matrix::DenseMatrix;
use crate::projection::{project, Projector};
use crate::scalar::Scalar;
use crate::side::Side;
use crate::stp;
use crate::vector::MixedVector;
use crate::xspace;

/// Shapes for one codec direction: `source_dims` is the uncompressed
/// shape, `target_dims` the compressed one (entries may also grow; the
/// same spec drives both directions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodecSpec {
    source_dims: Vec<usize>,
    target_dims: Vec<usize>,
    side: Side,
}

impl CodecSpec {
    pub fn new(source_dims: Vec<usize>, target_dims: Vec<usize>, side: Side) -> Result<Self> {
        if source_dims.is_empty() || target_dims.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if source_dims.len() != target_dims.len() {
            return Err(Error::Shape(format!(
                "source arity {} does not match target arity {}",
                source_dims.len(),
                target_dims.len()
            )));
        }
        if source_dims.iter().chain(&target_dims).any(|&d| d == 0) {
            return Err(Error::ZeroDimension);
        }
        checked_product(&source_dims, "source size")?;
        checked_product(&target_dims, "target size")?;
        for (&n, &m) in source_dims.iter().zip(&target_dims) {
            lcm(n, m)?;
        }
        Ok(Self {
            source_dims,
            target_dims,
            side,
        })
    }

    pub fn source_dims(&self) -> &[usize] {
        &self.source_dims
    }

    pub fn target_dims(&self) -> &[usize] {
        &self.target_dims
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn order(&self) -> usize {
        self.source_dims.len()
    }

    /// `prod(target_dims) / prod(source_dims)`.
    pub fn compression_ratio<T: Scalar>(&self) -> T {
        let target: usize = self.target_dims.iter().product();
        let source: usize = self.source_dims.iter().product();
        T::from_usize(target) / T::from_usize(source)
    }
}

/// Round-trip quality metrics; `l2_error` is the plain Euclidean error
/// between the recovered and original vector forms, `dv_error` the
/// dimension-normalized distance, and `rmse = l2_error / sqrt(N)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoundTripReport<T> {
    pub l2_error: T,
    pub dv_error: T,
    pub rmse: T,
    pub compression_ratio: T,
}

/// Compresses a vector to dimension `m` by projection.
pub fn compress_1d<T: Scalar>(
    x: &MixedVector<T>,
    m: usize,
    side: Side,
) -> Result<MixedVector<T>> {
    project(x, m, side)
}

/// Decompresses a vector back to dimension `n` by projection.
pub fn decompress_1d<T: Scalar>(
    y: &MixedVector<T>,
    n: usize,
    side: Side,
) -> Result<MixedVector<T>> {
    project(y, n, side)
}

/// Compresses a matrix to `s x t`: rows through one projector, columns
/// through the transpose of the other.
pub fn compress_2d<T: Scalar>(
    a: &DenseMatrix<T>,
    s: usize,
    t: usize,
    side: Side,
) -> Result<DenseMatrix<T>> {
    let row_proj = Projector::cached(a.rows(), s, side)?;
    let col_proj = Projector::cached(a.cols(), t, side)?;
    row_proj
        .matrix()
        .matmul(a)?
        .matmul(&col_proj.matrix().transpose())
}

/// Decompresses a matrix back to `m x n`.
pub fn decompress_2d<T: Scalar>(
    b: &DenseMatrix<T>,
    m: usize,
    n: usize,
    side: Side,
) -> Result<DenseMatrix<T>> {
    compress_2d(b, m, n, side)
}

fn check_dims(expected: &[usize], got: &[usize], what: &str) -> Result<()> {
    if expected != got {
        return Err(Error::Shape(format!(
            "{what} dims {got:?} do not match the codec spec {expected:?}"
        )));
    }
    Ok(())
}

/// Compresses an order-d hypermatrix by applying the per-axis projector
/// on every axis in ascending order (the axis order does not affect the
/// result).
pub fn compress_nd<T: Scalar>(a: &Hypermatrix<T>, spec: &CodecSpec) -> Result<Hypermatrix<T>> {
    check_dims(spec.source_dims(), a.dims(), "input")?;
    apply_per_axis(a, spec.source_dims(), spec.target_dims(), spec.side())
}

/// Decompresses an order-d hypermatrix (projectors run target → source).
pub fn decompress_nd<T: Scalar>(b: &Hypermatrix<T>, spec: &CodecSpec) -> Result<Hypermatrix<T>> {
    check_dims(spec.target_dims(), b.dims(), "input")?;
    apply_per_axis(b, spec.target_dims(), spec.source_dims(), spec.side())
}

fn apply_per_axis<T: Scalar>(
    input: &Hypermatrix<T>,
    from: &[usize],
    to: &[usize],
    side: Side,
) -> Result<Hypermatrix<T>> {
    let mut current = input.clone();
    for axis in 0..from.len() {
        let proj = Projector::cached(from[axis], to[axis], side)?;
        current = current.apply_axis(axis, proj.matrix())?;
    }
    Ok(current)
}

/// Staged-Kronecker realization of [`compress_nd`]: stage `i` applies
/// `I_{prod(from[..i])} ⊗ Π_i ⊗ I_{prod(to[i+1..])}` to the vector form,
/// for `i = d-1, …, 0`.
pub fn compress_nd_kron<T: Scalar>(
    a: &Hypermatrix<T>,
    spec: &CodecSpec,
) -> Result<Hypermatrix<T>> {
    check_dims(spec.source_dims(), a.dims(), "input")?;
    apply_kron_pipeline(a, spec.source_dims(), spec.target_dims(), spec.side())
}

/// Staged-Kronecker realization of [`decompress_nd`].
pub fn decompress_nd_kron<T: Scalar>(
    b: &Hypermatrix<T>,
    spec: &CodecSpec,
) -> Result<Hypermatrix<T>> {
    check_dims(spec.target_dims(), b.dims(), "input")?;
    apply_kron_pipeline(b, spec.target_dims(), spec.source_dims(), spec.side())
}

fn apply_kron_pipeline<T: Scalar>(
    input: &Hypermatrix<T>,
    from: &[usize],
    to: &[usize],
    side: Side,
) -> Result<Hypermatrix<T>> {
    let d = from.len();
    let mut v = input.vectorize().into_vec();
    for axis in (0..d).rev() {
        let pre = checked_product(&from[..axis], "kron stage prefix")?;
        let suf = checked_product(&to[axis + 1..], "kron stage suffix")?;
        let proj = Projector::cached(from[axis], to[axis], side)?;
        let stage = stp::kron(
            &stp::kron(&DenseMatrix::identity(pre), proj.matrix())?,
            &DenseMatrix::identity(suf),
        )?;
        v = stage.mul_vector(&v)?;
    }
    Ok(Hypermatrix::devectorize(
        &MixedVector::from_raw(v),
        to,
    )?)
}

/// Compress, decompress, and report the error between the recovered and
/// the original signal.
pub fn roundtrip<T: Scalar>(
    a: &Hypermatrix<T>,
    spec: &CodecSpec,
) -> Result<(Hypermatrix<T>, Hypermatrix<T>, RoundTripReport<T>)> {
    let compressed = compress_nd(a, spec)?;
    let recovered = decompress_nd(&compressed, spec)?;
    let mut sq = T::zero();
    for (&r, &o) in recovered.data().iter().zip(a.data()) {
        let d = r - o;
        sq = sq + d * d;
    }
    let l2_error = sq.sqrt();
    let n = T::from_usize(a.len());
    let report = RoundTripReport {
        l2_error,
        dv_error: xspace::dist(&recovered.vectorize(), &a.vectorize(), spec.side())?,
        rmse: l2_error / n.sqrt(),
        compression_ratio: spec.compression_ratio(),
    };
    Ok((compressed, recovered, report))
}
