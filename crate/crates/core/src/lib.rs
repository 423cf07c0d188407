//! Cross-dimensional projection signal processing.
//!
//! Vectors of different dimensions are made comparable by expanding them
//! with one-vectors to a common least-common-multiple dimension; under
//! the dimension-normalized inner product this turns the union of all
//! finite-dimensional spaces into a pseudo-vector space with a distance.
//! Compression and decompression are both nearest-point projections under
//! that distance, realized by dense row-stochastic averaging matrices, and
//! extend to images and arbitrary-order hypermatrices one axis at a time.
//!
//! The crate provides:
//! - semi-tensor products (matrix-matrix and matrix-vector, left and
//!   right) and the Kronecker product ([`stp`]);
//! - cross-dimensional addition, equivalence, canonical representatives,
//!   inner product, norm, distance, and angle ([`xspace`]);
//! - the cross-dimensional projector and projection ([`projection`]);
//! - hypermatrix storage, vectorization, contraction, and per-axis
//!   operator application ([`hypermatrix`]);
//! - the projection codec for 1-D, 2-D, and order-d signals with
//!   round-trip error reports ([`codec`]);
//! - compressed-sensing analytics: spark, coherence, recovery bound,
//!   semi-tensor measurement, and Kronecker invariance ([`cs`]).
//!
//! All core types are generic over the floating scalar via [`Scalar`];
//! `f32`/`f64` aliases are exported at the crate root.

pub mod codec;
pub mod cs;
pub mod dims;
pub mod error;
pub mod hypermatrix;
pub mod matrix;
pub mod projection;
pub mod scalar;
pub mod side;
pub mod stp;
pub mod svd;
pub mod vector;
pub mod xspace;

pub use codec::{CodecSpec, RoundTripReport};
pub use cs::{CsSummary, KronInvarianceReport, SensingMatrix, Spark};
pub use error::{Error, Result};
pub use hypermatrix::Hypermatrix;
pub use matrix::DenseMatrix;
pub use projection::Projector;
pub use scalar::Scalar;
pub use side::Side;
pub use vector::MixedVector;
pub use xspace::CanonicalVector;

pub type Mat32 = DenseMatrix<f32>;
pub type Mat64 = DenseMatrix<f64>;
pub type Vec32 = MixedVector<f32>;
pub type Vec64 = MixedVector<f64>;
pub type Hyper32 = Hypermatrix<f32>;
pub type Hyper64 = Hypermatrix<f64>;
pub type Projector32 = Projector<f32>;
pub type Projector64 = Projector<f64>;
