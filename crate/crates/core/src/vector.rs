//! Finite real vectors tagged with their dimension — the elements of the
//! mixed-dimension space. A vector of dimension `n` lives in `R^n`; the
//! one-vector expansions embed it into any multiple dimension.

use crate::dims::checked_mul;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::side::Side;

#[derive(Debug, Clone, PartialEq)]
pub struct MixedVector<T> {
    data: Vec<T>,
}

impl<T: Scalar> MixedVector<T> {
    /// Builds a vector, rejecting empty data and non-finite entries.
    pub fn new(data: Vec<T>) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if let Some(index) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { data })
    }

    pub(crate) fn from_raw(data: Vec<T>) -> Self {
        debug_assert!(!data.is_empty());
        Self { data }
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<T> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize) -> T {
        self.data[i]
    }

    /// Kronecker expansion by a one-vector: `Left` repeats each entry
    /// `factor` times in place, `Right` tiles the whole vector `factor`
    /// times.
    pub fn expand(&self, factor: usize, side: Side) -> Result<Self> {
        if factor == 0 {
            return Err(Error::ZeroDimension);
        }
        let len = checked_mul(self.dim(), factor, "vector expansion length")?;
        let mut out = Vec::with_capacity(len);
        match side {
            Side::Left => {
                for &v in &self.data {
                    for _ in 0..factor {
                        out.push(v);
                    }
                }
            }
            Side::Right => {
                for _ in 0..factor {
                    out.extend_from_slice(&self.data);
                }
            }
        }
        Ok(Self::from_raw(out))
    }

    pub fn inf_norm(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, v| acc.max(v.abs()))
    }
}
