//! Compressed-sensing comparison quantities: spark (smallest number of
//! linearly dependent columns, by exhaustive subset search), coherence
//! (largest absolute normalized column inner product), the sparse-recovery
//! bound `k < (1 + 1/μ)/2`, the semi-tensor measurement operator, and the
//! invariance of spark and coherence under `A ↦ A ⊗ I_s`.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;
use crate::side::Side;
use crate::stp;
use crate::svd;
use crate::vector::MixedVector;

/// Largest column count the exhaustive spark search accepts.
pub const SPARK_SEARCH_LIMIT: usize = 20;

/// A measurement matrix with no zero column (zero columns make the
/// coherence normalization degenerate). Having at least as many rows as
/// columns is unusual for sensing but allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct SensingMatrix<T> {
    matrix: DenseMatrix<T>,
}

impl<T: Scalar> SensingMatrix<T> {
    pub fn new(matrix: DenseMatrix<T>) -> Result<Self> {
        for j in 0..matrix.cols() {
            if (0..matrix.rows()).all(|i| matrix.get(i, j) == T::zero()) {
                return Err(Error::ZeroColumn { index: j });
            }
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &DenseMatrix<T> {
        &self.matrix
    }

    /// True when the matrix has fewer rows than columns.
    pub fn is_wide(&self) -> bool {
        self.matrix.rows() < self.matrix.cols()
    }
}

/// Smallest cardinality of a linearly dependent column subset;
/// `Infinite` when every column subset is independent (only possible
/// for at most as many columns as rows).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spark {
    Finite(usize),
    Infinite,
}

impl std::fmt::Display for Spark {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Spark::Finite(k) => write!(f, "{k}"),
            Spark::Infinite => f.write_str("inf"),
        }
    }
}

/// Summary of the recovery guarantees of a sensing matrix. `spark` is
/// `None` when the column count exceeds the exhaustive search bound;
/// `max_guaranteed_k` is `None` when the bound is unbounded (coherence
/// zero).
#[derive(Debug, Clone, PartialEq)]
pub struct CsSummary<T> {
    pub spark: Option<Spark>,
    pub coherence: T,
    pub sparsity_bound: T,
    pub max_guaranteed_k: Option<u64>,
}

/// Side-by-side spark and coherence of `A` and `A ⊗ I_s`. Spark fields
/// are `None` where the expanded (or base) matrix exceeds the search
/// bound.
#[derive(Debug, Clone, PartialEq)]
pub struct KronInvarianceReport<T> {
    pub s: usize,
    pub spark_base: Option<Spark>,
    pub spark_expanded: Option<Spark>,
    pub coherence_base: T,
    pub coherence_expanded: T,
}

/// Visits every k-subset of `0..n` in lexicographic order until the
/// callback returns `true`.
fn each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    debug_assert!(k >= 1 && k <= n);
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + (i - 1) {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exhaustive spark: the smallest `k` for which some `k` columns are
/// linearly dependent (dependence judged by the singular-value rank of
/// the column submatrix).
pub fn spark<T: Scalar>(a: &SensingMatrix<T>) -> Result<Spark> {
    let mat = a.matrix();
    let n = mat.cols();
    if n > SPARK_SEARCH_LIMIT {
        return Err(Error::SparkCapacity {
            cols: n,
            limit: SPARK_SEARCH_LIMIT,
        });
    }
    let kmax = n.min(mat.rows() + 1);
    for k in 1..=kmax {
        let dependent = each_combination(n, k, |subset| {
            svd::numerical_rank(&mat.select_columns(subset)) < k
        });
        if dependent {
            return Ok(Spark::Finite(k));
        }
    }
    Ok(Spark::Infinite)
}

/// Coherence: the largest `|<a_i, a_j>| / (|a_i| |a_j|)` over distinct
/// column pairs, clamped into `[0, 1]`. Zero for a single column.
pub fn coherence<T: Scalar>(a: &SensingMatrix<T>) -> T {
    let mat = a.matrix();
    let n = mat.cols();
    let norms: Vec<T> = (0..n)
        .map(|j| {
            let mut s = T::zero();
            for i in 0..mat.rows() {
                let v = mat.get(i, j);
                s = s + v * v;
            }
            s.sqrt()
        })
        .collect();
    let mut best = T::zero();
    for i in 0..n {
        for j in i + 1..n {
            let mut dot = T::zero();
            for r in 0..mat.rows() {
                dot = dot + mat.get(r, i) * mat.get(r, j);
            }
            let c = (dot / (norms[i] * norms[j])).abs();
            if c > best {
                best = c;
            }
        }
    }
    best.min(T::one())
}

/// Evaluates the recovery bound `(1 + 1/μ)/2` together with spark and the
/// largest sparsity `k` strictly below the bound.
pub fn recovery_bound<T: Scalar>(a: &SensingMatrix<T>) -> CsSummary<T> {
    let mu = coherence(a);
    let (sparsity_bound, max_guaranteed_k) = if mu == T::zero() {
        (T::infinity(), None)
    } else {
        let bound = (T::one() + T::one() / mu) / T::from_f64(2.0);
        let k = num_traits::ToPrimitive::to_u64(&(bound.ceil() - T::one()));
        (bound, k)
    };
    CsSummary {
        spark: spark(a).ok(),
        coherence: mu,
        sparsity_bound,
        max_guaranteed_k,
    }
}

/// Semi-tensor measurement `y = A_0 ⋉ x`: the effective dense sensing
/// operator is `A_0 ⊗ I_{t/n}` acting on the block-expanded signal.
pub fn stp_measure<T: Scalar>(a0: &DenseMatrix<T>, x: &MixedVector<T>) -> Result<MixedVector<T>> {
    stp::mv(a0, x, Side::Left)
}

/// Computes spark and coherence for both `A` and `A ⊗ I_s`.
pub fn kron_invariance_report<T: Scalar>(
    a: &SensingMatrix<T>,
    s: usize,
) -> Result<KronInvarianceReport<T>> {
    if s == 0 {
        return Err(Error::ZeroDimension);
    }
    let expanded_mat = stp::kron(a.matrix(), &DenseMatrix::identity(s))?;
    let expanded = SensingMatrix::new(expanded_mat)?;
    Ok(KronInvarianceReport {
        s,
        spark_base: spark(a).ok(),
        spark_expanded: spark(&expanded).ok(),
        coherence_base: coherence(a),
        coherence_expanded: coherence(&expanded),
    })
}
