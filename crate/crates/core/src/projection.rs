//! Cross-dimensional projectors. The projection of `x ∈ R^m` onto `R^n`
//! is the unique minimizer of the normalized distance; it is realized by
//! an `n x m` row-stochastic matrix whose entries are interval overlaps.
//!
//! On the common grid of `t = lcm(m, n)` slots, `x` is piecewise constant
//! on intervals of length `t/m` and the target is piecewise constant on
//! intervals of length `t/n`; the Left projector averages `x` over each
//! target interval. The Right projector averages over residue classes
//! instead: entry `(i, j)` is `n/t` exactly when `i ≡ j (mod gcd(m, n))`.

use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::dims::{checked_mul, gcd, lcm};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;
use crate::side::Side;
use crate::vector::MixedVector;

/// Dense realization of the projection from `R^from_dim` onto `R^to_dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct Projector<T> {
    from_dim: usize,
    to_dim: usize,
    side: Side,
    matrix: DenseMatrix<T>,
}

impl<T: Scalar> Projector<T> {
    /// Builds the projector matrix. Entries are exact integer interval
    /// overlaps divided once at the end, so no accumulation error enters.
    pub fn new(from_dim: usize, to_dim: usize, side: Side) -> Result<Self> {
        if from_dim == 0 || to_dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let (m, n) = (from_dim, to_dim);
        let t = lcm(m, n)?;
        checked_mul(n, m, "projector size")?;
        let t_scalar = T::from_usize(t);
        let mut data = vec![T::zero(); n * m];
        match side {
            Side::Left => {
                let target_len = t / n;
                let source_len = t / m;
                for i in 0..n {
                    for j in 0..m {
                        let lo = (i * target_len).max(j * source_len);
                        let hi = ((i + 1) * target_len).min((j + 1) * source_len);
                        if hi > lo {
                            data[i * m + j] = T::from_usize(n * (hi - lo)) / t_scalar;
                        }
                    }
                }
            }
            Side::Right => {
                let g = gcd(m, n);
                let weight = T::from_usize(n) / t_scalar;
                for i in 0..n {
                    for j in 0..m {
                        if i % g == j % g {
                            data[i * m + j] = weight;
                        }
                    }
                }
            }
        }
        Ok(Self {
            from_dim: m,
            to_dim: n,
            side,
            matrix: DenseMatrix::from_raw(n, m, data),
        })
    }

    /// Fetches the projector from a bounded global memo, building it on a
    /// miss. Construction is deterministic, so the cache is observationally
    /// pure; entries are evicted least-recently-used beyond 256.
    pub fn cached(from_dim: usize, to_dim: usize, side: Side) -> Result<Arc<Self>> {
        let key = (TypeId::of::<T>(), from_dim, to_dim, side);
        let mutex = cache_cell();
        let mut cache = mutex.lock().unwrap_or_else(|poisoned| poisoned.into_inner());
        cache.tick += 1;
        let tick = cache.tick;
        if let Some(entry) = cache.map.get_mut(&key) {
            entry.last_used = tick;
            let hit = entry
                .projector
                .clone()
                .downcast::<Self>()
                .expect("cache entries are keyed by scalar type");
            return Ok(hit);
        }
        let built = Arc::new(Self::new(from_dim, to_dim, side)?);
        if cache.map.len() >= CACHE_CAPACITY {
            if let Some(oldest) = cache
                .map
                .iter()
                .min_by_key(|(_, e)| e.last_used)
                .map(|(k, _)| *k)
            {
                cache.map.remove(&oldest);
            }
        }
        cache.map.insert(
            key,
            CacheEntry {
                projector: built.clone(),
                last_used: tick,
            },
        );
        Ok(built)
    }

    pub fn from_dim(&self) -> usize {
        self.from_dim
    }

    pub fn to_dim(&self) -> usize {
        self.to_dim
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn matrix(&self) -> &DenseMatrix<T> {
        &self.matrix
    }

    /// Applies the projector as a plain matrix-vector product (the
    /// dimensions match by construction, so the semi-tensor product
    /// degenerates to the conventional one).
    pub fn apply(&self, x: &MixedVector<T>) -> Result<MixedVector<T>> {
        if x.dim() != self.from_dim {
            return Err(Error::Shape(format!(
                "projector expects dimension {}, got {}",
                self.from_dim,
                x.dim()
            )));
        }
        Ok(MixedVector::from_raw(
            self.matrix.mul_vector(x.as_slice())?,
        ))
    }
}

const CACHE_CAPACITY: usize = 256;

type CacheKey = (TypeId, usize, usize, Side);

struct CacheEntry {
    projector: Arc<dyn Any + Send + Sync>,
    last_used: u64,
}

struct ProjectorCache {
    map: HashMap<CacheKey, CacheEntry>,
    tick: u64,
}

fn cache_cell() -> &'static Mutex<ProjectorCache> {
    static CACHE: OnceLock<Mutex<ProjectorCache>> = OnceLock::new();
    CACHE.get_or_init(|| {
        Mutex::new(ProjectorCache {
            map: HashMap::new(),
            tick: 0,
        })
    })
}

/// Projects `x` onto `R^n`: the nearest point of `R^n` in the normalized
/// distance, computed as the projector matrix applied to `x`.
pub fn project<T: Scalar>(x: &MixedVector<T>, n: usize, side: Side) -> Result<MixedVector<T>> {
    Projector::cached(x.dim(), n, side)?.apply(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stp;
    use approx::assert_abs_diff_eq;

    fn v(data: &[f64]) -> MixedVector<f64> {
        MixedVector::new(data.to_vec()).unwrap()
    }

    // Definitional construction: (n/t) (I_n ⊗ J^T_{t/n}) (I_m ⊗ J_{t/m})
    // for Left, and (n/t) (J^T_{t/n} ⊗ I_n) (J_{t/m} ⊗ I_m) for Right.
    fn definitional(m: usize, n: usize, side: Side) -> DenseMatrix<f64> {
        let t = crate::dims::lcm(m, n).unwrap();
        let id = DenseMatrix::<f64>::identity;
        let ones = DenseMatrix::<f64>::ones;
        let (a, b) = match side {
            Side::Left => (
                stp::kron(&id(n), &ones(1, t / n)).unwrap(),
                stp::kron(&id(m), &ones(t / m, 1)).unwrap(),
            ),
            Side::Right => (
                stp::kron(&ones(1, t / n), &id(n)).unwrap(),
                stp::kron(&ones(t / m, 1), &id(m)).unwrap(),
            ),
        };
        let prod = a.matmul(&b).unwrap();
        let scale = n as f64 / t as f64;
        DenseMatrix::new(
            prod.rows(),
            prod.cols(),
            prod.data().iter().map(|&x| scale * x).collect(),
        )
        .unwrap()
    }

    #[test]
    fn small_projectors_match_hand_values() {
        let p21 = Projector::<f64>::new(2, 1, Side::Left).unwrap();
        assert_eq!(p21.matrix().data(), &[0.5, 0.5]);

        let p12 = Projector::<f64>::new(1, 2, Side::Left).unwrap();
        assert_eq!(p12.matrix().data(), &[1.0, 1.0]);

        let p23 = Projector::<f64>::new(2, 3, Side::Left).unwrap();
        assert_eq!(p23.matrix().data(), &[1.0, 0.0, 0.5, 0.5, 0.0, 1.0]);
    }

    #[test]
    fn identity_when_dimensions_agree() {
        for n in 1..=7 {
            for side in [Side::Left, Side::Right] {
                let p = Projector::<f64>::new(n, n, side).unwrap();
                assert_eq!(p.matrix(), &DenseMatrix::identity(n));
            }
        }
    }

    #[test]
    fn overlap_formula_matches_definitional_construction() {
        for m in 1..=12usize {
            for n in 1..=12usize {
                for side in [Side::Left, Side::Right] {
                    let fast = Projector::<f64>::new(m, n, side).unwrap();
                    let slow = definitional(m, n, side);
                    for (a, b) in fast.matrix().data().iter().zip(slow.data()) {
                        assert!(
                            (a - b).abs() <= 1e-12,
                            "entry mismatch for m={m} n={n} {side}: {a} vs {b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rows_are_stochastic_and_entries_bounded() {
        for m in 1..=12usize {
            for n in 1..=12usize {
                for side in [Side::Left, Side::Right] {
                    let p = Projector::<f64>::new(m, n, side).unwrap();
                    for i in 0..n {
                        let mut sum = 0.0;
                        for j in 0..m {
                            let e = p.matrix().get(i, j);
                            assert!((0.0..=1.0).contains(&e));
                            sum += e;
                        }
                        assert_abs_diff_eq!(sum, 1.0, epsilon = 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn project_examples() {
        assert_eq!(project(&v(&[1.0, 2.0]), 1, Side::Left).unwrap().as_slice(), &[1.5]);
        assert_eq!(
            project(&v(&[1.0, 2.0]), 3, Side::Left).unwrap().as_slice(),
            &[1.0, 1.5, 2.0]
        );
        let y = project(&v(&[1.0, 2.0, 3.0]), 2, Side::Left).unwrap();
        assert_abs_diff_eq!(y.get(0), 4.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(y.get(1), 8.0 / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn golden_section_confirms_scalar_projection() {
        // Minimize d(x, (y)) over y in R^1 for x = (1, 2).
        let x = v(&[1.0, 2.0]);
        let f = |y: f64| {
            crate::xspace::dist(&x, &v(&[y]), Side::Left).unwrap()
        };
        let (mut lo, mut hi) = (0.0f64, 3.0f64);
        let phi = (5.0f64.sqrt() - 1.0) / 2.0;
        for _ in 0..80 {
            let a = hi - phi * (hi - lo);
            let b = lo + phi * (hi - lo);
            if f(a) < f(b) {
                hi = b;
            } else {
                lo = a;
            }
        }
        // The distance is flat to fp noise near the bottom, so the search
        // localizes the argmin only to ~sqrt(eps).
        let argmin = 0.5 * (lo + hi);
        assert_abs_diff_eq!(argmin, 1.5, epsilon = 1e-6);
        let p = project(&x, 1, Side::Left).unwrap();
        assert_abs_diff_eq!(p.get(0), argmin, epsilon = 1e-6);
        assert_eq!(p.get(0), 1.5);
    }

    #[test]
    fn projector_rejects_zero_dims_and_overflow() {
        assert_eq!(
            Projector::<f64>::new(0, 2, Side::Left).err(),
            Some(Error::ZeroDimension)
        );
        let a = (1usize << 40) + 1;
        let b = (1usize << 40) - 1;
        assert!(matches!(
            Projector::<f64>::new(a, b, Side::Left),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn cached_returns_the_same_matrix() {
        let direct = Projector::<f64>::new(6, 4, Side::Right).unwrap();
        let cached = Projector::<f64>::cached(6, 4, Side::Right).unwrap();
        assert_eq!(cached.matrix(), direct.matrix());
        let again = Projector::<f64>::cached(6, 4, Side::Right).unwrap();
        assert!(Arc::ptr_eq(&cached, &again));
        // A different scalar type gets its own entry.
        let f32_proj = Projector::<f32>::cached(6, 4, Side::Right).unwrap();
        assert_eq!(f32_proj.from_dim(), 6);
    }

    #[test]
    fn apply_checks_input_dimension() {
        let p = Projector::<f64>::new(4, 2, Side::Left).unwrap();
        assert!(matches!(p.apply(&v(&[1.0, 2.0])), Err(Error::Shape(_))));
    }
}
