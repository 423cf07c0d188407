//! The mixed-dimension pseudo-vector space: vectors of different
//! dimensions are combined by expanding both to the least common multiple
//! with one-vectors. Two vectors are equivalent when they expand to the
//! same point; each equivalence class has a unique minimum-dimension
//! representative. The inner product, norm, and distance are normalized
//! by dimension, which makes them constant on equivalence classes.

use crate::dims::lcm;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::side::Side;
use crate::vector::MixedVector;

/// Minimum-dimension representative of an equivalence class together with
/// the block length stripped during reduction (1 if the input was already
/// irreducible).
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalVector<T> {
    pub rep: MixedVector<T>,
    pub multiplicity: usize,
}

/// Cross-dimensional addition: both operands are expanded to `R^t`,
/// `t = lcm(dim_x, dim_y)`, then added componentwise.
pub fn add<T: Scalar>(
    x: &MixedVector<T>,
    y: &MixedVector<T>,
    side: Side,
) -> Result<MixedVector<T>> {
    combine(x, y, side, |a, b| a + b)
}

/// Cross-dimensional subtraction; see [`add`].
pub fn sub<T: Scalar>(
    x: &MixedVector<T>,
    y: &MixedVector<T>,
    side: Side,
) -> Result<MixedVector<T>> {
    combine(x, y, side, |a, b| a - b)
}

fn combine<T: Scalar>(
    x: &MixedVector<T>,
    y: &MixedVector<T>,
    side: Side,
    op: impl Fn(T, T) -> T,
) -> Result<MixedVector<T>> {
    let t = lcm(x.dim(), y.dim())?;
    let ex = x.expand(t / x.dim(), side)?;
    let ey = y.expand(t / y.dim(), side)?;
    let data = ex
        .as_slice()
        .iter()
        .zip(ey.as_slice())
        .map(|(&a, &b)| op(a, b))
        .collect();
    Ok(MixedVector::from_raw(data))
}

/// Scalar product; the dimension is unchanged.
pub fn scale<T: Scalar>(r: T, x: &MixedVector<T>) -> MixedVector<T> {
    assert!(r.is_finite(), "scalar factor must be finite");
    MixedVector::from_raw(x.as_slice().iter().map(|&v| r * v).collect())
}

/// Reduction tolerance: exact for integer-valued data, otherwise
/// `1e-9 * max(1, |x|_inf)` so the reduction stays stable under roundoff
/// from upstream operations.
fn block_tolerance<T: Scalar>(data: &[T]) -> T {
    if data.iter().all(|v| v.fract() == T::zero()) {
        T::zero()
    } else {
        let inf = data.iter().fold(T::zero(), |m, v| m.max(v.abs()));
        T::from_f64(1e-9) * inf.max(T::one())
    }
}

fn divisors_descending(n: usize) -> Vec<usize> {
    let mut d: Vec<usize> = (1..=n).filter(|k| n % k == 0).collect();
    d.reverse();
    d
}

fn reduces_by<T: Scalar>(data: &[T], block: usize, side: Side, tol: T) -> bool {
    let z_len = data.len() / block;
    match side {
        Side::Left => (0..z_len).all(|j| {
            let base = data[j * block];
            data[j * block..(j + 1) * block]
                .iter()
                .all(|&v| (v - base).abs() <= tol)
        }),
        Side::Right => (z_len..data.len()).all(|i| (data[i] - data[i % z_len]).abs() <= tol),
    }
}

/// Minimum-dimension representative: the largest block length `b` such
/// that `x = z ⊗ J_b` (Left: constant consecutive blocks) or `x = J_b ⊗ z`
/// (Right: repeated tiles). Divisors of the dimension are tested in
/// decreasing order; the first hit yields the irreducible representative.
pub fn canonical<T: Scalar>(x: &MixedVector<T>, side: Side) -> CanonicalVector<T> {
    let n = x.dim();
    let data = x.as_slice();
    let tol = block_tolerance(data);
    let mut multiplicity = 1;
    for b in divisors_descending(n) {
        if b == 1 {
            break;
        }
        if reduces_by(data, b, side, tol) {
            multiplicity = b;
            break;
        }
    }
    let z_len = n / multiplicity;
    let rep = match side {
        Side::Left => (0..z_len).map(|j| data[j * multiplicity]).collect(),
        Side::Right => data[..z_len].to_vec(),
    };
    CanonicalVector {
        rep: MixedVector::from_raw(rep),
        multiplicity,
    }
}

/// True when the two vectors reduce to the same canonical representative.
pub fn equivalent<T: Scalar>(x: &MixedVector<T>, y: &MixedVector<T>, side: Side) -> bool {
    let cx = canonical(x, side);
    let cy = canonical(y, side);
    if cx.rep.dim() != cy.rep.dim() {
        return false;
    }
    let tol = block_tolerance(x.as_slice()).max(block_tolerance(y.as_slice()));
    cx.rep
        .as_slice()
        .iter()
        .zip(cy.rep.as_slice())
        .all(|(&a, &b)| (a - b).abs() <= tol)
}

/// Dimension-normalized inner product: `(1/t) <expand(x), expand(y)>`
/// on the common dimension `t = lcm(dim_x, dim_y)`.
pub fn inner<T: Scalar>(x: &MixedVector<T>, y: &MixedVector<T>, side: Side) -> Result<T> {
    let t = lcm(x.dim(), y.dim())?;
    let ex = x.expand(t / x.dim(), side)?;
    let ey = y.expand(t / y.dim(), side)?;
    let mut dot = T::zero();
    for (&a, &b) in ex.as_slice().iter().zip(ey.as_slice()) {
        dot = dot + a * b;
    }
    Ok(dot / T::from_usize(t))
}

/// Dimension-normalized norm, `sqrt(<x, x> / n)`. Expansion by one-vectors
/// preserves the mean of squares, so the norm is side-independent.
pub fn norm<T: Scalar>(x: &MixedVector<T>) -> T {
    let mut dot = T::zero();
    for &v in x.as_slice() {
        dot = dot + v * v;
    }
    (dot / T::from_usize(x.dim())).sqrt()
}

/// Distance induced by the normalized norm; zero exactly on equivalent
/// pairs. Restricted to a common dimension `n` it equals the Euclidean
/// distance divided by `sqrt(n)`.
pub fn dist<T: Scalar>(x: &MixedVector<T>, y: &MixedVector<T>, side: Side) -> Result<T> {
    Ok(norm(&sub(x, y, side)?))
}

/// Angle in radians; the cosine is clamped into `[-1, 1]` before `acos`
/// to absorb roundoff.
pub fn angle<T: Scalar>(x: &MixedVector<T>, y: &MixedVector<T>, side: Side) -> Result<T> {
    let nx = norm(x);
    let ny = norm(y);
    if nx == T::zero() || ny == T::zero() {
        return Err(Error::ZeroNorm);
    }
    let cos = inner(x, y, side)? / (nx * ny);
    Ok(cos.max(-T::one()).min(T::one()).acos())
}
