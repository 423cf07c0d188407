//! Checked dimension arithmetic. Least common multiples of coprime
//! dimensions grow multiplicatively, so every product goes through a
//! checked multiply and overflow is a hard error, never a wraparound.

use crate::error::{Error, Result};

pub(crate) fn checked_mul(a: usize, b: usize, context: &'static str) -> Result<usize> {
    a.checked_mul(b).ok_or(Error::Overflow { context })
}

/// Greatest common divisor (Euclid). `gcd(0, n) = n`.
pub fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Least common multiple with overflow checking.
pub fn lcm(a: usize, b: usize) -> Result<usize> {
    if a == 0 || b == 0 {
        return Err(Error::ZeroDimension);
    }
    checked_mul(a / gcd(a, b), b, "lcm")
}

/// Product of a dimension list with overflow checking.
pub fn checked_product(dims: &[usize], context: &'static str) -> Result<usize> {
    let mut acc: usize = 1;
    for &d in dims {
        acc = checked_mul(acc, d, context)?;
    }
    Ok(acc)
}
