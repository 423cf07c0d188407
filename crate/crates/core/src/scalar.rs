use std::fmt::{Debug, Display};

use num_traits::{Float, NumCast};

/// Floating-point element type for all numeric operations.
///
/// Implemented by `f32` and `f64`; the blanket impl picks up anything that
/// behaves like an IEEE float and is cheap to copy.
pub trait Scalar: Float + Debug + Display + Send + Sync + 'static {
    /// Converts a dimension count into the scalar domain.
    fn from_usize(n: usize) -> Self {
        NumCast::from(n).expect("usize is representable in a float scalar")
    }

    /// Converts an `f64` constant (tolerances, literals) into the scalar domain.
    fn from_f64(v: f64) -> Self {
        NumCast::from(v).expect("f64 constant is representable in a float scalar")
    }
}

impl<T> Scalar for T where T: Float + Debug + Display + Send + Sync + 'static {}
