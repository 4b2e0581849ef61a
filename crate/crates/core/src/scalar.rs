use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar underlying the complex matrices. Implemented for `f32` and `f64`.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Default + 'static
{
}

impl<T> Scalar for T where
    T: Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Default + 'static
{
}

/// Shorthand for lifting an `f64` literal into the scalar type.
pub fn real<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("f64 literal must be representable in the scalar type")
}

/// Relative tolerance used by law checks unless overridden: `1e-9`.
pub fn law_tol<T: Scalar>() -> T {
    real(1e-9)
}

/// Default relative floor for rank cutoffs: `1e-12 * max(rows, cols)`.
pub fn rank_tol<T: Scalar>(rows: usize, cols: usize) -> T {
    real::<T>(1e-12) * real(rows.max(cols).max(1) as f64)
}
