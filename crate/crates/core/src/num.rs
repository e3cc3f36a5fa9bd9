//! Scalar abstraction for the numeric kernels.
//!
//! Every kernel in this crate is generic over the working floating type.
//! The CLI instantiates everything at `f64` (finite-difference validation
//! of the closed-form gradients needs the headroom); `f32` remains
//! available for memory-bound batch work.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating scalar the solver is generic over: `f32` or `f64`.
pub trait Scalar: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Casts an `f64` constant into the working scalar type.
#[inline]
pub(crate) fn fl<T: Scalar>(v: f64) -> T {
    T::from_f64(v).expect("finite f64 constant converts to scalar")
}

/// Casts a scalar to `f64` for reporting.
#[inline]
pub(crate) fn to_f64<T: Scalar>(v: T) -> f64 {
    v.to_f64().expect("scalar converts to f64")
}
