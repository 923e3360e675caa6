//! Scalar abstraction for the real-valued parts of the library.
//!
//! Group theory and classical bounds are integer-valued; everything built on
//! the representation matrices (orbit vectors, Clebsch-Gordan projections,
//! spectra, quantum bounds) is generic over [`Real`].

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + Sum + Default + Debug + Display + Send + Sync + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an `f64` literal into the working scalar.
#[inline]
pub fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("finite literal")
}

/// `sqrt(x)` evaluated in the working precision.
#[inline]
pub fn surd<T: Real>(x: f64) -> T {
    lit::<T>(x).sqrt()
}
