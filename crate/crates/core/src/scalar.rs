//! Scalar abstraction: every kernel in this crate is generic over the
//! floating-point type through [`Scalar`].

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar used throughout the geometry and evaluation kernels.
///
/// Implemented for `f32` and `f64`; the crate root exposes `f64` aliases for
/// the common case.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Lift an `f64` literal into the scalar type.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    /// Lossy view as `f64`, for reporting and serialization helpers.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar convertible to f64")
    }

    /// Two, as a scalar.
    fn two() -> Self {
        Self::one() + Self::one()
    }

    /// One half, as a scalar.
    fn half() -> Self {
        Self::one() / Self::two()
    }
}

impl<T> Scalar for T where
    T: Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
}

/// Absolute degeneracy tolerance, in the same length units as the domain.
///
/// Signed distances within this tolerance of a tangency, endpoint or
/// collinearity are reported as degenerate rather than resolved either way.
pub fn tau_deg<S: Scalar>() -> S {
    S::of(1e-9)
}
