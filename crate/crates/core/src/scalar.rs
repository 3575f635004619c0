//! Scalar abstraction shared by every structure in the crate.
//!
//! All quaternion, vector and matrix types are generic over a real scalar.
//! `f64` is the configuration the documented tolerances are calibrated for;
//! `f32` works but loses most of the tighter thresholds to its epsilon.

use std::fmt::{Debug, Display};

use num_traits::Float;

/// Real scalar underlying quaternions and complex numbers.
///
/// A blanket impl covers every type with the listed bounds, so `f32` and
/// `f64` are `Scalar` out of the box.
pub trait Scalar: Float + Display + Debug + Send + Sync + 'static {
    /// Converts an `f64` constant, panicking only for values a float type
    /// cannot approximate at all (never the case for finite literals).
    #[inline]
    fn from_f64(x: f64) -> Self {
        num_traits::NumCast::from(x).expect("finite f64 constant must convert")
    }

    /// Lossy view as `f64`, used for diagnostics and error payloads.
    #[inline]
    fn as_f64(self) -> f64 {
        num_traits::NumCast::from(self).unwrap_or(f64::NAN)
    }

    /// A tolerance floor: `max(x, k·epsilon)` so that thresholds written for
    /// `f64` stay meaningful when the scalar is coarser.
    #[inline]
    fn tol_floor(x: f64) -> Self {
        let eps_floor = Self::epsilon() * Self::from_f64(32.0);
        Self::from_f64(x).max(eps_floor)
    }
}

impl<T> Scalar for T where T: Float + Display + Debug + Send + Sync + 'static {}

/// Two over whatever `T` is; division-by-norm formulas use it constantly.
#[inline]
pub(crate) fn two<T: Scalar>() -> T {
    T::one() + T::one()
}

/// One half.
#[inline]
pub(crate) fn half<T: Scalar>() -> T {
    T::one() / two()
}
