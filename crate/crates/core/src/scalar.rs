//! Real scalar abstraction. Every numeric routine in the crate is generic
//! over [`Real`], with complex entries represented as `Complex<R>`.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point type usable as the real part of the coefficient field.
pub trait Real: Float + FromPrimitive + ToPrimitive + Debug + Display + Default + Sum + Send + Sync + 'static {
    /// Default relative singular-value cutoff for this precision.
    const EPS_RANK: f64;
    /// Default eigenvalue / character merge radius.
    const EPS_CLUSTER: f64;
    /// Default identity-residual bound.
    const EPS_RESIDUAL: f64;

    /// Converts an `f64` literal. Panics only for values unrepresentable in `Self`.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal out of range")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const EPS_RANK: f64 = 1e-9;
    const EPS_CLUSTER: f64 = 1e-6;
    const EPS_RESIDUAL: f64 = 1e-8;
}

impl Real for f32 {
    const EPS_RANK: f64 = 1e-4;
    const EPS_CLUSTER: f64 = 1e-3;
    const EPS_RESIDUAL: f64 = 1e-3;
}

/// Shorthand for building a complex scalar from two real parts.
#[inline]
pub fn c<R: Real>(re: f64, im: f64) -> Complex<R> {
    Complex::new(R::lit(re), R::lit(im))
}

#[inline]
pub(crate) fn czero<R: Real>() -> Complex<R> {
    Complex::new(R::zero(), R::zero())
}

#[inline]
pub(crate) fn cone<R: Real>() -> Complex<R> {
    Complex::new(R::one(), R::zero())
}

#[inline]
pub(crate) fn is_finite<R: Real>(z: &Complex<R>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
