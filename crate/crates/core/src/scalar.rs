//! Scalar abstraction shared by every module.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating-point scalar the toolkit is generic over (`f32` or `f64`).
///
/// The tolerance constants are expressed in `f64` and scale with the
/// precision of the implementing type.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Elementwise tolerance for Hermiticity, unit trace, parameter
    /// constraints, Kraus completeness and probability clamping.
    const EXACT_TOL: f64;
    /// Lower bound on eigenvalues of a positive semidefinite operator; raw
    /// probabilities below `-PSD_TOL` are rejected rather than clamped.
    const PSD_TOL: f64;
    /// Allowed gap between the closed-form and entropic steering functionals.
    const IDENTITY_TOL: f64;

    /// Converts an `f64` literal into this scalar.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn exact_tol() -> Self {
        Self::lit(Self::EXACT_TOL)
    }

    #[inline]
    fn psd_tol() -> Self {
        Self::lit(Self::PSD_TOL)
    }

    #[inline]
    fn identity_tol() -> Self {
        Self::lit(Self::IDENTITY_TOL)
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::lit(2.0)
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const EXACT_TOL: f64 = 1e-12;
    const PSD_TOL: f64 = 1e-10;
    const IDENTITY_TOL: f64 = 1e-9;
}

impl Real for f32 {
    const EXACT_TOL: f64 = 1e-5;
    const PSD_TOL: f64 = 1e-4;
    const IDENTITY_TOL: f64 = 1e-3;
}

/// `x ln x` with the `0 ln 0 = 0` convention.
#[inline]
pub fn xlnx<T: Real>(x: T) -> T {
    if x <= T::zero() {
        T::zero()
    } else {
        x * x.ln()
    }
}
