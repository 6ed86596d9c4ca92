//! Scalar abstraction shared by every numeric routine in the crate.
//!
//! All linear algebra and hidden-variable arithmetic is written against
//! [`Real`], so the same code runs in `f64` (the default, used for every
//! tolerance-bearing check) and in `f32` for smoke testing.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar with the tolerances its precision can honour.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Allowed deviation of `|v|²` from one for a unit vector.
    const UNIT_TOL: Self;
    /// Allowed deviation between a matrix and its conjugate transpose.
    const HERMITIAN_TOL: Self;
    /// `|b × b′|` at or below this is treated as collinear.
    const COLLINEAR_TOL: Self;
    /// Largest imaginary residue tolerated in an expectation value.
    const IMAG_TOL: Self;
    /// Most negative eigenvalue accepted for a density matrix.
    const PSD_TOL: Self;
    /// Allowed deviation of a trace or probability sum from one.
    const NORMALIZATION_TOL: Self;
    /// Off-diagonal Frobenius norm at which Jacobi sweeps stop.
    const JACOBI_TOL: Self;
    /// Equality tolerance for values living on finite spectra.
    const TIE_TOL: Self;

    /// Converts an `f64` literal. Never fails for the implemented types.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::lit(2.0)
    }
}

impl Real for f64 {
    const UNIT_TOL: f64 = 1e-12;
    const HERMITIAN_TOL: f64 = 1e-12;
    const COLLINEAR_TOL: f64 = 1e-9;
    const IMAG_TOL: f64 = 1e-10;
    const PSD_TOL: f64 = 1e-10;
    const NORMALIZATION_TOL: f64 = 1e-12;
    const JACOBI_TOL: f64 = 1e-13;
    const TIE_TOL: f64 = 1e-12;
}

impl Real for f32 {
    const UNIT_TOL: f32 = 1e-5;
    const HERMITIAN_TOL: f32 = 1e-5;
    const COLLINEAR_TOL: f32 = 1e-4;
    const IMAG_TOL: f32 = 1e-4;
    const PSD_TOL: f32 = 1e-4;
    const NORMALIZATION_TOL: f32 = 1e-5;
    const JACOBI_TOL: f32 = 1e-6;
    const TIE_TOL: f32 = 1e-5;
}

/// Sign with the convention `sign(0) = +1`.
#[inline]
pub fn sign_nonneg<T: Real>(x: T) -> T {
    if x >= T::zero() {
        T::one()
    } else {
        -T::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_of_zero_is_plus_one() {
        assert_eq!(sign_nonneg(0.0_f64), 1.0);
        assert_eq!(sign_nonneg(-0.0_f64), 1.0);
        assert_eq!(sign_nonneg(-1e-300_f64), -1.0);
        assert_eq!(sign_nonneg(3.0_f32), 1.0);
    }

    #[test]
    fn literal_conversion() {
        assert_eq!(f32::lit(0.25), 0.25_f32);
        assert_eq!(f64::half(), 0.5);
    }
}
