//! The CHSH operator and its tilde rewriting.

use super::eigen::spectral_norm;
use super::hermitian::Hermitian4;
use super::pauli::correlation_operator;
use super::vector::{UnitVector3, Vector3};
use crate::error::{HvError, Result};
use crate::scalar::Real;

/// The four measurement directions `a, a′` (a-system) and `b, b′` (b-system).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementSettings<T> {
    pub a: UnitVector3<T>,
    pub a_prime: UnitVector3<T>,
    pub b: UnitVector3<T>,
    pub b_prime: UnitVector3<T>,
}

impl<T: Real> MeasurementSettings<T> {
    pub fn new(
        a: UnitVector3<T>,
        a_prime: UnitVector3<T>,
        b: UnitVector3<T>,
        b_prime: UnitVector3<T>,
    ) -> Self {
        MeasurementSettings {
            a,
            a_prime,
            b,
            b_prime,
        }
    }

    /// Settings in the x–y plane from four azimuths.
    pub fn coplanar(a: T, a_prime: T, b: T, b_prime: T) -> Self {
        let v = |phi: T| UnitVector3::from_angles(T::FRAC_PI_2(), phi);
        MeasurementSettings::new(v(a), v(a_prime), v(b), v(b_prime))
    }

    /// The textbook configuration saturating `‖B‖ = 2√2`:
    /// `a = x`, `a′ = y`, `b = (x + y)/√2`, `b′ = (x − y)/√2`.
    pub fn tsirelson() -> Self {
        MeasurementSettings::coplanar(T::zero(), T::FRAC_PI_2(), T::FRAC_PI_4(), -T::FRAC_PI_4())
    }

    pub fn b_collinear(&self) -> bool {
        self.b.is_collinear_with(&self.b_prime)
    }

    pub fn b_sum(&self) -> Vector3<T> {
        self.b.as_vector() + self.b_prime.as_vector()
    }

    pub fn b_diff(&self) -> Vector3<T> {
        self.b.as_vector() - self.b_prime.as_vector()
    }

    /// `|b + b′| + |b − b′|`, the maximal modulus along the tilde route.
    pub fn tilde_bound(&self) -> T {
        self.b_sum().norm() + self.b_diff().norm()
    }

    pub fn cast<U: Real>(&self) -> MeasurementSettings<U> {
        MeasurementSettings::new(
            self.a.cast(),
            self.a_prime.cast(),
            self.b.cast(),
            self.b_prime.cast(),
        )
    }
}

/// `b̃ = (b + b′)/|b + b′|`, `b̃′ = (b − b′)/|b − b′|` with the two norms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TildeDecomposition<T> {
    pub b_tilde: UnitVector3<T>,
    pub b_tilde_prime: UnitVector3<T>,
    pub norm_plus: T,
    pub norm_minus: T,
}

/// Fails with a degenerate-configuration error when `|b × b′| ≤` [`Real::COLLINEAR_TOL`].
pub fn tilde_vectors<T: Real>(
    b: &UnitVector3<T>,
    b_prime: &UnitVector3<T>,
) -> Result<TildeDecomposition<T>> {
    let cross = b.cross(b_prime).norm();
    if cross <= T::COLLINEAR_TOL {
        return Err(HvError::degenerate(format!(
            "b and b' are collinear (|b x b'| = {cross})"
        )));
    }
    let sum = b.as_vector() + b_prime.as_vector();
    let diff = b.as_vector() - b_prime.as_vector();
    let norm_plus = sum.norm();
    let norm_minus = diff.norm();
    Ok(TildeDecomposition {
        b_tilde: UnitVector3::normalize(sum)?,
        b_tilde_prime: UnitVector3::normalize(diff)?,
        norm_plus,
        norm_minus,
    })
}

/// `B = a·σ ⊗ (b + b′)·σ + a′·σ ⊗ (b − b′)·σ`.
pub fn chsh_operator<T: Real>(settings: &MeasurementSettings<T>) -> Hermitian4<T> {
    let first = correlation_operator(&settings.a.as_vector(), &settings.b_sum());
    let second = correlation_operator(&settings.a_prime.as_vector(), &settings.b_diff());
    first.add(&second)
}

/// `B = |b + b′|·a·σ ⊗ b̃·σ + |b − b′|·a′·σ ⊗ b̃′·σ`.
pub fn chsh_operator_tilde<T: Real>(settings: &MeasurementSettings<T>) -> Result<Hermitian4<T>> {
    let t = tilde_vectors(&settings.b, &settings.b_prime)?;
    let first = correlation_operator(&settings.a.as_vector(), &t.b_tilde.as_vector());
    let second = correlation_operator(&settings.a_prime.as_vector(), &t.b_tilde_prime.as_vector());
    Ok(first.scale(t.norm_plus).add(&second.scale(t.norm_minus)))
}

/// `max |λ|` through the Jacobi eigensolver.
pub fn operator_norm<T: Real>(op: &Hermitian4<T>) -> Result<T> {
    spectral_norm(op)
}
