//! Real three-vectors: measurement directions and Bloch vectors.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{HvError, Result};
use crate::scalar::Real;

/// Plain Euclidean three-vector. Used for unnormalized combinations such as `b ± b′`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vector3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> Vector3<T> {
    pub const fn new(x: T, y: T, z: T) -> Self {
        Vector3 { x, y, z }
    }

    pub fn zero() -> Self {
        Vector3::new(T::zero(), T::zero(), T::zero())
    }

    pub fn dot(&self, other: &Self) -> T {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(&self, other: &Self) -> Self {
        Vector3::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm_squared(&self) -> T {
        self.dot(self)
    }

    pub fn norm(&self) -> T {
        self.norm_squared().sqrt()
    }

    pub fn scale(&self, k: T) -> Self {
        Vector3::new(self.x * k, self.y * k, self.z * k)
    }

    pub fn to_array(&self) -> [T; 3] {
        [self.x, self.y, self.z]
    }

    pub fn cast<U: Real>(&self) -> Vector3<U> {
        Vector3::new(
            U::lit(self.x.to_f64_lossy()),
            U::lit(self.y.to_f64_lossy()),
            U::lit(self.z.to_f64_lossy()),
        )
    }
}

impl<T: Real> Add for Vector3<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Vector3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl<T: Real> Sub for Vector3<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Vector3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl<T: Real> Neg for Vector3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Vector3::new(-self.x, -self.y, -self.z)
    }
}

impl<T: Real> Mul<T> for Vector3<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        self.scale(k)
    }
}

/// Direction on the unit sphere; `x² + y² + z² = 1` within [`Real::UNIT_TOL`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector3<T>(Vector3<T>);

impl<T: Real> UnitVector3<T> {
    /// Checks the unit-norm invariant; the components are stored as given.
    pub fn new(x: T, y: T, z: T) -> Result<Self> {
        Self::try_from_vector(Vector3::new(x, y, z))
    }

    pub fn try_from_vector(v: Vector3<T>) -> Result<Self> {
        let n2 = v.norm_squared();
        if !n2.is_finite() || (n2 - T::one()).abs() > T::UNIT_TOL {
            return Err(HvError::invalid(format!(
                "vector ({}, {}, {}) is not unit length (|v|² = {})",
                v.x, v.y, v.z, n2
            )));
        }
        Ok(UnitVector3(v))
    }

    /// Rescales a nonzero vector onto the sphere.
    pub fn normalize(v: Vector3<T>) -> Result<Self> {
        let n = v.norm();
        if !n.is_finite() || n <= T::epsilon() {
            return Err(HvError::invalid("cannot normalize a zero vector"));
        }
        Ok(UnitVector3(v.scale(n.recip())))
    }

    /// Unit vector from polar angle (from +z) and azimuth (from +x).
    pub fn from_angles(polar: T, azimuth: T) -> Self {
        let (sp, cp) = polar.sin_cos();
        let (sa, ca) = azimuth.sin_cos();
        UnitVector3(Vector3::new(sp * ca, sp * sa, cp))
    }

    /// `(polar, azimuth)` with polar in `[0, π]` and azimuth in `(-π, π]`.
    pub fn to_angles(&self) -> (T, T) {
        let v = self.0;
        let polar = v.z.max(-T::one()).min(T::one()).acos();
        let azimuth = v.y.atan2(v.x);
        (polar, azimuth)
    }

    pub fn x_axis() -> Self {
        UnitVector3(Vector3::new(T::one(), T::zero(), T::zero()))
    }

    pub fn y_axis() -> Self {
        UnitVector3(Vector3::new(T::zero(), T::one(), T::zero()))
    }

    pub fn z_axis() -> Self {
        UnitVector3(Vector3::new(T::zero(), T::zero(), T::one()))
    }

    pub fn x(&self) -> T {
        self.0.x
    }

    pub fn y(&self) -> T {
        self.0.y
    }

    pub fn z(&self) -> T {
        self.0.z
    }

    pub fn as_vector(&self) -> Vector3<T> {
        self.0
    }

    pub fn dot(&self, other: &Self) -> T {
        self.0.dot(&other.0)
    }

    pub fn dot_vec(&self, v: &Vector3<T>) -> T {
        self.0.dot(v)
    }

    pub fn cross(&self, other: &Self) -> Vector3<T> {
        self.0.cross(&other.0)
    }

    /// Whether `|self × other|` is within [`Real::COLLINEAR_TOL`].
    pub fn is_collinear_with(&self, other: &Self) -> bool {
        self.cross(other).norm() <= T::COLLINEAR_TOL
    }

    pub fn cast<U: Real>(&self) -> UnitVector3<U> {
        UnitVector3(self.0.cast())
    }
}

impl<T: Real> Neg for UnitVector3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        UnitVector3(-self.0)
    }
}

impl<T: Real> From<UnitVector3<T>> for Vector3<T> {
    fn from(u: UnitVector3<T>) -> Self {
        u.0
    }
}
