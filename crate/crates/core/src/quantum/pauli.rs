//! Pauli algebra on one and two qubits.
//!
//! Kronecker index convention: for `tensor(A, B)` the basis index is
//! `2·i + j` with `i` addressing the first factor (the a-system) and `j` the
//! second (the b-system), so `|01⟩` is index 1 and `|10⟩` is index 2.

use num_complex::Complex;

use super::hermitian::{Hermitian, Hermitian2, Hermitian4};
use super::vector::{UnitVector3, Vector3};
use crate::scalar::Real;

fn c<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

pub fn sigma_x<T: Real>() -> Hermitian2<T> {
    pauli_vec(&Vector3::new(T::one(), T::zero(), T::zero()))
}

pub fn sigma_y<T: Real>() -> Hermitian2<T> {
    pauli_vec(&Vector3::new(T::zero(), T::one(), T::zero()))
}

pub fn sigma_z<T: Real>() -> Hermitian2<T> {
    pauli_vec(&Vector3::new(T::zero(), T::zero(), T::one()))
}

/// `v·σ` for an arbitrary real vector.
pub fn pauli_vec<T: Real>(v: &Vector3<T>) -> Hermitian2<T> {
    let z = T::zero();
    Hermitian::symmetrized([[c(v.z, z), c(v.x, -v.y)], [c(v.x, v.y), c(-v.z, z)]])
}

/// `m·σ`; traceless with eigenvalues `±1`.
pub fn pauli_dot<T: Real>(m: &UnitVector3<T>) -> Hermitian2<T> {
    pauli_vec(&m.as_vector())
}

/// `½(1 + m·σ)`.
pub fn projector<T: Real>(m: &UnitVector3<T>) -> Hermitian2<T> {
    bloch_density(&m.as_vector())
}

/// `½(1 + r·σ)` for any real `r`; a state when `|r| ≤ 1`.
pub fn bloch_density<T: Real>(r: &Vector3<T>) -> Hermitian2<T> {
    Hermitian2::identity().add(&pauli_vec(r)).scale(T::half())
}

/// Splits `O = c₀·1 + r·σ`, returning `(c₀, r)`.
pub fn bloch_components<T: Real>(o: &Hermitian2<T>) -> (T, Vector3<T>) {
    let c0 = o.trace() * T::half();
    let off = o.entry(1, 0);
    let rz = (o.entry(0, 0).re - o.entry(1, 1).re) * T::half();
    (c0, Vector3::new(off.re, off.im, rz))
}

/// Kronecker product, first factor on the a-system.
pub fn tensor<T: Real>(a: &Hermitian2<T>, b: &Hermitian2<T>) -> Hermitian4<T> {
    let zero = c(T::zero(), T::zero());
    let mut m = [[zero; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    m[2 * i + k][2 * j + l] = a.entry(i, j) * b.entry(k, l);
                }
            }
        }
    }
    Hermitian::symmetrized(m)
}

/// `(a·σ) ⊗ (b·σ)` for arbitrary real vectors.
pub fn correlation_operator<T: Real>(a: &Vector3<T>, b: &Vector3<T>) -> Hermitian4<T> {
    tensor(&pauli_vec(a), &pauli_vec(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::eigen::eigen_decompose;

    #[test]
    fn sigma_z_and_x_by_definition() {
        let z = pauli_dot(&UnitVector3::<f64>::z_axis());
        assert_eq!(z, Hermitian2::from_real_diagonal([1.0, -1.0]));
        let x = pauli_dot(&UnitVector3::<f64>::x_axis());
        assert_eq!(x.entry(0, 1), c(1.0, 0.0));
        assert_eq!(x.entry(1, 0), c(1.0, 0.0));
        assert_eq!(x.entry(0, 0), c(0.0, 0.0));
    }

    #[test]
    fn sigma_y_entries() {
        let y = sigma_y::<f64>();
        assert_eq!(y.entry(0, 1), c(0.0, -1.0));
        assert_eq!(y.entry(1, 0), c(0.0, 1.0));
    }

    #[test]
    fn projector_on_z() {
        let p = projector(&UnitVector3::<f64>::z_axis());
        assert_eq!(p, Hermitian2::from_real_diagonal([1.0, 0.0]));
    }

    #[test]
    fn tensor_identities() {
        let id2 = Hermitian2::<f64>::identity();
        assert_eq!(tensor(&id2, &id2), Hermitian4::identity());
        let zz = tensor(&sigma_z::<f64>(), &sigma_z());
        assert_eq!(zz, Hermitian4::from_real_diagonal([1.0, -1.0, -1.0, 1.0]));
    }

    #[test]
    fn bloch_components_round_trip() {
        let r = Vector3::new(0.3_f64, -0.7, 0.2);
        let o = Hermitian2::identity().scale(1.5).add(&pauli_vec(&r));
        let (c0, back) = bloch_components(&o);
        assert!((c0 - 1.5).abs() < 1e-15);
        assert!((back - r).norm() < 1e-15);
    }

    #[test]
    fn pauli_dot_f32_eigenvalues() {
        let m = UnitVector3::<f32>::from_angles(0.7, 2.0);
        let e = eigen_decompose(&pauli_dot(&m)).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-5);
        assert!((e.values[1] + 1.0).abs() < 1e-5);
    }
}
