//! Seeded random draws used by scans, restarts and property checks.
//!
//! Every consumer derives an independent ChaCha stream from `(seed, stream)`
//! so that results do not depend on thread scheduling.

use num_complex::Complex;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::quantum::{
    Hermitian2, MeasurementSettings, QuantumState, SeparableAtom, UnitVector3, Vector3,
};
use crate::scalar::Real;

pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Area-uniform point on the sphere: `z = 2u − 1`, `φ = 2πv`.
pub fn random_unit_vector<T: Real, R: Rng + ?Sized>(rng: &mut R) -> UnitVector3<T> {
    let u: f64 = rng.random();
    let v: f64 = rng.random();
    let z = 2.0 * u - 1.0;
    let phi = 2.0 * std::f64::consts::PI * v;
    let r = (1.0 - z * z).max(0.0).sqrt();
    UnitVector3::normalize(Vector3::new(
        T::lit(r * phi.cos()),
        T::lit(r * phi.sin()),
        T::lit(z),
    ))
    .expect("sphere sample is nonzero")
}

pub fn random_settings<T: Real, R: Rng + ?Sized>(rng: &mut R) -> MeasurementSettings<T> {
    MeasurementSettings::new(
        random_unit_vector(rng),
        random_unit_vector(rng),
        random_unit_vector(rng),
        random_unit_vector(rng),
    )
}

/// Like [`random_settings`] but redraws `b′` until it is not collinear with `b`.
pub fn random_noncollinear_settings<T: Real, R: Rng + ?Sized>(
    rng: &mut R,
) -> MeasurementSettings<T> {
    loop {
        let s = random_settings(rng);
        if !s.b_collinear() {
            return s;
        }
    }
}

/// Four complex standard-normal amplitudes, normalized.
pub fn random_pure_two_qubit<T: Real, R: Rng + ?Sized>(rng: &mut R) -> QuantumState<T> {
    loop {
        let raw: [(f64, f64); 4] = std::array::from_fn(|_| {
            (
                StandardNormal.sample(&mut *rng),
                StandardNormal.sample(&mut *rng),
            )
        });
        let n = raw.iter().map(|(a, b)| a * a + b * b).sum::<f64>().sqrt();
        if n > 1e-12 {
            let amps = raw.map(|(a, b)| Complex::new(T::lit(a / n), T::lit(b / n)));
            return QuantumState::pure_two_qubit(amps).expect("normalized amplitudes");
        }
    }
}

/// `c₀·1 + r·σ` with `c₀` and the components of `r` uniform in `[-scale, scale]`.
pub fn random_hermitian2<T: Real, R: Rng + ?Sized>(rng: &mut R, scale: f64) -> Hermitian2<T> {
    let mut draw = || T::lit(scale * (2.0 * rng.random::<f64>() - 1.0));
    let c0 = draw();
    let r = Vector3::new(draw(), draw(), draw());
    Hermitian2::identity()
        .scale(c0)
        .add(&crate::quantum::pauli_vec(&r))
}

/// Uniform point on the probability simplex (flat Dirichlet).
pub fn random_simplex<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..n).map(|_| Exp1.sample(&mut *rng)).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / total).collect()
}

/// `n` atoms with independent sphere-uniform directions and flat-Dirichlet weights.
pub fn random_separable_atoms<T: Real, R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
) -> Vec<SeparableAtom<T>> {
    let weights = random_simplex(rng, n);
    // renormalize in T so the sum passes the strict normalization check
    let total = weights.iter().fold(T::zero(), |acc, w| acc + T::lit(*w));
    weights
        .into_iter()
        .map(|w| SeparableAtom {
            n_a: random_unit_vector(rng),
            n_b: random_unit_vector(rng),
            weight: T::lit(w) / total,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<u64> = (0..4).map(|_| stream_rng(7, 0).random()).collect();
        let mut r0 = stream_rng(7, 0);
        let mut r1 = stream_rng(7, 1);
        let x0: u64 = r0.random();
        let x1: u64 = r1.random();
        assert_eq!(a[0], a[1]);
        assert_ne!(x0, x1);
    }

    #[test]
    fn sphere_samples_have_zero_mean() {
        let mut rng = stream_rng(1, 0);
        let n = 20_000;
        let mean = (0..n)
            .map(|_| random_unit_vector::<f64, _>(&mut rng).as_vector())
            .fold(Vector3::zero(), |acc, v| acc + v)
            .scale(1.0 / n as f64);
        assert!(mean.norm() < 0.03, "{mean:?}");
    }

    #[test]
    fn simplex_sums_to_one() {
        let mut rng = stream_rng(3, 0);
        let w = random_simplex(&mut rng, 16);
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(w.iter().all(|&x| x >= 0.0));
    }
}
