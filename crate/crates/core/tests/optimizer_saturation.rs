#![allow(clippy::approx_constant)]

use hvsim_core::optimizer::*;
use hvsim_core::quantum::*;
use hvsim_core::sampling::*;
use hvsim_core::HvError;

const TSIRELSON: f64 = 2.0 * std::f64::consts::SQRT_2;

/// Dense coplanar grid maximum of `⟨B⟩` with `a` pinned to the x axis.
/// Valid for states invariant under joint rotations about z.
fn coplanar_grid_oracle(state: &QuantumState<f64>, step_deg: usize) -> f64 {
    let n = 360 / step_deg;
    let dir = |k: usize| {
        let phi = (k * step_deg) as f64 * std::f64::consts::PI / 180.0;
        UnitVector3::from_angles(std::f64::consts::FRAC_PI_2, phi).as_vector()
    };
    let corr: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| expectation(state, correlation_operator(&dir(i), &dir(j))).unwrap())
                .collect()
        })
        .collect();
    let mut best = f64::NEG_INFINITY;
    for ap in 0..n {
        for b in 0..n {
            for bp in 0..n {
                let v = corr[0][b] + corr[0][bp] + corr[ap][b] - corr[ap][bp];
                best = best.max(v);
            }
        }
    }
    best
}

#[test]
fn singlet_reaches_tsirelson() {
    let psi = singlet_state::<f64>();
    let r = maximize_chsh(&psi, 5, 7).unwrap();
    assert!((r.best_value - TSIRELSON).abs() < 1e-6, "{}", r.best_value);
    let re = expectation(&psi, chsh_operator(&r.best_settings)).unwrap();
    assert!((re - r.best_value).abs() < 1e-10);
}

#[test]
fn werner_matches_grid_oracle() {
    for p in [0.25, 0.5, 0.75, 1.0] {
        let rho = werner_density::<f64>(p).unwrap();
        let oracle = coplanar_grid_oracle(&rho, 3);
        let r = maximize_chsh(&rho, 5, 11).unwrap();
        assert!(
            (r.best_value - oracle).abs() < 1e-5,
            "p={p}: {} vs {oracle}",
            r.best_value
        );
    }
    let r = maximize_chsh(&werner_density::<f64>(0.5).unwrap(), 5, 11).unwrap();
    assert!((r.best_value - 1.414214).abs() < 1e-5);
}

#[test]
fn werner_scan_is_monotone() {
    let grid: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];
    let expected = [0.0, 0.7071, 1.4142, 2.1213, 2.8284];
    let rows = saturation_scan(StateFamily::Werner, &grid, 3, 5).unwrap();
    assert_eq!(rows.len(), grid.len());
    for (k, (p, r)) in rows.iter().enumerate() {
        assert_eq!(*p, grid[k]);
        assert!((r.best_value - expected[k]).abs() < 1e-4);
        if k > 0 {
            assert!(r.best_value >= rows[k - 1].1.best_value - 1e-9);
        }
    }
    assert!(saturation_scan::<f64>(StateFamily::Werner, &[], 3, 5)
        .unwrap()
        .is_empty());
}

#[test]
fn separable_states_reach_two() {
    let grid: Vec<f64> = (0..10).map(|i| i as f64).collect();
    for (_, r) in saturation_scan(StateFamily::Separable, &grid, 5, 5).unwrap() {
        assert!((r.best_value - 2.0).abs() < 1e-6, "{}", r.best_value);
    }
}

#[test]
fn results_are_reproducible() {
    let mut rng = stream_rng(41, 0);
    let psi: QuantumState<f64> = random_pure_two_qubit(&mut rng);
    let a = maximize_chsh(&psi, 4, 99).unwrap();
    let b = maximize_chsh(&psi, 4, 99).unwrap();
    assert_eq!(a, b);
}

#[test]
fn more_restarts_never_lower_the_value() {
    let mut rng = stream_rng(42, 0);
    for _ in 0..3 {
        let psi: QuantumState<f64> = random_pure_two_qubit(&mut rng);
        let mut prev = f64::NEG_INFINITY;
        for restarts in 1..=5 {
            let r = maximize_chsh(&psi, restarts, 5).unwrap();
            assert!(r.best_value >= prev - 1e-12);
            prev = r.best_value;
        }
    }
}

#[test]
fn values_respect_operator_norm() {
    let mut rng = stream_rng(43, 0);
    for _ in 0..10 {
        let psi: QuantumState<f64> = random_pure_two_qubit(&mut rng);
        let r = maximize_chsh(&psi, 2, 1).unwrap();
        assert!(r.best_value <= TSIRELSON + 1e-9);
        let norm = operator_norm(&chsh_operator(&r.best_settings)).unwrap();
        assert!(r.best_value <= norm + 1e-9);
        // every pure two-qubit state reaches at least the local value
        assert!(r.best_value >= 2.0 - 1e-6);
    }
}

#[test]
fn rejects_bad_inputs() {
    let q = QuantumState::pure_qubit(UnitVector3::<f64>::z_axis());
    assert!(matches!(
        maximize_chsh(&q, 3, 0),
        Err(HvError::InvalidArgument(_))
    ));
    assert!(matches!(
        maximize_chsh(&singlet_state::<f64>(), 0, 0),
        Err(HvError::InvalidArgument(_))
    ));
}
