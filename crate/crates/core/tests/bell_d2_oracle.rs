use hvsim_core::bell_d2::*;
use hvsim_core::quantum::*;
use hvsim_core::sampling::*;
use hvsim_core::HvError;
use proptest::prelude::*;

/// Independent projector value straight from the defining formula.
fn p_formula(s: &[f64; 3], m: &[f64; 3], omega: f64) -> f64 {
    let d = s[0] * m[0] + s[1] * m[1] + s[2] * m[2];
    let sg = |x: f64| if x >= 0.0 { 1.0 } else { -1.0 };
    0.5 * (1.0 + sg(omega + 0.5 * d.abs()) * sg(d))
}

fn arr(u: &UnitVector3<f64>) -> [f64; 3] {
    [u.x(), u.y(), u.z()]
}

/// Grid oracle for the failure measure. The spectrum of
/// `E = ½ + ½ r·σ` with `r = λn + (1−λ)m` is written down directly.
fn failure_grid_oracle(n: &[f64; 3], m: &[f64; 3], lam: f64, s: &[f64; 3], cells: usize) -> f64 {
    let r: Vec<f64> = (0..3).map(|i| lam * n[i] + (1.0 - lam) * m[i]).collect();
    let rn = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
    let axis = [r[0] / rn, r[1] / rn, r[2] / rn];
    let (mu1, mu2) = (0.5 * (1.0 + rn), 0.5 * (1.0 - rn));
    let h = 1.0 / cells as f64;
    let mut bad = 0usize;
    for k in 0..cells {
        let w = -0.5 + (k as f64 + 0.5) * h;
        let p1 = p_formula(s, &axis, w);
        let lhs = mu1 * p1 + mu2 * (1.0 - p1);
        let rhs = lam * p_formula(s, n, w) + (1.0 - lam) * p_formula(s, m, w);
        if (lhs - rhs).abs() > 1e-12 {
            bad += 1;
        }
    }
    bad as f64 * h
}

#[test]
fn projector_examples() {
    let z = UnitVector3::<f64>::z_axis();
    let x = UnitVector3::<f64>::x_axis();
    let om = |w: f64| HiddenVarOmega::new(w).unwrap();
    assert_eq!(dispersion_free_projector(&x, &z, om(0.3)), 1);
    assert_eq!(dispersion_free_projector(&x, &z, om(-0.3)), 0);
    let m = UnitVector3::from_angles((-0.4f64).acos(), 0.0);
    assert_eq!(dispersion_free_projector(&z, &m, om(0.0)), 0);
    let s = UnitVector3::from_angles(0.6f64.acos(), 0.0);
    assert!((integrate_projector(&s, &z) - 0.8).abs() < 1e-15);
    assert_eq!(integrate_projector(&z, &z), 1.0);
    assert_eq!(integrate_projector(&x, &z), 0.5);
}

#[test]
fn self_overlap_region_on_dense_grid() {
    let mut rng = stream_rng(3, 0);
    let s: UnitVector3<f64> = random_unit_vector(&mut rng);
    let n = 1_000_000;
    let ones = (0..n)
        .filter(|k| {
            dispersion_free_projector(
                &s,
                &s,
                HiddenVarOmega::new(-0.5 + (*k as f64 + 0.5) / n as f64).unwrap(),
            ) == 1
        })
        .count();
    assert_eq!(ones, n);
    assert_eq!(
        dispersion_free_projector(&s, &s, HiddenVarOmega::new(-0.5).unwrap()),
        1
    );
}

#[test]
fn hidden_variable_integral_matches_quantum_expectation() {
    let mut rng = stream_rng(11, 0);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let o: Hermitian2<f64> = random_hermitian2(&mut rng, 3.0);
        let s: UnitVector3<f64> = random_unit_vector(&mut rng);
        let q = expectation(&QuantumState::pure_qubit(s), o).unwrap();
        worst = worst.max((integrate_observable(&o, &s) - q).abs());
    }
    assert!(worst < 1e-10, "{worst}");
}

#[test]
fn midpoint_converges_at_first_order() {
    let mut rng = stream_rng(12, 0);
    for _ in 0..50 {
        let s: UnitVector3<f64> = random_unit_vector(&mut rng);
        let m: UnitVector3<f64> = random_unit_vector(&mut rng);
        let exact = integrate_projector(&s, &m);
        assert!((exact - 0.5 * (1.0 + s.dot(&m))).abs() < 1e-15);
        for n in [10, 100, 1000, 10_000] {
            assert!((integrate_projector_midpoint(&s, &m, n) - exact).abs() <= 2.0 / n as f64);
        }
    }
}

#[test]
fn pointwise_values_are_dispersion_free() {
    let mut rng = stream_rng(13, 0);
    for _ in 0..200 {
        let o: Hermitian2<f64> = random_hermitian2(&mut rng, 2.0);
        let s: UnitVector3<f64> = random_unit_vector(&mut rng);
        let spec = spectral_decompose(&o);
        assert!(spec.reconstruct().max_abs_diff(&o) < 1e-10);
        for k in 0..101 {
            let w = HiddenVarOmega::new(-0.5 + k as f64 / 100.0).unwrap();
            let v = dispersion_free_observable(&o, &s, w);
            assert!(v == spec.mu1 || v == spec.mu2);
        }
    }
}

#[test]
fn orthogonal_failure_measure_is_full_interval() {
    let n = UnitVector3::<f64>::x_axis();
    let m = UnitVector3::<f64>::y_axis();
    let lam = MixCoefficient::new(0.5).unwrap();
    let exact = linearity_failure_measure(&n, &m, lam, &n).unwrap();
    assert!((exact - 1.0).abs() < 1e-9);
    let oracle = failure_grid_oracle(&arr(&n), &arr(&m), 0.5, &arr(&n), 1_000_000);
    assert!((oracle - 1.0).abs() < 1e-9);
}

#[test]
fn failure_measure_matches_grid_oracle() {
    let mut rng = stream_rng(14, 0);
    let cells = 1_000_000;
    for _ in 0..20 {
        let n: UnitVector3<f64> = random_unit_vector(&mut rng);
        let m: UnitVector3<f64> = random_unit_vector(&mut rng);
        let s: UnitVector3<f64> = random_unit_vector(&mut rng);
        let l = 0.05 + 0.9 * rand::Rng::random::<f64>(&mut rng);
        let lam = MixCoefficient::new(l).unwrap();
        let exact = linearity_failure_measure(&n, &m, lam, &s).unwrap();
        let oracle = failure_grid_oracle(&arr(&n), &arr(&m), l, &arr(&s), cells);
        // each of the three breakpoints can misclassify at most one cell
        assert!(
            (exact - oracle).abs() <= 3.0 / cells as f64,
            "{exact} vs {oracle}"
        );
        assert!(exact > 0.0);
    }
}

#[test]
fn failure_positive_with_integrated_linearity() {
    let mut rng = stream_rng(15, 0);
    for _ in 0..1000 {
        let n: UnitVector3<f64> = random_unit_vector(&mut rng);
        let m: UnitVector3<f64> = random_unit_vector(&mut rng);
        let s: UnitVector3<f64> = random_unit_vector(&mut rng);
        let lam = MixCoefficient::new(0.01 + 0.98 * rand::Rng::random::<f64>(&mut rng)).unwrap();
        assert!(linearity_failure_measure(&n, &m, lam, &s).unwrap() > 0.0);
        let (lhs, rhs) = integrated_linearity(&n, &m, lam, &s);
        assert!((lhs - rhs).abs() < 1e-10);
        let q = expectation(&QuantumState::pure_qubit(s), mixture_operator(&n, &m, lam)).unwrap();
        assert!((lhs - q).abs() < 1e-10);
    }
}

#[test]
fn collinear_inputs_are_rejected() {
    let n = UnitVector3::<f64>::z_axis();
    let lam = MixCoefficient::new(0.3).unwrap();
    for m in [n, -n] {
        assert!(matches!(
            linearity_failure_measure(&n, &m, lam, &n),
            Err(HvError::DegenerateConfiguration(_))
        ));
    }
}

#[test]
fn argument_ranges() {
    assert!(HiddenVarOmega::new(0.5f64).is_ok());
    assert!(HiddenVarOmega::new(0.51f64).is_err());
    assert!(MixCoefficient::new(0.0f64).is_err());
    assert!(MixCoefficient::new(1.0f64).is_err());
}

fn unit_strategy() -> impl Strategy<Value = UnitVector3<f64>> {
    (0.0f64..std::f64::consts::PI, 0.0f64..std::f64::consts::TAU)
        .prop_map(|(t, p)| UnitVector3::from_angles(t, p))
}

proptest! {
    #[test]
    fn projector_value_agrees_with_formula(s in unit_strategy(), m in unit_strategy(), w in -0.5f64..=0.5) {
        let v = dispersion_free_projector(&s, &m, HiddenVarOmega::new(w).unwrap());
        prop_assert_eq!(v as f64, p_formula(&arr(&s), &arr(&m), w));
    }

    #[test]
    fn spectral_projectors_sum_to_one(
        c in -2.0f64..2.0, r in unit_strategy(), k in 0.0f64..3.0, s in unit_strategy(), w in -0.5f64..=0.5
    ) {
        let o = Hermitian2::<f64>::identity().scale(c).add(&pauli_dot(&r).scale(k));
        let spec = spectral_decompose(&o);
        prop_assert!(spec.mu1 >= spec.mu2);
        prop_assert!((spec.p1_dir.as_vector() + spec.p2_dir.as_vector()).norm() < 1e-12);
        let om = HiddenVarOmega::new(w).unwrap();
        let p1 = dispersion_free_projector(&s, &spec.p1_dir, om) as f64;
        let v = spec.dispersion_free_value(&s, w);
        prop_assert!((v - (spec.mu1 * p1 + spec.mu2 * (1.0 - p1))).abs() < 1e-12);
    }
}
