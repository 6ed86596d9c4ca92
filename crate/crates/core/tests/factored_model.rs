use hvsim_core::chsh_paths::discrepancy_report;
use hvsim_core::factored::*;
use hvsim_core::quantum::*;
use hvsim_core::sampling::*;
use hvsim_core::HvError;
use proptest::prelude::*;
use rand::Rng;

#[test]
fn product_expectation_examples() {
    let s1 = UnitVector3::<f64>::from_angles(0.7, 0.2);
    let s2 = UnitVector3::<f64>::from_angles(2.0, -1.3);
    let model = FactoredModel::new(s1, s2);
    assert!((product_expectation(&model, &s1, &s2) - 1.0).abs() < 1e-15);
    let perp = UnitVector3::normalize(s1.cross(&s2)).unwrap();
    assert!(product_expectation(&model, &perp, &s2).abs() < 1e-15);
}

#[test]
fn quantum_equivalence_on_random_tuples() {
    let mut rng = stream_rng(31, 0);
    for _ in 0..1000 {
        let [s1, s2, a, b]: [UnitVector3<f64>; 4] =
            std::array::from_fn(|_| random_unit_vector(&mut rng));
        let hv = product_expectation(&FactoredModel::new(s1, s2), &a, &b);
        let q = expectation(
            &separable_density(&s1, &s2),
            correlation_operator(&a.as_vector(), &b.as_vector()),
        )
        .unwrap();
        assert!((hv - q).abs() < 1e-12);
    }
}

/// Monte Carlo double integral of the route-B integrand straight from the
/// dichotomic values.
fn route_b_monte_carlo(
    model: &FactoredModel<f64>,
    s: &MeasurementSettings<f64>,
    rng: &mut impl Rng,
    n: usize,
) -> f64 {
    let mut acc = 0.0;
    for _ in 0..n {
        let l1 = rng.random::<f64>() - 0.5;
        let l2 = rng.random::<f64>() - 0.5;
        let a = model.a_value(&s.a, l1) as f64;
        let ap = model.a_value(&s.a_prime, l1) as f64;
        let b = model.b_value(&s.b, l2) as f64;
        let bp = model.b_value(&s.b_prime, l2) as f64;
        acc += a * (b + bp) + ap * (b - bp);
    }
    acc / n as f64
}

#[test]
fn both_routes_agree_and_obey_bound() {
    let mut rng = stream_rng(32, 0);
    for _ in 0..10_000 {
        let model = FactoredModel::new(random_unit_vector(&mut rng), random_unit_vector(&mut rng));
        let s: MeasurementSettings<f64> = random_noncollinear_settings(&mut rng);
        let r = factored_chsh(&model, &s).unwrap();
        assert!((r.path_a - r.path_b).abs() < 1e-12);
        assert!((r.path_a - r.closed_form).abs() < 1e-12);
        assert!(r.path_a.abs() <= 2.0 + 1e-9);
    }
    let model = FactoredModel::new(random_unit_vector(&mut rng), random_unit_vector(&mut rng));
    let s: MeasurementSettings<f64> = random_noncollinear_settings(&mut rng);
    let mc = route_b_monte_carlo(&model, &s, &mut rng, 400_000);
    assert!((mc - factored_chsh(&model, &s).unwrap().path_b).abs() < 0.02);
}

#[test]
fn aligned_model_reaches_sum_norm() {
    let s = MeasurementSettings::<f64>::coplanar(0.0, std::f64::consts::FRAC_PI_2, 0.3, -0.9);
    let t = tilde_vectors(&s.b, &s.b_prime).unwrap();
    let r = factored_chsh(&FactoredModel::new(s.a, t.b_tilde), &s).unwrap();
    assert!((r.path_a - t.norm_plus).abs() < 1e-12);
    assert!(r.path_a <= 2.0);
}

#[test]
fn integrated_linearity_restored_but_generic_routes_split() {
    let mut rng = stream_rng(33, 0);
    for _ in 0..1000 {
        let model = FactoredModel::new(random_unit_vector(&mut rng), random_unit_vector(&mut rng));
        let s: MeasurementSettings<f64> = random_noncollinear_settings(&mut rng);
        let cmp = linearity_after_integration(&model, &s.a, &s.b, &s.b_prime);
        assert!(cmp.max_defect() < 1e-12);
        assert!(pointwise_nonlinearity_witness(&model, &s.b, &s.b_prime, 50, &mut rng).unwrap());
        let rep = discrepancy_report(&s).unwrap();
        assert!(rep.gap > 0.0);
    }
    let model = FactoredModel::new(UnitVector3::<f64>::z_axis(), UnitVector3::x_axis());
    let b = UnitVector3::from_angles(1.0, 0.5);
    let c = linearity_after_integration(&model, &UnitVector3::z_axis(), &b, &b);
    let expected = 2.0 * product_expectation(&model, &UnitVector3::z_axis(), &b);
    assert!((c.plus.0 - expected).abs() < 1e-12 && (c.plus.1 - expected).abs() < 1e-12);
}

#[test]
fn witness_examples() {
    let mut rng = stream_rng(34, 0);
    let model = FactoredModel::new(random_unit_vector(&mut rng), random_unit_vector(&mut rng));
    let x = UnitVector3::<f64>::x_axis();
    let y = UnitVector3::<f64>::y_axis();
    assert!(pointwise_nonlinearity_witness(&model, &x, &y, 100_000, &mut rng).unwrap());
    let b = UnitVector3::from_angles(std::f64::consts::FRAC_PI_2, 0.5 * 0.9f64.acos());
    let bp = UnitVector3::from_angles(std::f64::consts::FRAC_PI_2, -0.5 * 0.9f64.acos());
    assert!((b.dot(&bp) - 0.9).abs() < 1e-12);
    assert!(pointwise_nonlinearity_witness(&model, &b, &bp, 100_000, &mut rng).unwrap());
    assert!(matches!(
        pointwise_nonlinearity_witness(&model, &x, &x, 10, &mut rng),
        Err(HvError::DegenerateConfiguration(_))
    ));
}

#[test]
fn marginal_weight_examples() {
    let s1 = UnitVector3::<f64>::from_angles(0.4, 1.1);
    let model = FactoredModel::new(s1, UnitVector3::z_axis());
    let w = marginal_weights(&model, &s1).unwrap();
    assert!(
        (w.c_total - 1.0).abs() < 1e-15 && (w.c_theta - 1.0).abs() < 1e-15 && w.c_bar.abs() < 1e-15
    );
    assert!(marginal_weights(&model, &-s1).unwrap().c_theta.abs() < 1e-15);
    let z = UnitVector3::<f64>::z_axis();
    let a = UnitVector3::from_angles(0.6f64.acos(), 2.0);
    let w = marginal_weights(&FactoredModel::new(z, z), &a).unwrap();
    assert!((w.c_theta - 0.8).abs() < 1e-12 && (w.c_bar - 0.2).abs() < 1e-12);
}

#[test]
fn hidden_point_ranges() {
    assert!(FactoredHiddenPoint::new(0.5f64, -0.5).is_ok());
    assert!(FactoredHiddenPoint::new(0.6f64, 0.0).is_err());
    assert_eq!(FactoredHiddenPoint::new(0.1f64, 0.2).unwrap().weight(), 1.0);
}

fn unit_strategy() -> impl Strategy<Value = UnitVector3<f64>> {
    (0.0f64..std::f64::consts::PI, 0.0f64..std::f64::consts::TAU)
        .prop_map(|(t, p)| UnitVector3::from_angles(t, p))
}

proptest! {
    #[test]
    fn projection_a_matches_dichotomic(s1 in unit_strategy(), a in unit_strategy(), l in -0.5f64..=0.5) {
        let m = FactoredModel::new(s1, s1);
        prop_assert_eq!(2 * m.projection_a(&a, l) as i8 - 1, m.a_value(&a, l));
    }

    #[test]
    fn factored_bound(s1 in unit_strategy(), s2 in unit_strategy(),
                      a in unit_strategy(), ap in unit_strategy(), b in unit_strategy(), bp in unit_strategy()) {
        prop_assume!(!b.is_collinear_with(&bp));
        let r = factored_chsh(&FactoredModel::new(s1, s2), &MeasurementSettings::new(a, ap, b, bp)).unwrap();
        prop_assert!(r.path_a.abs() <= 2.0 + 1e-9);
        prop_assert!((r.path_a - r.path_b).abs() < 1e-12);
    }
}
