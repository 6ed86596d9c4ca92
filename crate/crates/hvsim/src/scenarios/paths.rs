use hvsim_core::chsh_paths::*;
use hvsim_core::quantum::{
    quantum_sum_check, tilde_vectors, MeasurementSettings, QuantumState, UnitVector3,
};
use hvsim_core::sampling::{
    random_noncollinear_settings, random_pure_two_qubit, random_simplex, random_unit_vector,
    stream_rng,
};

use super::{min_of, Inputs, TSIRELSON};
use crate::config::ScenarioConfig;
use crate::report::Check;
use crate::CliError;

const SUM_CHECK_FLOOR: f64 = 0.01;

pub(super) fn chsh_paths(
    config: &ScenarioConfig,
    inputs: &mut Inputs,
) -> Result<Vec<Check>, CliError> {
    let exact = config.tolerances.get("exact");
    let mut rng = stream_rng(config.seed, 3);
    inputs.real("sum_check_floor", SUM_CHECK_FLOOR);

    let orth = discrepancy_report(&MeasurementSettings::tsirelson())?;
    let route_b_off = (0..16)
        .filter(|k| path_b_value(&Path::B.assignment(*k)).abs() != 2)
        .count();

    let half = 0.5 * 0.99f64.acos();
    let close_pair = MeasurementSettings::coplanar(0.0, std::f64::consts::FRAC_PI_2, half, -half);
    let close_gap = discrepancy_report(&close_pair)?.gap;

    let mut bound_dev: f64 = 0.0;
    let mut route_b_dev: f64 = 0.0;
    let mut gaps = Vec::with_capacity(config.samples);
    let mut nonzero = 0usize;
    for _ in 0..config.samples {
        let s: MeasurementSettings<f64> = random_noncollinear_settings(&mut rng);
        let r = discrepancy_report(&s)?;
        bound_dev = bound_dev.max((r.path_a_max - s.tilde_bound()).abs());
        route_b_dev = route_b_dev.max((r.path_b_max - 2.0).abs());
        gaps.push(r.gap);

        let psi: QuantumState<f64> = random_pure_two_qubit(&mut rng);
        let t = tilde_vectors(&s.b, &s.b_prime)?;
        if quantum_sum_check(&psi, &s.a, &s.a_prime, &t.b_tilde, &t.b_tilde_prime)?.abs()
            > SUM_CHECK_FLOOR
        {
            nonzero += 1;
        }
    }

    Ok(vec![
        Check::close("orthogonal_route_a_max", TSIRELSON, orth.path_a_max, exact),
        Check::close("orthogonal_route_b_max", 2.0, orth.path_b_max, 0.0),
        Check::close("orthogonal_gap", TSIRELSON - 2.0, orth.gap, exact),
        Check::close(
            "route_b_values_not_plus_minus_two",
            0.0,
            route_b_off as f64,
            0.0,
        ),
        Check::close(
            "overlap_0.99_gap",
            3.98f64.sqrt() + 0.02f64.sqrt() - 2.0,
            close_gap,
            exact,
        ),
        Check::at_most("random_route_a_vs_sum_norm_max_abs", 0.0, bound_dev, exact),
        Check::close("random_route_b_max_deviation", 0.0, route_b_dev, 0.0),
        Check::greater("random_min_gap", 0.0, min_of(gaps.into_iter())),
        Check::greater(
            "sum_check_nonzero_fraction",
            0.0,
            nonzero as f64 / config.samples as f64,
        ),
    ])
}

pub(super) fn bell_original(
    config: &ScenarioConfig,
    _inputs: &mut Inputs,
) -> Result<Vec<Check>, CliError> {
    let tol = &config.tolerances;
    let mut rng = stream_rng(config.seed, 4);
    let planar =
        |deg: f64| UnitVector3::<f64>::from_angles(std::f64::consts::FRAC_PI_2, deg.to_radians());

    let q = bell_original_check(&planar(0.0), &planar(45.0), &planar(90.0));
    let same = bell_original_check(&planar(10.0), &planar(30.0), &planar(30.0));
    let r = std::f64::consts::FRAC_1_SQRT_2;

    // The anti-correlated values do not depend on the angles, so each triple
    // re-runs the same enumeration plus a random mixture of its vertices.
    let mut hv_excess = f64::NEG_INFINITY;
    let mut violations = 0usize;
    for _ in 0..config.samples {
        let [a, b, bp]: [UnitVector3<f64>; 3] =
            std::array::from_fn(|_| random_unit_vector(&mut rng));
        if bell_original_check(&a, &b, &bp).violated {
            violations += 1;
        }
        for k in 0..8 {
            let (l, rr) = bell_original_point(anticorrelated_assignment(k));
            hv_excess = hv_excess.max((l.abs() - rr) as f64);
        }
        let w = random_simplex(&mut rng, 8);
        let (l, rr) = bell_original_hv::<f64>(&std::array::from_fn(|i| w[i]));
        hv_excess = hv_excess.max(l - rr);
    }

    Ok(vec![
        Check::close("quantum_lhs_0_45_90", r, q.lhs, tol.get("value")),
        Check::close("quantum_rhs_0_45_90", 1.0 - r, q.rhs, tol.get("value")),
        Check::flag("quantum_violated_0_45_90", true, q.violated),
        Check::close("equal_b_lhs", 0.0, same.lhs, tol.get("exact")),
        Check::flag("equal_b_violated", false, same.violated),
        Check::at_most(
            "hv_vertex_worst_excess",
            0.0,
            bell_original_hv_worst_case() as f64,
            0.0,
        ),
        Check::at_most(
            "hv_random_triples_max_excess",
            0.0,
            hv_excess,
            tol.get("exact"),
        ),
        Check::greater(
            "quantum_violation_fraction",
            0.0,
            violations as f64 / config.samples as f64,
        ),
    ])
}
