use hvsim_core::chsh_paths::discrepancy_report;
use hvsim_core::factored::*;
use hvsim_core::optimizer::maximize_chsh;
use hvsim_core::quantum::*;
use hvsim_core::sampling::{random_noncollinear_settings, random_unit_vector, stream_rng};

use super::{min_of, Inputs};
use crate::config::ScenarioConfig;
use crate::report::Check;
use crate::CliError;

const WITNESS_SAMPLES: usize = 100_000;
const OPT_RESTARTS: usize = 5;

pub(super) fn factored(
    config: &ScenarioConfig,
    inputs: &mut Inputs,
) -> Result<Vec<Check>, CliError> {
    let tol = &config.tolerances;
    let exact = tol.get("exact");
    let mut rng = stream_rng(config.seed, 5);
    inputs
        .int("witness_samples", WITNESS_SAMPLES as u64)
        .int("optimizer_restarts", OPT_RESTARTS as u64);

    let mut route_gap: f64 = 0.0;
    let mut closed_gap: f64 = 0.0;
    let mut largest: f64 = 0.0;
    let mut trace_gap: f64 = 0.0;
    let mut linearity: f64 = 0.0;
    let mut generic_gaps = Vec::with_capacity(config.samples);
    for _ in 0..config.samples {
        let (s1, s2) = (random_unit_vector(&mut rng), random_unit_vector(&mut rng));
        let model = FactoredModel::new(s1, s2);
        let s: MeasurementSettings<f64> = random_noncollinear_settings(&mut rng);
        let r = factored_chsh(&model, &s)?;
        route_gap = route_gap.max((r.path_a - r.path_b).abs());
        closed_gap = closed_gap.max((r.path_a - r.closed_form).abs());
        largest = largest.max(r.path_a.abs()).max(r.path_b.abs());

        let hv = product_expectation(&model, &s.a, &s.b);
        let q = expectation(
            &separable_density(&s1, &s2),
            correlation_operator(&s.a.as_vector(), &s.b.as_vector()),
        )?;
        trace_gap = trace_gap.max((hv - q).abs());
        linearity =
            linearity.max(linearity_after_integration(&model, &s.a, &s.b, &s.b_prime).max_defect());
        generic_gaps.push(discrepancy_report(&s)?.gap);
    }

    let model = FactoredModel::new(random_unit_vector(&mut rng), random_unit_vector(&mut rng));
    let x = UnitVector3::x_axis();
    let y = UnitVector3::y_axis();
    let half = 0.5 * 0.9f64.acos();
    let b09 = UnitVector3::from_angles(std::f64::consts::FRAC_PI_2, half);
    let bp09 = UnitVector3::from_angles(std::f64::consts::FRAC_PI_2, -half);
    let witness_orth = pointwise_nonlinearity_witness(&model, &x, &y, WITNESS_SAMPLES, &mut rng)?;
    let witness_09 =
        pointwise_nonlinearity_witness(&model, &b09, &bp09, WITNESS_SAMPLES, &mut rng)?;

    let z = UnitVector3::z_axis();
    let a06 = UnitVector3::from_angles(0.6f64.acos(), 0.0);
    let weights = marginal_weights(&FactoredModel::new(z, z), &a06)?;

    let settings = MeasurementSettings::coplanar(0.0, std::f64::consts::FRAC_PI_2, 0.3, -0.9);
    let tilde = tilde_vectors(&settings.b, &settings.b_prime)?;
    let aligned = factored_chsh(&FactoredModel::new(settings.a, tilde.b_tilde), &settings)?;

    let best = maximize_chsh(
        &separable_density(&model.s1, &model.s2),
        OPT_RESTARTS,
        config.seed,
    )?;

    Ok(vec![
        Check::at_most("route_a_vs_route_b_max_abs", 0.0, route_gap, exact),
        Check::at_most("route_a_vs_closed_form_max_abs", 0.0, closed_gap, exact),
        Check::at_most("max_abs_chsh", 2.0, largest, tol.get("bound")),
        Check::at_most("product_vs_trace_max_abs", 0.0, trace_gap, exact),
        Check::at_most("integrated_linearity_max_abs", 0.0, linearity, exact),
        Check::greater(
            "generic_route_min_gap",
            0.0,
            min_of(generic_gaps.into_iter()),
        ),
        Check::flag("pointwise_nonlinear_orthogonal", true, witness_orth),
        Check::flag("pointwise_nonlinear_overlap_0.9", true, witness_09),
        Check::close("marginal_c_total", 1.0, weights.c_total, exact),
        Check::close("marginal_c_theta_overlap_0.6", 0.8, weights.c_theta, exact),
        Check::close(
            "aligned_model_value",
            tilde.norm_plus,
            aligned.path_a,
            exact,
        ),
        Check::close(
            "optimized_separable_max",
            2.0,
            best.best_value,
            tol.get("optimizer"),
        ),
    ])
}
