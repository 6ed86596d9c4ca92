use hvsim_core::bell_d2::*;
use hvsim_core::quantum::{expectation, Hermitian2, QuantumState, UnitVector3};
use hvsim_core::sampling::{random_hermitian2, random_unit_vector, stream_rng};
use rand::Rng;
use rayon::prelude::*;

use super::{max_of, min_of, Inputs};
use crate::config::ScenarioConfig;
use crate::report::Check;
use crate::CliError;

const QUADRATURE_CELLS: usize = 1_000_000;
const GRID_CELLS: usize = 100_000;
const OMEGA_PROBES: usize = 101;

pub(super) fn verify_d2(
    config: &ScenarioConfig,
    inputs: &mut Inputs,
) -> Result<Vec<Check>, CliError> {
    let tol = &config.tolerances;
    let mut rng = stream_rng(config.seed, 1);
    let cases: Vec<(Hermitian2<f64>, UnitVector3<f64>)> = (0..config.samples)
        .map(|_| {
            (
                random_hermitian2(&mut rng, 1.0),
                random_unit_vector(&mut rng),
            )
        })
        .collect();
    inputs
        .int("quadrature_cells", QUADRATURE_CELLS as u64)
        .int("omega_probes", OMEGA_PROBES as u64);

    let quantum: Vec<f64> = cases
        .iter()
        .map(|(o, s)| expectation(&QuantumState::pure_qubit(*s), *o))
        .collect::<Result<_, _>>()?;
    let exact = max_of(
        cases
            .iter()
            .zip(&quantum)
            .map(|((o, s), q)| (integrate_observable(o, s) - q).abs()),
    );
    let quad = cases
        .par_iter()
        .zip(quantum.par_iter())
        .map(|((o, s), q)| (integrate_observable_midpoint(o, s, QUADRATURE_CELLS) - q).abs())
        .reduce(|| f64::NEG_INFINITY, f64::max);

    let mut outside = 0usize;
    for (o, s) in &cases {
        let spec = spectral_decompose(o);
        for k in 0..OMEGA_PROBES {
            let w = HiddenVarOmega::new(-0.5 + k as f64 / (OMEGA_PROBES - 1) as f64)?;
            let v = dispersion_free_observable(o, s, w);
            if v != spec.mu1 && v != spec.mu2 {
                outside += 1;
            }
        }
    }

    let z = UnitVector3::z_axis();
    let s06 = UnitVector3::from_angles(0.6f64.acos(), 0.0);
    Ok(vec![
        Check::at_most(
            "closed_form_vs_quantum_max_abs",
            0.0,
            exact,
            tol.get("exact"),
        ),
        Check::at_most(
            "quadrature_vs_quantum_max_abs",
            0.0,
            quad,
            tol.get("quadrature"),
        ),
        Check::close(
            "pointwise_values_outside_spectrum",
            0.0,
            outside as f64,
            0.0,
        ),
        Check::close(
            "projector_integral_overlap_0.6",
            0.8,
            integrate_projector(&s06, &z),
            tol.get("exact"),
        ),
    ])
}

pub(super) fn linearity_failure(
    config: &ScenarioConfig,
    inputs: &mut Inputs,
) -> Result<Vec<Check>, CliError> {
    let tol = &config.tolerances;
    let mut rng = stream_rng(config.seed, 2);
    inputs.int("grid_cells", GRID_CELLS as u64);

    let x = UnitVector3::x_axis();
    let y = UnitVector3::y_axis();
    let orth = linearity_failure_measure(&x, &y, MixCoefficient::new(0.5)?, &x)?;

    let mut measures = Vec::with_capacity(config.samples);
    let mut grid_gap: f64 = 0.0;
    let mut integrated: f64 = 0.0;
    for _ in 0..config.samples {
        let (n, m) = loop {
            let n: UnitVector3<f64> = random_unit_vector(&mut rng);
            let m = random_unit_vector(&mut rng);
            if !n.is_collinear_with(&m) {
                break (n, m);
            }
        };
        let s = random_unit_vector(&mut rng);
        let lam = MixCoefficient::new(0.01 + 0.98 * rng.random::<f64>())?;
        let exact = linearity_failure_measure(&n, &m, lam, &s)?;
        let grid = linearity_failure_measure_grid(&n, &m, lam, &s, GRID_CELLS)?;
        grid_gap = grid_gap.max((exact - grid).abs());
        let (lhs, rhs) = integrated_linearity(&n, &m, lam, &s);
        integrated = integrated.max((lhs - rhs).abs());
        measures.push(exact);
    }

    Ok(vec![
        Check::close("orthogonal_half_mix_measure", 1.0, orth, tol.get("measure")),
        Check::greater("min_failure_measure", 0.0, min_of(measures.into_iter())),
        Check::at_most(
            "closed_form_vs_grid_max_abs",
            0.0,
            grid_gap,
            tol.get("grid"),
        ),
        Check::at_most(
            "integrated_linearity_max_abs",
            0.0,
            integrated,
            tol.get("exact"),
        ),
    ])
}
