use hvsim_core::optimizer::{maximize_chsh, saturation_scan, StateFamily};
use hvsim_core::quantum::*;
use hvsim_core::sampling::{random_separable_atoms, random_settings, stream_rng};
use rayon::prelude::*;

use super::{max_of, min_of, Inputs, TSIRELSON};
use crate::config::{AtomSpec, ScenarioConfig};
use crate::report::Check;
use crate::CliError;

const SEPARABLE_RESTARTS: usize = 5;
const MIXED_SETTINGS: usize = 1000;
const MIXED_RESTARTS: usize = 5;
pub const WERNER_GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

pub(super) fn singlet_max(
    config: &ScenarioConfig,
    inputs: &mut Inputs,
) -> Result<Vec<Check>, CliError> {
    let tol = &config.tolerances;
    inputs.int("restarts", config.samples as u64);
    let psi = singlet_state::<f64>();
    let r = maximize_chsh(&psi, config.samples, config.seed)?;
    let reeval = expectation(&psi, chsh_operator(&r.best_settings))?;
    Ok(vec![
        Check::close("singlet_max", TSIRELSON, r.best_value, tol.get("optimizer")),
        Check::at_most(
            "reevaluation_abs_diff",
            0.0,
            (reeval - r.best_value).abs(),
            tol.get("reeval"),
        ),
        Check::flag("converged", true, r.converged),
    ])
}

pub(super) fn separable_max(
    config: &ScenarioConfig,
    inputs: &mut Inputs,
) -> Result<Vec<Check>, CliError> {
    let tol = config.tolerances.get("optimizer");
    inputs.int("restarts", SEPARABLE_RESTARTS as u64);
    let grid: Vec<f64> = (0..config.samples).map(|i| i as f64).collect();
    let rows = saturation_scan(
        StateFamily::Separable,
        &grid,
        config.seed,
        SEPARABLE_RESTARTS,
    )?;
    Ok(rows
        .iter()
        .enumerate()
        .map(|(i, (_, r))| Check::close(format!("state_{i}_max"), 2.0, r.best_value, tol))
        .collect())
}

fn atoms_from_config(specs: &[AtomSpec]) -> Result<Vec<SeparableAtom<f64>>, CliError> {
    let unit = |v: [f64; 3]| {
        UnitVector3::new(v[0], v[1], v[2])
            .map_err(|e| CliError::Usage(format!("atom direction {v:?}: {e}")))
    };
    specs
        .iter()
        .map(|a| {
            Ok(SeparableAtom {
                n_a: unit(a.n_a)?,
                n_b: unit(a.n_b)?,
                weight: a.weight,
            })
        })
        .collect()
}

pub(super) fn mixed_ekert(
    config: &ScenarioConfig,
    inputs: &mut Inputs,
) -> Result<Vec<Check>, CliError> {
    let tol = &config.tolerances;
    let mut rng = stream_rng(config.seed, 8);
    let atoms = match &config.atoms {
        Some(specs) => {
            inputs.text("atoms_source", "config");
            atoms_from_config(specs)?
        }
        None => {
            inputs.text("atoms_source", "random");
            random_separable_atoms(&mut rng, config.samples)
        }
    };
    inputs
        .int("atom_count", atoms.len() as u64)
        .int("settings_samples", MIXED_SETTINGS as u64)
        .int("optimizer_restarts", MIXED_RESTARTS as u64);
    let rho =
        mixed_separable_density(&atoms).map_err(|e| CliError::Usage(format!("atoms: {e}")))?;
    let matrix = rho.density_matrix().expect("mixture is a density matrix");
    let spectrum = eigen_decompose(&matrix)?;

    let settings: Vec<MeasurementSettings<f64>> = (0..MIXED_SETTINGS)
        .map(|_| random_settings(&mut rng))
        .collect();
    let largest = max_of(
        settings
            .iter()
            .map(|s| expectation(&rho, chsh_operator(s)).map(f64::abs))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter(),
    );
    let best = maximize_chsh(&rho, MIXED_RESTARTS, config.seed)?;

    Ok(vec![
        Check::close("trace", 1.0, matrix.trace(), tol.get("state")),
        Check::at_least("min_eigenvalue", 0.0, spectrum.values[3], tol.get("state")),
        Check::at_most(
            "random_settings_max_abs_chsh",
            2.0,
            largest,
            tol.get("bound"),
        ),
        Check::at_most("optimized_chsh", 2.0, best.best_value, tol.get("bound")),
    ])
}

pub(super) fn werner(config: &ScenarioConfig, inputs: &mut Inputs) -> Result<Vec<Check>, CliError> {
    let tol = &config.tolerances;
    inputs
        .int("restarts", config.samples as u64)
        .reals("grid", &WERNER_GRID);
    let rows = saturation_scan(
        StateFamily::Werner,
        &WERNER_GRID,
        config.seed,
        config.samples,
    )?;
    let mut checks: Vec<Check> = rows
        .iter()
        .map(|(p, r)| {
            Check::close(
                format!("p_{p}_max"),
                p * TSIRELSON,
                r.best_value,
                tol.get("optimizer"),
            )
        })
        .collect();
    let half = rows
        .iter()
        .find(|(p, _)| *p == 0.5)
        .map(|(_, r)| r.best_value)
        .expect("grid holds p = 0.5");
    let steps = min_of(
        rows.windows(2)
            .map(|w| w[1].1.best_value - w[0].1.best_value),
    );
    checks.push(Check::at_most(
        "p_0.5_within_local_bound",
        2.0,
        half,
        tol.get("bound"),
    ));
    checks.push(Check::at_least(
        "min_step_between_grid_points",
        0.0,
        steps,
        tol.get("bound"),
    ));
    Ok(checks)
}

pub(super) fn norm_scan(
    config: &ScenarioConfig,
    _inputs: &mut Inputs,
) -> Result<Vec<Check>, CliError> {
    let bound = config.tolerances.get("bound");
    let mut rng = stream_rng(config.seed, 10);
    let settings: Vec<MeasurementSettings<f64>> = (0..config.samples)
        .map(|_| random_settings(&mut rng))
        .collect();
    let psi = singlet_state::<f64>();
    let scanned: Vec<(f64, f64)> = settings
        .par_iter()
        .map(|s| {
            let b = chsh_operator(s);
            Ok((operator_norm(&b)?, expectation(&psi, b)?.abs()))
        })
        .collect::<Result<_, hvsim_core::HvError>>()?;
    let tsirelson = operator_norm(&chsh_operator(&MeasurementSettings::tsirelson()))?;
    Ok(vec![
        Check::at_most(
            "max_operator_norm",
            TSIRELSON,
            max_of(scanned.iter().map(|x| x.0)),
            bound,
        ),
        Check::at_most(
            "max_singlet_abs_chsh",
            TSIRELSON,
            max_of(scanned.iter().map(|x| x.1)),
            bound,
        ),
        Check::close("tsirelson_settings_norm", TSIRELSON, tsirelson, bound),
    ])
}
