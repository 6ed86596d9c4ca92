//! Derivative-free maximization of `⟨B⟩ = Tr(ρB)` over measurement settings.
//!
//! Each restart sweeps a coplanar grid (all four directions in one plane, 15°
//! steps) and then refines the best grid point with Nelder–Mead over the full
//! eight-angle space. Restart 0 uses the x–y plane; restart `r > 0` draws a
//! random plane from the stream `(seed, r)`. Restarts run in parallel and the
//! winner is the largest value, lowest restart index on ties.

pub mod simplex;

use rayon::prelude::*;

use crate::error::{HvError, Result};
use crate::quantum::{
    chsh_operator, expectation, separable_density, werner_density, MeasurementSettings,
    QuantumState, UnitVector3, Vector3,
};
use crate::sampling::{random_unit_vector, stream_rng};
use crate::scalar::Real;

pub use simplex::{minimize, SimplexOptions, SimplexResult};

const GRID_STEPS: usize = 24;
/// Stream offset for per-point state draws in [`saturation_scan`].
const STATE_STREAM_BASE: u64 = 1 << 32;

/// `(polar, azimuth)` for `a, a′, b, b′`, in that order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleParams<T>(pub [T; 8]);

impl<T: Real> AngleParams<T> {
    pub fn from_settings(s: &MeasurementSettings<T>) -> Self {
        let mut out = [T::zero(); 8];
        for (k, u) in [s.a, s.a_prime, s.b, s.b_prime].iter().enumerate() {
            let (p, az) = u.to_angles();
            out[2 * k] = p;
            out[2 * k + 1] = az;
        }
        AngleParams(out)
    }

    pub fn to_settings(&self) -> MeasurementSettings<T> {
        let v = |k: usize| UnitVector3::from_angles(self.0[2 * k], self.0[2 * k + 1]);
        MeasurementSettings::new(v(0), v(1), v(2), v(3))
    }

    /// Every angle reduced into `[0, 2π)`; the directions are unchanged.
    pub fn wrapped(&self) -> Self {
        let tau = T::TAU();
        AngleParams(self.0.map(|x| {
            let r = x % tau;
            if r < T::zero() {
                r + tau
            } else {
                r
            }
        }))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptResult<T> {
    /// `Tr(ρB)` re-evaluated with the full operator at `best_settings`.
    pub best_value: T,
    pub best_settings: MeasurementSettings<T>,
    pub iterations: usize,
    pub converged: bool,
    /// Restart that produced the winner.
    pub restart: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct OptimizerConfig<T> {
    pub restarts: usize,
    pub seed: u64,
    pub simplex: SimplexOptions<T>,
}

impl<T: Real> OptimizerConfig<T> {
    pub fn new(restarts: usize, seed: u64) -> Self {
        OptimizerConfig {
            restarts,
            seed,
            simplex: SimplexOptions::default(),
        }
    }
}

/// `aᵀ T c` for the state's correlation tensor.
fn bilinear<T: Real>(t: &[[T; 3]; 3], a: &Vector3<T>, c: &Vector3<T>) -> T {
    let a = a.to_array();
    let c = c.to_array();
    let mut acc = T::zero();
    for i in 0..3 {
        for j in 0..3 {
            acc = acc + a[i] * t[i][j] * c[j];
        }
    }
    acc
}

/// `⟨B⟩` from the correlation tensor; `B` has no local terms.
fn chsh_from_tensor<T: Real>(t: &[[T; 3]; 3], s: &MeasurementSettings<T>) -> T {
    bilinear(t, &s.a.as_vector(), &s.b_sum()) + bilinear(t, &s.a_prime.as_vector(), &s.b_diff())
}

fn restart_plane<T: Real>(seed: u64, restart: usize) -> (Vector3<T>, Vector3<T>) {
    if restart == 0 {
        return (
            UnitVector3::x_axis().as_vector(),
            UnitVector3::y_axis().as_vector(),
        );
    }
    let mut rng = stream_rng(seed, restart as u64);
    let e1: UnitVector3<T> = random_unit_vector(&mut rng);
    loop {
        let w: UnitVector3<T> = random_unit_vector(&mut rng);
        let perp = w.as_vector() - e1.as_vector().scale(e1.dot(&w));
        if let Ok(e2) = UnitVector3::normalize(perp) {
            if perp.norm() > T::lit(1e-3) {
                return (e1.as_vector(), e2.as_vector());
            }
        }
    }
}

fn grid_search<T: Real>(t: &[[T; 3]; 3], e1: Vector3<T>, e2: Vector3<T>) -> MeasurementSettings<T> {
    let step = T::TAU() / T::lit(GRID_STEPS as f64);
    let dirs: Vec<Vector3<T>> = (0..GRID_STEPS)
        .map(|k| {
            let (s, c) = (step * T::lit(k as f64)).sin_cos();
            e1.scale(c) + e2.scale(s)
        })
        .collect();
    let table: Vec<Vec<T>> = dirs
        .iter()
        .map(|a| dirs.iter().map(|b| bilinear(t, a, b)).collect())
        .collect();

    let mut best = (T::neg_infinity(), [0usize; 4]);
    for ia in 0..GRID_STEPS {
        for iap in 0..GRID_STEPS {
            for ib in 0..GRID_STEPS {
                for ibp in 0..GRID_STEPS {
                    let v = table[ia][ib] + table[ia][ibp] + table[iap][ib] - table[iap][ibp];
                    if v > best.0 {
                        best = (v, [ia, iap, ib, ibp]);
                    }
                }
            }
        }
    }
    let u = |k: usize| UnitVector3::normalize(dirs[best.1[k]]).expect("grid direction is unit");
    MeasurementSettings::new(u(0), u(1), u(2), u(3))
}

fn run_restart<T: Real>(
    t: &[[T; 3]; 3],
    config: &OptimizerConfig<T>,
    restart: usize,
) -> (T, MeasurementSettings<T>, usize, bool) {
    let (e1, e2) = restart_plane(config.seed, restart);
    let start = AngleParams::from_settings(&grid_search(t, e1, e2));
    let objective = |x: &[T]| {
        let p = AngleParams(std::array::from_fn(|i| x[i]));
        -chsh_from_tensor(t, &p.to_settings())
    };
    let r = minimize(objective, &start.0, &config.simplex);
    let params = AngleParams(std::array::from_fn(|i| r.x[i])).wrapped();
    (-r.value, params.to_settings(), r.iterations, r.converged)
}

/// Multi-start maximization of `Tr(ρB)` for a two-qubit state.
pub fn maximize_chsh_with<T: Real>(
    state: &QuantumState<T>,
    config: &OptimizerConfig<T>,
) -> Result<OptResult<T>> {
    if state.dimension() != 4 {
        return Err(HvError::invalid(
            "CHSH maximization needs a two-qubit state",
        ));
    }
    if config.restarts == 0 {
        return Err(HvError::invalid("restarts must be at least 1"));
    }
    let t = state.correlation_tensor()?;
    let runs: Vec<_> = (0..config.restarts)
        .into_par_iter()
        .map(|r| run_restart(&t, config, r))
        .collect();

    let mut best = 0;
    for (k, run) in runs.iter().enumerate().skip(1) {
        if run.0 > runs[best].0 {
            best = k;
        }
    }
    let (_, settings, iterations, converged) = runs[best];
    let best_value = expectation(state, chsh_operator(&settings))?;
    Ok(OptResult {
        best_value,
        best_settings: settings,
        iterations,
        converged,
        restart: best,
    })
}

pub fn maximize_chsh<T: Real>(
    state: &QuantumState<T>,
    restarts: usize,
    seed: u64,
) -> Result<OptResult<T>> {
    maximize_chsh_with(state, &OptimizerConfig::new(restarts, seed))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateFamily {
    /// `ρ(n_a) ⊗ ρ(n_b)`; the `i`-th grid point draws its pair from stream
    /// `(seed, 2³² + i)` and the parameter is only echoed.
    Separable,
    /// `werner_density(p)` with `p` the grid value.
    Werner,
}

pub fn family_state<T: Real>(
    family: StateFamily,
    param: T,
    index: usize,
    seed: u64,
) -> Result<QuantumState<T>> {
    match family {
        StateFamily::Werner => werner_density(param),
        StateFamily::Separable => {
            let mut rng = stream_rng(seed, STATE_STREAM_BASE + index as u64);
            let n_a = random_unit_vector(&mut rng);
            let n_b = random_unit_vector(&mut rng);
            Ok(separable_density(&n_a, &n_b))
        }
    }
}

/// One [`maximize_chsh`] per grid value, in grid order.
pub fn saturation_scan<T: Real>(
    family: StateFamily,
    grid: &[T],
    seed: u64,
    restarts: usize,
) -> Result<Vec<(T, OptResult<T>)>> {
    grid.par_iter()
        .enumerate()
        .map(|(i, &p)| {
            let state = family_state(family, p, i, seed)?;
            Ok((p, maximize_chsh(&state, restarts, seed)?))
        })
        .collect()
}
