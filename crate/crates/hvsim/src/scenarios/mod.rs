//! Canned scenarios. Each one draws from its own stream of the seed so that
//! adding a scenario never shifts the numbers of another.

mod d2;
mod paths;
mod product;
mod saturation;

use std::collections::BTreeMap;
use std::time::Instant;

use serde_json::Value;

use crate::config::{Scenario, ScenarioConfig};
use crate::report::{num, Check, ScenarioReport};
use crate::CliError;

pub(crate) const TSIRELSON: f64 = 2.0 * std::f64::consts::SQRT_2;

/// Echoed scenario inputs.
#[derive(Default)]
pub(crate) struct Inputs(BTreeMap<String, Value>);

impl Inputs {
    fn from_config(config: &ScenarioConfig) -> Self {
        let mut i = Inputs::default();
        i.int("seed", config.seed);
        i.int("samples", config.samples as u64);
        i
    }

    pub(crate) fn int(&mut self, key: &str, v: u64) -> &mut Self {
        self.0.insert(key.into(), Value::from(v));
        self
    }

    pub(crate) fn real(&mut self, key: &str, v: f64) -> &mut Self {
        self.0.insert(key.into(), num(v));
        self
    }

    pub(crate) fn reals(&mut self, key: &str, v: &[f64]) -> &mut Self {
        self.0.insert(
            key.into(),
            Value::Array(v.iter().map(|x| num(*x)).collect()),
        );
        self
    }

    pub(crate) fn text(&mut self, key: &str, v: &str) -> &mut Self {
        self.0.insert(key.into(), Value::from(v));
        self
    }
}

pub fn run_scenario(config: &ScenarioConfig) -> Result<ScenarioReport, CliError> {
    let start = Instant::now();
    let mut inputs = Inputs::from_config(config);
    let checks: Vec<Check> = match config.scenario {
        Scenario::VerifyD2 => d2::verify_d2(config, &mut inputs)?,
        Scenario::LinearityFailure => d2::linearity_failure(config, &mut inputs)?,
        Scenario::ChshPaths => paths::chsh_paths(config, &mut inputs)?,
        Scenario::BellOriginal => paths::bell_original(config, &mut inputs)?,
        Scenario::Factored => product::factored(config, &mut inputs)?,
        Scenario::SingletMax => saturation::singlet_max(config, &mut inputs)?,
        Scenario::SeparableMax => saturation::separable_max(config, &mut inputs)?,
        Scenario::MixedEkert => saturation::mixed_ekert(config, &mut inputs)?,
        Scenario::Werner => saturation::werner(config, &mut inputs)?,
        Scenario::NormScan => saturation::norm_scan(config, &mut inputs)?,
    };
    let mut report =
        ScenarioReport::new(config.scenario.name(), inputs.0, &config.tolerances, checks);
    report.duration = start.elapsed();
    Ok(report)
}

pub(crate) fn max_of(it: impl Iterator<Item = f64>) -> f64 {
    it.fold(f64::NEG_INFINITY, f64::max)
}

pub(crate) fn min_of(it: impl Iterator<Item = f64>) -> f64 {
    it.fold(f64::INFINITY, f64::min)
}
