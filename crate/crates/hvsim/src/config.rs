use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    VerifyD2,
    LinearityFailure,
    ChshPaths,
    BellOriginal,
    Factored,
    SingletMax,
    SeparableMax,
    MixedEkert,
    Werner,
    NormScan,
}

impl Scenario {
    pub const ALL: [Scenario; 10] = [
        Scenario::VerifyD2,
        Scenario::LinearityFailure,
        Scenario::ChshPaths,
        Scenario::BellOriginal,
        Scenario::Factored,
        Scenario::SingletMax,
        Scenario::SeparableMax,
        Scenario::MixedEkert,
        Scenario::Werner,
        Scenario::NormScan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::VerifyD2 => "verify-d2",
            Scenario::LinearityFailure => "linearity-failure",
            Scenario::ChshPaths => "chsh-paths",
            Scenario::BellOriginal => "bell-original",
            Scenario::Factored => "factored",
            Scenario::SingletMax => "singlet-max",
            Scenario::SeparableMax => "separable-max",
            Scenario::MixedEkert => "mixed-ekert",
            Scenario::Werner => "werner",
            Scenario::NormScan => "norm-scan",
        }
    }

    /// What `--samples` counts when it is not given.
    pub fn default_samples(self) -> usize {
        match self {
            Scenario::VerifyD2 => 1000,
            Scenario::LinearityFailure => 100,
            Scenario::ChshPaths => 1000,
            Scenario::BellOriginal => 1000,
            Scenario::Factored => 10_000,
            Scenario::SingletMax => 5,
            Scenario::SeparableMax => 10,
            Scenario::MixedEkert => 100,
            Scenario::Werner => 5,
            Scenario::NormScan => 10_000,
        }
    }

    /// Named tolerances and their defaults.
    pub fn default_tolerances(self) -> &'static [(&'static str, f64)] {
        match self {
            Scenario::VerifyD2 => &[("exact", 1e-10), ("quadrature", 1e-5)],
            Scenario::LinearityFailure => &[("exact", 1e-10), ("measure", 1e-9), ("grid", 3e-5)],
            Scenario::ChshPaths => &[("exact", 1e-12)],
            Scenario::BellOriginal => &[("value", 1e-5), ("exact", 1e-12)],
            Scenario::Factored => &[("exact", 1e-12), ("bound", 1e-9), ("optimizer", 1e-6)],
            Scenario::SingletMax => &[("optimizer", 1e-6), ("reeval", 1e-10)],
            Scenario::SeparableMax => &[("optimizer", 1e-6)],
            Scenario::MixedEkert => &[("bound", 1e-9), ("state", 1e-10)],
            Scenario::Werner => &[("optimizer", 1e-5), ("bound", 1e-9)],
            Scenario::NormScan => &[("bound", 1e-9)],
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

/// One `name=value` tolerance override.
#[derive(Debug, Clone, PartialEq)]
pub struct TolOverride {
    pub name: String,
    pub value: f64,
}

impl FromStr for TolOverride {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, value) = s
            .split_once('=')
            .ok_or_else(|| format!("expected name=value, got `{s}`"))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|e| format!("bad tolerance value in `{s}`: {e}"))?;
        if !(value.is_finite() && value >= 0.0) {
            return Err(format!(
                "tolerance `{name}` must be finite and non-negative"
            ));
        }
        Ok(TolOverride {
            name: name.trim().to_string(),
            value,
        })
    }
}

/// A mixture atom as written in a config file.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomSpec {
    pub n_a: [f64; 3],
    pub n_b: [f64; 3],
    pub weight: f64,
}

/// Contents of a `--config` file. Every key is optional.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    #[serde(default)]
    pub tol: BTreeMap<String, f64>,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
    pub atoms: Option<Vec<AtomSpec>>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}

/// Resolved tolerance table for one scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct Tolerances(BTreeMap<String, f64>);

impl Tolerances {
    pub fn get(&self, name: &str) -> f64 {
        *self
            .0
            .get(name)
            .unwrap_or_else(|| panic!("scenario asked for undeclared tolerance `{name}`"))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub scenario: Scenario,
    pub seed: u64,
    pub samples: usize,
    pub tolerances: Tolerances,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
    pub atoms: Option<Vec<AtomSpec>>,
}

pub const DEFAULT_SEED: u64 = 0;

impl ScenarioConfig {
    /// Defaults for `scenario` with the given seed.
    pub fn new(scenario: Scenario, seed: u64) -> Self {
        ScenarioConfig::build(scenario, seed, None, &[], None, None, None, None)
            .expect("defaults are valid")
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    #[allow(clippy::too_many_arguments)]
    pub fn build(
        scenario: Scenario,
        seed: u64,
        samples: Option<usize>,
        overrides: &[TolOverride],
        format: Option<OutputFormat>,
        out: Option<PathBuf>,
        threads: Option<usize>,
        atoms: Option<Vec<AtomSpec>>,
    ) -> Result<Self, CliError> {
        let samples = samples.unwrap_or_else(|| scenario.default_samples());
        if samples == 0 {
            return Err(CliError::Usage("--samples must be at least 1".into()));
        }
        if threads == Some(0) {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        let mut tol: BTreeMap<String, f64> = scenario
            .default_tolerances()
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect();
        for o in overrides {
            match tol.get_mut(&o.name) {
                Some(slot) => *slot = o.value,
                None => {
                    let known: Vec<_> = tol.keys().map(String::as_str).collect();
                    return Err(CliError::Usage(format!(
                        "unknown tolerance `{}` for {scenario}; known: {}",
                        o.name,
                        known.join(", ")
                    )));
                }
            }
        }
        if atoms.is_some() && scenario != Scenario::MixedEkert {
            return Err(CliError::Usage(
                "`atoms` only applies to mixed-ekert".into(),
            ));
        }
        Ok(ScenarioConfig {
            scenario,
            seed,
            samples,
            tolerances: Tolerances(tol),
            format: format.unwrap_or_default(),
            out,
            threads,
            atoms,
        })
    }
}
