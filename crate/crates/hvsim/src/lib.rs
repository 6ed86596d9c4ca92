//! Scenario runner: each scenario exercises one claim of the hidden-variables
//! library and produces a report of named checks.

pub mod config;
pub mod report;
pub mod scenarios;

pub use config::{OutputFormat, Scenario, ScenarioConfig};
pub use report::{emit_report, Check, Relation, ScenarioReport};
pub use scenarios::run_scenario;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error(transparent)]
    Model(#[from] hvsim_core::HvError),
}

impl CliError {
    pub const fn exit_code(&self) -> i32 {
        2
    }
}
