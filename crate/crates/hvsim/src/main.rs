use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use hvsim::config::{
    FileConfig, OutputFormat, Scenario, ScenarioConfig, TolOverride, DEFAULT_SEED,
};
use hvsim::{emit_report, run_scenario, CliError};

/// Run a canned hidden-variables scenario and print its report.
#[derive(Debug, Parser)]
#[command(name = "hvsim", version)]
struct Cli {
    scenario: Scenario,
    #[arg(long)]
    seed: Option<u64>,
    /// Sample count; its meaning depends on the scenario.
    #[arg(long)]
    samples: Option<usize>,
    /// Tolerance override, repeatable: `--tol bound=1e-8`.
    #[arg(long = "tol", value_name = "NAME=VALUE")]
    tol: Vec<TolOverride>,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    threads: Option<usize>,
    /// JSON file with the same keys; flags given here win.
    #[arg(long)]
    config: Option<PathBuf>,
}

fn resolve(cli: Cli) -> Result<ScenarioConfig, CliError> {
    let file = match &cli.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let mut overrides: Vec<TolOverride> = file
        .tol
        .into_iter()
        .map(|(name, value)| TolOverride { name, value })
        .collect();
    overrides.extend(cli.tol);
    ScenarioConfig::build(
        cli.scenario,
        cli.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
        cli.samples.or(file.samples),
        &overrides,
        cli.format.or(file.format),
        cli.out.or(file.out),
        cli.threads.or(file.threads),
        file.atoms,
    )
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let config = resolve(cli)?;
    if let Some(n) = config.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    }
    let report = run_scenario(&config)?;
    emit_report(&report, config.format, config.out.as_deref())?;
    eprintln!(
        "{}: {} in {:.3} s",
        report.scenario,
        if report.pass { "pass" } else { "FAIL" },
        report.duration.as_secs_f64()
    );
    Ok(report.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("hvsim: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
