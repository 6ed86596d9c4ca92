use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::time::Duration;

use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::config::{OutputFormat, Tolerances};
use crate::CliError;

/// Rounds to 15 significant digits. Any such decimal survives the trip
/// through `f64`, so the shortest representation of the result never needs
/// more than 15 digits.
pub fn round15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().expect("formatted float parses")
}

fn ser_round15<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(round15(*x))
    } else {
        s.serialize_none()
    }
}

/// A rounded JSON number; non-finite values become `null`.
pub fn num(x: f64) -> Value {
    serde_json::Number::from_f64(round15(x)).map_or(Value::Null, Value::Number)
}

fn num_text(x: f64) -> String {
    num(x).to_string()
}

/// How `observed` is compared with `expected`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `|observed − expected| ≤ tolerance`
    Close,
    /// `observed ≤ expected + tolerance`
    AtMost,
    /// `observed ≥ expected − tolerance`
    AtLeast,
    /// `observed > expected`
    Greater,
}

impl Relation {
    pub fn holds(self, expected: f64, observed: f64, tolerance: f64) -> bool {
        if !observed.is_finite() {
            return false;
        }
        match self {
            Relation::Close => (observed - expected).abs() <= tolerance,
            Relation::AtMost => observed <= expected + tolerance,
            Relation::AtLeast => observed >= expected - tolerance,
            Relation::Greater => observed > expected,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub relation: Relation,
    #[serde(serialize_with = "ser_round15")]
    pub expected: f64,
    #[serde(serialize_with = "ser_round15")]
    pub observed: f64,
    #[serde(serialize_with = "ser_round15")]
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        relation: Relation,
        expected: f64,
        observed: f64,
        tolerance: f64,
    ) -> Self {
        Check {
            name: name.into(),
            relation,
            expected,
            observed,
            tolerance,
            pass: relation.holds(expected, observed, tolerance),
        }
    }

    pub fn close(name: impl Into<String>, expected: f64, observed: f64, tolerance: f64) -> Self {
        Check::new(name, Relation::Close, expected, observed, tolerance)
    }

    pub fn at_most(name: impl Into<String>, bound: f64, observed: f64, tolerance: f64) -> Self {
        Check::new(name, Relation::AtMost, bound, observed, tolerance)
    }

    pub fn at_least(name: impl Into<String>, bound: f64, observed: f64, tolerance: f64) -> Self {
        Check::new(name, Relation::AtLeast, bound, observed, tolerance)
    }

    pub fn greater(name: impl Into<String>, bound: f64, observed: f64) -> Self {
        Check::new(name, Relation::Greater, bound, observed, 0.0)
    }

    /// A yes/no outcome stored as 1/0 and compared exactly.
    pub fn flag(name: impl Into<String>, expected: bool, observed: bool) -> Self {
        let b = |v: bool| if v { 1.0 } else { 0.0 };
        Check::close(name, b(expected), b(observed), 0.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub inputs: BTreeMap<String, Value>,
    pub tolerances: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub pass: bool,
    /// Kept out of the serialized report so reruns stay byte-identical.
    #[serde(skip)]
    pub duration: Duration,
}

impl ScenarioReport {
    pub fn new(
        scenario: impl Into<String>,
        inputs: BTreeMap<String, Value>,
        tolerances: &Tolerances,
        checks: Vec<Check>,
    ) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        ScenarioReport {
            scenario: scenario.into(),
            inputs,
            tolerances: tolerances
                .iter()
                .map(|(k, v)| (k.to_string(), num(v)))
                .collect(),
            checks,
            pass,
            duration: Duration::ZERO,
        }
    }

    /// Recomputes the verdict from the rows.
    pub fn verdict_from_rows(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.relation.holds(c.expected, c.observed, c.tolerance))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "scenario",
            "check",
            "expected",
            "observed",
            "tolerance",
            "pass",
        ])
        .expect("in-memory write");
        for c in &self.checks {
            w.write_record([
                self.scenario.as_str(),
                c.name.as_str(),
                &num_text(c.expected),
                &num_text(c.observed),
                &num_text(c.tolerance),
                if c.pass { "true" } else { "false" },
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 csv")
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Csv => self.to_csv(),
        }
    }
}

/// Writes the report to `path`, or to stdout when `path` is `None`.
pub fn emit_report(
    report: &ScenarioReport,
    format: OutputFormat,
    path: Option<&Path>,
) -> Result<(), CliError> {
    let text = report.render(format);
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io(format!("stdout: {e}")))
        }
    }
}
