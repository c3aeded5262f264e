//! Run configuration, suite results and their serialized forms.

pub mod emit;
pub mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog::StructureId;
use crate::homology::SliceRecord;
use crate::{Error, Result};

pub use emit::{csv_rows, emit_report, write_report, CsvRow};
pub use suites::{applicable_suites, run};

/// Bumped whenever a field of [`HomologyReport`] changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Eigen,
    Classifier,
    Homology,
    Harmonic,
    Spectral,
    Sigma,
    Propositions,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Identities,
        Suite::Eigen,
        Suite::Classifier,
        Suite::Homology,
        Suite::Harmonic,
        Suite::Spectral,
        Suite::Sigma,
        Suite::Propositions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Eigen => "eigen",
            Suite::Classifier => "classifier",
            Suite::Homology => "homology",
            Suite::Harmonic => "harmonic",
            Suite::Spectral => "spectral",
            Suite::Sigma => "sigma",
            Suite::Propositions => "propositions",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::InvalidConfig(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::InvalidConfig(format!("unknown format `{other}`"))),
        }
    }
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub structure: String,
    pub n: usize,
    pub weight_cutoff: i64,
    pub p_max: u32,
    pub q_max: u32,
    pub suites: Vec<Suite>,
    pub format: Format,
    /// Drop the balanced and `i_H`-kernel filters on cotangent slices.
    pub full_forms: bool,
    /// Record wall-clock time per suite; reports are then no longer byte-stable.
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            structure: "DrinfeldSklyanin".into(),
            n: 2,
            weight_cutoff: 4,
            p_max: 2,
            q_max: 2,
            suites: Vec::new(),
            format: Format::Json,
            full_forms: false,
            timing: false,
        }
    }
}

impl RunConfig {
    /// Parsed structure identifier after validating every field.
    pub fn validate(&self) -> Result<StructureId> {
        if self.n < 2 {
            return Err(Error::InvalidConfig(format!("n must be at least 2, got {}", self.n)));
        }
        if self.weight_cutoff < 0 {
            return Err(Error::InvalidConfig(format!("weight cutoff must be non-negative, got {}", self.weight_cutoff)));
        }
        StructureId::parse(&self.structure, self.n)
    }

    /// Suites in canonical order without repeats.
    pub fn normalized_suites(&self) -> Vec<Suite> {
        let mut s = self.suites.clone();
        s.sort();
        s.dedup();
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    /// Short identifier of the claim under test.
    pub claim: String,
    /// What the check was applied to.
    pub subject: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl CheckOutcome {
    pub fn new(claim: &str, subject: impl Into<String>, passed: bool) -> Self {
        CheckOutcome { claim: claim.into(), subject: subject.into(), passed, counterexample: None }
    }

    pub fn with_counterexample(mut self, v: Value) -> Self {
        if !self.passed {
            self.counterexample = Some(v);
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
    /// Homology rows computed by the suite.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<SliceRecord>,
    /// Recorded values that are reported rather than asserted.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl SuiteResult {
    pub fn new(suite: Suite) -> Self {
        SuiteResult { suite, passed: true, checks: Vec::new(), rows: Vec::new(), notes: BTreeMap::new(), elapsed_ms: None }
    }

    pub fn push(&mut self, c: CheckOutcome) {
        self.passed &= c.passed;
        self.checks.push(c);
    }

    pub fn note(&mut self, key: &str, v: impl Serialize) {
        self.notes.insert(key.into(), serde_json::to_value(v).expect("note serializes"));
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub schema_version: u32,
    pub config: RunConfig,
    pub passed: bool,
    pub results: Vec<SuiteResult>,
}

impl HomologyReport {
    pub fn failures(&self) -> impl Iterator<Item = (&SuiteResult, &CheckOutcome)> {
        self.results.iter().flat_map(|r| r.checks.iter().filter(|c| !c.passed).map(move |c| (r, c)))
    }
}
