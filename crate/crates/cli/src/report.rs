use std::fmt::Write as _;
use std::time::Instant;

use atlas_core::catalog::CatalogError;
use atlas_core::lie::LieError;
use serde::{Deserialize, Serialize};

use crate::render::{render, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    /// The shared computation budget ran out before the check finished.
    #[serde(rename = "skipped (budget)")]
    SkippedBudget,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedBudget => "skipped (budget)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub computed: String,
    pub elapsed_ms: u64,
}

/// Why a check could not produce a value.
#[derive(Debug)]
pub enum CheckError {
    Budget,
    Failed(String),
}

impl From<LieError> for CheckError {
    fn from(e: LieError) -> Self {
        match e {
            LieError::Cancelled => CheckError::Budget,
            other => CheckError::Failed(other.to_string()),
        }
    }
}

impl From<CatalogError> for CheckError {
    fn from(e: CatalogError) -> Self {
        CheckError::Failed(e.to_string())
    }
}

pub fn failed(e: impl std::fmt::Display) -> CheckError {
    CheckError::Failed(e.to_string())
}

/// Runs `f`, which returns whether the check passed and what it computed.
pub fn run_check(
    id: impl Into<String>,
    expected: impl Into<String>,
    f: impl FnOnce() -> Result<(bool, String), CheckError>,
) -> Check {
    let start = Instant::now();
    let (status, computed) = match f() {
        Ok((true, c)) => (Status::Pass, c),
        Ok((false, c)) => (Status::Fail, c),
        Err(CheckError::Budget) => (Status::SkippedBudget, "budget exhausted".into()),
        Err(CheckError::Failed(msg)) => (Status::Fail, format!("error: {msg}")),
    };
    Check {
        id: id.into(),
        status,
        expected: expected.into(),
        computed,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<Check>,
    /// No check failed. Budget skips do not count as failures.
    pub passed: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, seed: u64, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.status != Status::Fail);
        Self {
            suite: suite.into(),
            seed,
            checks,
            passed,
        }
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn render(&self, format: Format) -> String {
        if format == Format::Json {
            return serde_json::to_string_pretty(self).expect("report serializes") + "\n";
        }
        let headers = ["status", "check", "expected", "computed", "ms"];
        let rows: Vec<Vec<String>> = self
            .checks
            .iter()
            .map(|c| {
                vec![
                    c.status.as_str().to_uppercase(),
                    c.id.clone(),
                    c.expected.clone(),
                    c.computed.clone(),
                    c.elapsed_ms.to_string(),
                ]
            })
            .collect();
        let mut out = render(format, &headers, &rows);
        let _ = writeln!(
            out,
            "\n{}: {} ({} pass, {} fail, {} skipped; seed {})",
            self.suite,
            if self.passed { "PASS" } else { "FAIL" },
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::SkippedBudget),
            self.seed
        );
        out
    }
}
