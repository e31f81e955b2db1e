//! Pass/fail reports produced by the verification engines.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    /// Human-readable detail; on failure this contains a concrete witness.
    pub detail: String,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), pass: true, detail: detail.into() }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), pass: false, detail: detail.into() }
    }

    pub fn of(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), pass: ok, detail: detail.into() }
    }
}

/// An ordered collection of checks with an aggregate verdict.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Report {
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, r: CheckResult) {
        self.results.push(r);
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.results.push(CheckResult::of(name, ok, detail));
    }

    pub fn merge(&mut self, other: Report) {
        self.results.extend(other.results);
    }

    pub fn pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.results.iter().filter(|r| !r.pass).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            let mark = if r.pass { "PASS" } else { "FAIL" };
            if r.detail.is_empty() {
                writeln!(f, "[{mark}] {}", r.name)?;
            } else {
                writeln!(f, "[{mark}] {} — {}", r.name, r.detail)?;
            }
        }
        write!(f, "overall: {}", if self.pass() { "PASS" } else { "FAIL" })
    }
}
