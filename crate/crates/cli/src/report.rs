use std::fmt::Write;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub millis: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub toolkit_version: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(suite: &str, checks: Vec<CheckResult>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        SuiteReport {
            suite: suite.to_string(),
            toolkit_version: env!("CARGO_PKG_VERSION").to_string(),
            checks,
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {} (a5fano {})\n", self.suite, self.toolkit_version);
        for c in &self.checks {
            let _ = writeln!(out, "{}  {}  ({} ms)", c.status.tag(), c.name, c.millis);
            let _ = writeln!(out, "      expected: {}", c.expected);
            if c.actual != c.expected {
                let _ = writeln!(out, "      actual:   {}", c.actual);
            }
        }
        let s = &self.summary;
        let _ = writeln!(out, "{} pass, {} fail, {} skipped", s.pass, s.fail, s.skipped);
        out
    }
}
