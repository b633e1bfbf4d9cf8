//! Verification reports: an ordered list of named checks.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Undetermined,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Undetermined => "UNDETERMINED",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub witness: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, suite: &str, name: &str, status: Status, witness: impl Into<String>) {
        self.checks.push(Check {
            suite: suite.to_string(),
            name: name.to_string(),
            status,
            witness: witness.into(),
        });
    }

    /// Record a boolean check; the witness is only kept on failure.
    pub fn check(&mut self, suite: &str, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        let (status, w) = if ok { (Status::Pass, String::new()) } else { (Status::Fail, witness()) };
        self.push(suite, name, status, w);
    }

    /// Record a check that passes with an informational witness.
    pub fn note(&mut self, suite: &str, name: &str, ok: bool, witness: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(suite, name, status, witness);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "checks": self.checks,
            "summary": {
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "undetermined": self.count(Status::Undetermined),
            }
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{} {}/{} {}", if c.suite == "moddata" { "AXIOM" } else { "CHECK" }, c.suite, c.name, c.status)?;
            if !c.witness.is_empty() {
                write!(f, " {}", c.witness)?;
            }
            writeln!(f)?;
        }
        writeln!(
            f,
            "SUMMARY pass={} fail={} undetermined={}",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Undetermined)
        )
    }
}
