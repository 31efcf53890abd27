use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    EvidenceOnly,
}

impl Status {
    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::EvidenceOnly => "INFO",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub id: String,
    pub claim: String,
    /// The result or example the case checks.
    pub locus: String,
    pub status: Status,
    pub data: serde_json::Value,
}

impl CaseResult {
    pub fn new(
        id: impl Into<String>,
        claim: impl Into<String>,
        locus: &str,
        ok: bool,
        data: serde_json::Value,
    ) -> Self {
        CaseResult {
            id: id.into(),
            claim: claim.into(),
            locus: locus.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            data,
        }
    }

    pub fn evidence(id: impl Into<String>, claim: impl Into<String>, locus: &str, data: serde_json::Value) -> Self {
        CaseResult { id: id.into(), claim: claim.into(), locus: locus.to_string(), status: Status::EvidenceOnly, data }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub passed: bool,
    pub exit_status: i32,
}

impl Report {
    pub fn new(suite: impl Into<String>, cases: Vec<CaseResult>) -> Self {
        let passed = cases.iter().all(|c| c.status != Status::Fail);
        Report { suite: suite.into(), cases, passed, exit_status: if passed { 0 } else { 1 } }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let _ = writeln!(out, "{}  {}: {}", c.status.tag(), c.id, c.claim);
            if c.status != Status::Pass && !c.data.is_null() {
                let _ = writeln!(out, "      {}", c.data);
            }
        }
        let fails = self.cases.iter().filter(|c| c.status == Status::Fail).count();
        let _ = writeln!(
            out,
            "{}: {} cases, {} failed -> {}",
            self.suite,
            self.cases.len(),
            fails,
            if self.passed { "ok" } else { "FAILED" }
        );
        out
    }
}
