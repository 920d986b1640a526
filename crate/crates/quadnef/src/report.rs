//! Verification report documents, as JSON and as text.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use quadnef_core::catalog::VerificationReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub invocation: Vec<String>,
    pub results: Vec<ResultRecord>,
    pub summary: Summary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub case_id: String,
    pub theorem: String,
    pub rank_tested: i64,
    pub computed: Option<NumericsRecord>,
    pub expected_c2: i64,
    pub weak_fano: Option<bool>,
    pub globally_generated: String,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericsRecord {
    pub rank: i64,
    pub c1: [i64; 2],
    pub c2: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl From<&VerificationReport> for ResultRecord {
    fn from(r: &VerificationReport) -> Self {
        ResultRecord {
            case_id: r.case_id.clone(),
            theorem: r.theorem.to_string(),
            rank_tested: r.rank_tested,
            computed: r.computed.map(|e| NumericsRecord { rank: e.rank, c1: [e.c1.a, e.c1.b], c2: e.c2 }),
            expected_c2: r.expected_c2,
            weak_fano: r.weak_fano,
            globally_generated: r.globally_generated.to_string(),
            passed: r.passed(),
            checks: r
                .checks
                .iter()
                .map(|c| CheckRecord { name: c.name.to_string(), passed: c.passed, detail: c.detail.clone() })
                .collect(),
        }
    }
}

impl ReportDocument {
    pub fn new(invocation: Vec<String>, reports: &[VerificationReport]) -> Self {
        let results: Vec<ResultRecord> = reports.iter().map(ResultRecord::from).collect();
        let passed = results.iter().filter(|r| r.passed).count();
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            invocation,
            summary: Summary { total: results.len(), passed, failed: results.len() - passed },
            results,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// The summary agrees with the result list.
    pub fn is_consistent(&self) -> bool {
        let passed = self.results.iter().filter(|r| r.passed).count();
        self.summary == Summary { total: self.results.len(), passed, failed: self.results.len() - passed }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let c2 = r.computed.map_or("?".to_string(), |e| e.c2.to_string());
            let wf = match r.weak_fano {
                Some(true) => "  weak_fano=yes",
                Some(false) => "  weak_fano=no",
                None => "",
            };
            let verdict = if r.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{verdict}  {}  r={}  c2={c2}  gg={}{wf}",
                r.case_id, r.rank_tested, r.globally_generated
            );
            for c in &r.checks {
                let mark = if c.passed { "ok  " } else { "FAIL" };
                let _ = writeln!(out, "    {mark} {}: {}", c.name, c.detail);
            }
        }
        let s = self.summary;
        let _ = writeln!(out, "{} reports: {} passed, {} failed", s.total, s.passed, s.failed);
        out
    }
}
