use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use cumulant_core::hom::{SignConvention, Status};

pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Debug, Serialize)]
pub struct ReportEntry {
    pub check_name: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub duration_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: &'static str,
    pub convention: SignConvention,
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn new(convention: SignConvention, mut entries: Vec<ReportEntry>) -> Self {
        entries.sort_by(|a, b| (&a.check_name, &a.parameters).cmp(&(&b.check_name, &b.parameters)));
        Self {
            version: REPORT_VERSION,
            convention,
            entries,
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("convention {}\n", self.convention);
        for e in &self.entries {
            let status = match e.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let params: Vec<String> = e
                .parameters
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            out.push_str(&format!(
                "{status} {} [{}] {}ms\n",
                e.check_name,
                params.join(" "),
                e.duration_ms
            ));
            if let Some(w) = &e.witness {
                out.push_str(&format!("  witness: {w}\n"));
            }
        }
        let failed = self
            .entries
            .iter()
            .filter(|e| e.status == Status::Fail)
            .count();
        out.push_str(&format!("{} checks, {failed} failed\n", self.entries.len()));
        out
    }
}

/// Result of one check before timing is attached.
pub struct Outcome {
    pub passed: bool,
    pub witness: Option<Value>,
}

impl Outcome {
    pub fn pass() -> Self {
        Self {
            passed: true,
            witness: None,
        }
    }

    pub fn from_bool(passed: bool) -> Self {
        Self {
            passed,
            witness: None,
        }
    }

    /// Attaches `witness` only on failure.
    pub fn with_witness(passed: bool, witness: impl FnOnce() -> Value) -> Self {
        Self {
            passed,
            witness: (!passed).then(witness),
        }
    }
}

/// Collects timed entries.
#[derive(Default)]
pub struct Recorder {
    pub entries: Vec<ReportEntry>,
}

impl Recorder {
    pub fn run(&mut self, name: &str, params: &[(&str, String)], check: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = check();
        self.entries.push(ReportEntry {
            check_name: name.to_string(),
            parameters: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            status: if outcome.passed {
                Status::Pass
            } else {
                Status::Fail
            },
            witness: outcome.witness,
            duration_ms: start.elapsed().as_millis() as u64,
        });
    }
}
