use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Cited,
    Failed,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Verified => "verified",
            Status::Cited => "cited",
            Status::Failed => "failed",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    pub id: String,
    pub kind: String,
    pub status: Status,
    pub detail: String,
    pub ms: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub verified: usize,
    pub cited: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub script: String,
    pub steps: Vec<StepReport>,
    pub summary: Summary,
    pub denominator_primes: Vec<u64>,
}

impl Report {
    pub fn step(&self, id: &str) -> Option<&StepReport> {
        self.steps.iter().find(|s| s.id == id)
    }

    /// No failures, and under `strict_cited` no cited steps either.
    pub fn success(&self, strict_cited: bool) -> bool {
        self.summary.failed == 0 && (!strict_cited || self.summary.cited == 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Copy with every timing zeroed, for comparisons across runs.
    pub fn without_timings(&self) -> Report {
        let mut r = self.clone();
        for s in &mut r.steps {
            s.ms = 0;
        }
        r
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "script {}", self.script)?;
        let w = self.steps.iter().map(|s| s.id.len()).max().unwrap_or(0);
        for s in &self.steps {
            writeln!(f, "  {:<8} {:<w$}  {:<24} {:>6} ms  {}", s.status, s.id, s.kind, s.ms, s.detail)?;
        }
        let primes: Vec<String> = self.denominator_primes.iter().map(u64::to_string).collect();
        writeln!(
            f,
            "summary: {} verified, {} cited, {} failed; denominator primes {{{}}}",
            self.summary.verified,
            self.summary.cited,
            self.summary.failed,
            primes.join(", ")
        )
    }
}
