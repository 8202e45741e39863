//! Claim reports: the machine-readable unit of output.
//!
//! Every verification subcommand emits one or more reports, each tying a
//! claim identifier to the swept scope, a three-way status, and sorted
//! witnesses. Reports are deterministic for fixed flags — only the wall time
//! varies between reruns.

use std::time::Duration;

use clap::ValueEnum;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Verified,
    Counterexample,
    Inconclusive,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Counterexample => "counterexample",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Jsonl,
    Tsv,
}

#[derive(Debug)]
pub struct ClaimReport {
    pub claim_id: String,
    pub scope: String,
    pub status: Status,
    pub witnesses: Vec<String>,
    pub wall_time: Duration,
}

impl ClaimReport {
    /// Builds a report, sorting witnesses so that reruns and parallel sweeps
    /// emit identical lines.
    pub fn new(
        claim_id: impl Into<String>,
        scope: impl Into<String>,
        status: Status,
        mut witnesses: Vec<String>,
        wall_time: Duration,
    ) -> ClaimReport {
        witnesses.sort();
        witnesses.dedup();
        ClaimReport { claim_id: claim_id.into(), scope: scope.into(), status, witnesses, wall_time }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Jsonl => json!({
                "claim_id": self.claim_id,
                "scope": self.scope,
                "status": self.status.as_str(),
                "witnesses": self.witnesses,
                "wall_time_ms": self.wall_time.as_millis() as u64,
            })
            .to_string(),
            Format::Tsv => format!(
                "{}\t{}\t{}\t{}\t{}",
                self.claim_id,
                self.scope,
                self.status.as_str(),
                self.wall_time.as_millis(),
                self.witnesses.join("; ")
            ),
        }
    }
}

/// Prints all reports and folds their statuses into the process exit code:
/// 0 all verified, 2 any counterexample, 3 inconclusive present.
pub fn emit_and_code(reports: &[ClaimReport], format: Format) -> i32 {
    for report in reports {
        println!("{}", report.render(format));
    }
    if reports.iter().any(|r| r.status == Status::Counterexample) {
        2
    } else if reports.iter().any(|r| r.status == Status::Inconclusive) {
        3
    } else {
        0
    }
}

/// Collects per-instance outcomes into one report.
#[derive(Debug, Default)]
pub struct Tally {
    pub checked: u64,
    pub counterexamples: Vec<String>,
    pub inconclusive: Vec<String>,
}

impl Tally {
    pub fn into_report(
        self,
        claim_id: impl Into<String>,
        scope: impl Into<String>,
        wall_time: Duration,
    ) -> ClaimReport {
        let (status, witnesses) = if !self.counterexamples.is_empty() {
            (Status::Counterexample, self.counterexamples)
        } else if !self.inconclusive.is_empty() {
            (Status::Inconclusive, self.inconclusive)
        } else {
            (Status::Verified, Vec::new())
        };
        ClaimReport::new(claim_id, scope, status, witnesses, wall_time)
    }
}
