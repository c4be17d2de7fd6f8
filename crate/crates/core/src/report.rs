//! Verification reports shared by the suites, the command line and the
//! acceptance harness.

use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

/// The outcome of one check. `detail` carries the witness on failure.
///
/// Wall time is kept for text output only; JSON stays byte-identical
/// between runs.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub pass: bool,
    pub detail: Value,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl Report {
    pub fn new(check: impl Into<String>, n: usize, pass: bool, detail: Value) -> Self {
        Report {
            check: check.into(),
            n,
            m: None,
            pass,
            detail,
            wall_time: Duration::ZERO,
        }
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    /// Runs `f` and records its wall time.
    pub fn timed(f: impl FnOnce() -> Report) -> Report {
        let start = Instant::now();
        let mut r = f();
        r.wall_time = start.elapsed();
        r
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    /// One line: status, check, parameters, detail. No timing, so the line
    /// is reproducible.
    pub fn text_line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let m = self.m.map(|m| format!(" m={m}")).unwrap_or_default();
        format!("[{status}] {} n={}{m} {}", self.check, self.n, self.detail)
    }

    pub fn text_line_timed(&self) -> String {
        format!("{} ({:.2}s)", self.text_line(), self.wall_time.as_secs_f64())
    }
}

/// All reports passed.
pub fn all_pass(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.pass)
}
