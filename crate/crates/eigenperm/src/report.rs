//! Verification reports: a named list of expected/actual comparisons with
//! per-check timings, rendered as text or JSON.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "fail"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub expected: String,
    pub actual: String,
    pub ms: f64,
}

/// Outcome of one verification suite. Overall status is fail iff any
/// check fails.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub status: CheckStatus,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            checks: Vec::new(),
            status: CheckStatus::Pass,
        }
    }

    /// Record a comparison; the check passes iff expected == actual.
    pub fn record(&mut self, name: &str, expected: String, actual: String, ms: f64) {
        let status = if expected == actual {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        if status == CheckStatus::Fail {
            self.status = CheckStatus::Fail;
        }
        self.checks.push(CheckResult {
            name: name.to_string(),
            status,
            expected,
            actual,
            ms,
        });
    }

    /// Time a closure producing (expected, actual) and record the result.
    pub fn run_check<F: FnOnce() -> (String, String)>(&mut self, name: &str, f: F) {
        let start = Instant::now();
        let (expected, actual) = f();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        self.record(name, expected, actual, ms);
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite {}\n", self.suite));
        for c in &self.checks {
            out.push_str(&format!("  [{}] {} ({:.1} ms)\n", c.status, c.name, c.ms));
            if c.status == CheckStatus::Fail {
                out.push_str(&format!("        expected: {}\n", c.expected));
                out.push_str(&format!("        actual:   {}\n", c.actual));
            }
        }
        let passed = self.checks.iter().filter(|c| c.status == CheckStatus::Pass).count();
        out.push_str(&format!(
            "  {}: {}/{} checks passed\n",
            self.status,
            passed,
            self.checks.len()
        ));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_aggregates_failures() {
        let mut r = VerificationReport::new("demo");
        r.record("ok", "1".into(), "1".into(), 0.5);
        assert!(r.passed());
        r.record("bad", "1".into(), "2".into(), 0.5);
        assert!(!r.passed());
        assert_eq!(r.checks[1].status, CheckStatus::Fail);
    }

    #[test]
    fn json_shape() {
        let mut r = VerificationReport::new("demo");
        r.record("ok", "x".into(), "x".into(), 1.25);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["suite"], "demo");
        assert_eq!(v["status"], "pass");
        assert_eq!(v["checks"][0]["name"], "ok");
        assert_eq!(v["checks"][0]["status"], "pass");
        assert!(v["checks"][0]["ms"].is_number());
    }
}
