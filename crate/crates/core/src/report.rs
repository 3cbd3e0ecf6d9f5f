//! Pass/fail bookkeeping for exhaustive verification runs.

use std::fmt;

use serde::Serialize;

/// How many counterexamples each check keeps verbatim.
const KEEP_FAILURES: usize = 20;

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    /// The first few counterexamples, described in text.
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEEP_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    /// Collects `(ok, description)` results computed elsewhere, e.g. in parallel.
    pub fn extend(&mut self, results: impl IntoIterator<Item = Option<String>>) {
        for r in results {
            match r {
                None => self.record(true, String::new),
                Some(msg) => self.record(false, || msg),
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<CheckReport>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: CheckReport) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn checked(&self) -> usize {
        self.checks.iter().map(|c| c.checked).sum()
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `RESULT pass|fail checked=<count>`
    pub fn summary_line(&self) -> String {
        format!(
            "RESULT {} checked={}",
            if self.passed() { "pass" } else { "fail" },
            self.checked()
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            writeln!(
                f,
                "  {:<22} {} checked={} failed={}",
                c.name,
                if c.passed() { "ok  " } else { "FAIL" },
                c.checked,
                c.failed
            )?;
            for msg in &c.failures {
                writeln!(f, "    {msg}")?;
            }
        }
        write!(f, "{}", self.summary_line())
    }
}
