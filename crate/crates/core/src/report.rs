//! Check reports shared by all verification suites.

use std::fmt;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A failing input together with both sides of the comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub elapsed_ms: u128,
    /// Extra human-readable detail (counts, census lines).
    pub note: Option<String>,
}

impl CheckResult {
    pub fn pass(id: impl Into<String>) -> CheckResult {
        CheckResult { id: id.into(), status: Status::Pass, counterexample: None, elapsed_ms: 0, note: None }
    }

    pub fn vacuous(id: impl Into<String>) -> CheckResult {
        CheckResult { id: id.into(), status: Status::Vacuous, counterexample: None, elapsed_ms: 0, note: None }
    }

    pub fn fail(id: impl Into<String>, cex: Counterexample) -> CheckResult {
        CheckResult { id: id.into(), status: Status::Fail, counterexample: Some(cex), elapsed_ms: 0, note: None }
    }

    pub fn from_bool(id: impl Into<String>, ok: bool, detail: impl FnOnce() -> Counterexample) -> CheckResult {
        if ok {
            CheckResult::pass(id)
        } else {
            CheckResult::fail(id, detail())
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> CheckResult {
        self.note = Some(note.into());
        self
    }

    /// Run `f` and record its wall time.
    pub fn timed(f: impl FnOnce() -> CheckResult) -> CheckResult {
        let start = Instant::now();
        let mut r = f();
        r.elapsed_ms = start.elapsed().as_millis();
        r
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(checks: Vec<CheckResult>) -> Report {
        Report { checks }
    }

    /// No check failed (vacuous checks count as passing).
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}
