//! Check results and their text / JSON-lines rendering.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::{Element, Presentation};
use crate::error::Result;
use crate::tensor::{TensorElement, TensorSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The quantity is supposed to be nonzero and is.
    ExpectedNonzero,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ExpectedNonzero => "expected-nonzero",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub suite: String,
    pub id: String,
    pub paper_ref: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    pub ms: f64,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("check serializes")
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<16} {:<9} {}  [{}] ({:.1} ms)",
            self.status, self.suite, self.id, self.paper_ref, self.ms
        )?;
        if let Some(r) = &self.residual {
            write!(f, "\n    residual: {r}")?;
        }
        Ok(())
    }
}

/// Outcome of evaluating one identity: `None` when the residual vanishes.
pub type Residual = Option<String>;

pub fn residual(p: &Presentation, e: &Element) -> Residual {
    (!e.is_zero()).then(|| p.display(e))
}

pub fn tensor_residual(sp: &TensorSpace<'_>, t: &TensorElement) -> Residual {
    (!t.is_zero()).then(|| sp.display(t))
}

/// Collects checks for one suite.
#[derive(Debug)]
pub struct Checker {
    suite: String,
    checks: Vec<Check>,
}

impl Checker {
    pub fn new(suite: impl Into<String>) -> Self {
        Checker {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    fn record(
        &mut self,
        id: String,
        paper_ref: &str,
        expect_zero: bool,
        start: Instant,
        outcome: Result<Residual>,
    ) {
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let (status, residual) = match outcome {
            Ok(None) if expect_zero => (Status::Pass, None),
            Ok(None) => (Status::Fail, Some("0 (expected a nonzero value)".into())),
            Ok(Some(r)) if expect_zero => (Status::Fail, Some(r)),
            Ok(Some(r)) => (Status::ExpectedNonzero, Some(r)),
            Err(e) => (Status::Fail, Some(format!("error: {e}"))),
        };
        self.checks.push(Check {
            suite: self.suite.clone(),
            id,
            paper_ref: paper_ref.to_string(),
            status,
            residual,
            ms,
        });
    }

    /// Passes when `f` yields a vanishing residual.
    pub fn zero(
        &mut self,
        id: impl Into<String>,
        paper_ref: &str,
        f: impl FnOnce() -> Result<Residual>,
    ) {
        let start = Instant::now();
        let outcome = f();
        self.record(id.into(), paper_ref, true, start, outcome);
    }

    /// Passes (as `expected-nonzero`) when `f` yields a nonzero residual.
    pub fn nonzero(
        &mut self,
        id: impl Into<String>,
        paper_ref: &str,
        f: impl FnOnce() -> Result<Residual>,
    ) {
        let start = Instant::now();
        let outcome = f();
        self.record(id.into(), paper_ref, false, start, outcome);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn finish(self) -> Vec<Check> {
        self.checks
    }
}

/// Sorted checks of one run.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| (&a.suite, &a.id).cmp(&(&b.suite, &b.id)));
        Report { checks }
    }

    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok())
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_ok() {
            0
        } else {
            1
        }
    }

    pub fn find(&self, suite: &str, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.suite == suite && c.id == id)
    }

    pub fn summary(&self) -> String {
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        format!(
            "{} checks: {} pass, {} expected-nonzero, {} fail",
            self.checks.len(),
            count(Status::Pass),
            count(Status::ExpectedNonzero),
            count(Status::Fail)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statuses_follow_expectations() {
        let mut c = Checker::new("demo");
        c.zero("a", "ref", || Ok(None));
        c.zero("b", "ref", || Ok(Some("x".into())));
        c.nonzero("c", "ref", || Ok(Some("x".into())));
        c.nonzero("d", "ref", || Ok(None));
        let r = Report::new(c.finish());
        let st: Vec<Status> = r.checks.iter().map(|c| c.status).collect();
        assert_eq!(
            st,
            [
                Status::Pass,
                Status::Fail,
                Status::ExpectedNonzero,
                Status::Fail
            ]
        );
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn json_fields() {
        let mut c = Checker::new("demo");
        c.zero("a", "x*th = q*th*x", || Ok(None));
        let v: serde_json::Value = serde_json::from_str(&c.finish()[0].to_json()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["id", "ms", "paper_ref", "status", "suite"]);
        assert_eq!(v["status"], "pass");
    }
}
