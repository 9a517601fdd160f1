//! Machine-readable verification reports.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};

static TIMINGS: AtomicBool = AtomicBool::new(false);

/// Turn per-check timings on or off for reports created afterwards.
pub fn set_timings(on: bool) {
    TIMINGS.store(on, Ordering::Relaxed);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// An exploratory result; never counts as a failure.
    Finding,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    /// Short name of the claim being checked.
    pub claim: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub finding: usize,
}

/// A list of checks with pass/fail/finding status.
///
/// Checks are kept sorted by id so that serialized reports are
/// byte-identical across runs. Timings are only recorded when enabled.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub family: String,
    pub params: BTreeMap<String, i64>,
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub version: String,
    pub seed: u64,
    #[serde(skip)]
    timings: bool,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            family: String::new(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            summary: Summary::default(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed: 0,
            timings: TIMINGS.load(Ordering::Relaxed),
        }
    }

    pub fn family(mut self, family: &str) -> Self {
        self.family = family.to_string();
        self
    }

    pub fn param(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Record wall-clock time per check (makes output nondeterministic).
    pub fn with_timings(mut self, on: bool) -> Self {
        self.timings = on;
        self
    }

    fn push(&mut self, mut check: Check) {
        if !self.timings {
            check.elapsed_ms = None;
        }
        match check.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Finding => self.summary.finding += 1,
        }
        let pos = self.checks.partition_point(|c| c.id <= check.id);
        self.checks.insert(pos, check);
    }

    /// Record a check whose outcome is `Ok(None)` for pass, `Ok(Some(w))`
    /// for a failure with witness `w`. Errors other than non-termination
    /// become failures; non-termination is propagated.
    pub fn check<F>(&mut self, id: &str, description: &str, claim: &str, f: F) -> Result<()>
    where
        F: FnOnce() -> Result<Option<String>>,
    {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed().as_millis() as u64;
        let (status, witness) = match outcome {
            Ok(None) => (Status::Pass, None),
            Ok(Some(w)) => (Status::Fail, Some(w)),
            Err(e @ Error::NonTermination { .. }) => return Err(e),
            Err(e) => (Status::Fail, Some(e.to_string())),
        };
        self.push(Check {
            id: id.to_string(),
            description: description.to_string(),
            claim: claim.to_string(),
            status,
            witness,
            elapsed_ms: Some(elapsed),
        });
        Ok(())
    }

    /// Record an exploratory result.
    pub fn finding(&mut self, id: &str, description: &str, claim: &str, witness: String) {
        self.push(Check {
            id: id.to_string(),
            description: description.to_string(),
            claim: claim.to_string(),
            status: Status::Finding,
            witness: Some(witness),
            elapsed_ms: None,
        });
    }

    /// Append all checks of `other`, prefixing their ids.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.id = format!("{prefix}/{}", c.id);
            }
            self.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn findings(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Finding)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} [{}]: {} pass, {} fail, {} finding",
            self.suite, self.family, self.summary.pass, self.summary.fail, self.summary.finding
        )?;
        for c in self.failures() {
            writeln!(f, "  FAIL {}: {}", c.id, c.witness.as_deref().unwrap_or(""))?;
        }
        Ok(())
    }
}

/// `None` if `e` is zero, otherwise its text as a witness.
pub fn zero_or_witness(e: &crate::nc::NCElement) -> Option<String> {
    (!e.is_zero()).then(|| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_counted() {
        let mut r = Report::new("demo");
        r.check("b", "", "", || Ok(None)).unwrap();
        r.check("a", "", "", || Ok(Some("x".into()))).unwrap();
        r.finding("c", "", "", "w".into());
        let ids: Vec<_> = r.checks.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids, ["a", "b", "c"]);
        assert_eq!(
            r.summary,
            Summary {
                pass: 1,
                fail: 1,
                finding: 1
            }
        );
        assert!(!r.passed());
        assert!(!r.to_json().contains("elapsed_ms"));
    }
}
