use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One checked identity instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of a verifier run over one target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub target: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: impl Into<String>, target: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            target: target.into(),
            checks: Vec::new(),
        }
    }

    pub fn check(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            label: label.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records `lhs == rhs`, rendering both sides on failure.
    pub fn check_eq<T: PartialEq + fmt::Display>(&mut self, label: impl Into<String>, lhs: &T, rhs: &T) {
        let passed = lhs == rhs;
        let detail = if passed {
            String::new()
        } else {
            format!("{lhs} != {rhs}")
        };
        self.check(label, passed, detail);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn absorb(&mut self, other: Report) {
        let prefix = other.name;
        self.checks.extend(other.checks.into_iter().map(|c| Check {
            label: format!("{prefix}: {}", c.label),
            ..c
        }));
    }

    /// Turns a failed report into an identity violation.
    pub fn into_result(self) -> Result<Report> {
        if self.passed() {
            return Ok(self);
        }
        let labels: Vec<String> = self
            .failures()
            .map(|c| format!("{} ({})", c.label, c.detail))
            .collect();
        Err(Error::IdentityViolation(format!(
            "{} on {}: {}",
            self.name,
            self.target,
            labels.join("; ")
        )))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let n_ok = self.checks.iter().filter(|c| c.passed).count();
        writeln!(
            f,
            "{status} {} {} ({n_ok}/{} checks)",
            self.name,
            self.target,
            self.checks.len()
        )?;
        for c in self.failures() {
            writeln!(f, "  failed: {} {}", c.label, c.detail)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_becomes_identity_violation() {
        let mut r = Report::new("demo", "X");
        r.check_eq("one", &1, &1);
        assert!(r.clone().into_result().is_ok());
        r.check_eq("two", &1, &2);
        assert!(!r.passed());
        assert!(matches!(r.into_result(), Err(Error::IdentityViolation(_))));
    }
}
