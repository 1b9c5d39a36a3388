//! Named pass/fail checks and the report that collects them.

use std::fmt;

use serde::Serialize;

/// One named check: what was expected, what was found, and where it belongs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub section: u8,
    pub anchor: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

impl Check {
    /// Passes iff `expected == actual`.
    pub fn equal<T: PartialEq + fmt::Display>(
        section: u8,
        name: impl Into<String>,
        anchor: impl Into<String>,
        expected: &T,
        actual: &T,
    ) -> Check {
        Check {
            name: name.into(),
            section,
            anchor: anchor.into(),
            passed: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn holds(
        section: u8,
        name: impl Into<String>,
        anchor: impl Into<String>,
        passed: bool,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) -> Check {
        Check {
            name: name.into(),
            section,
            anchor: anchor.into(),
            passed,
            expected: expected.into(),
            actual: actual.into(),
        }
    }

    /// A check whose computation itself failed.
    pub fn errored(section: u8, name: impl Into<String>, anchor: impl Into<String>, err: &crate::Error) -> Check {
        Check::holds(section, name, anchor, false, "no error", format!("error: {err}"))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{mark}] {} ({})", self.name, self.anchor)?;
        if !self.passed {
            write!(f, "\n       expected: {}\n       actual:   {}", self.expected, self.actual)?;
        }
        Ok(())
    }
}

/// Checks in a deterministic order.
#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} passed, {} failed", self.len(), self.len() - failed, failed)
    }
}
