//! Pass/fail records shared by the verification suites.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl Check {
    pub fn new(suite: &'static str, name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check { suite, name: name.into(), ok, detail: detail.into() }
    }

    pub fn pass(suite: &'static str, name: impl Into<String>) -> Self {
        Self::new(suite, name, true, "")
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}::{}", if self.ok { "PASS" } else { "FAIL" }, self.suite, self.name)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

/// Records equality of two values as a check, with the mismatch in the detail on failure.
pub fn expect_eq<T: PartialEq + fmt::Display>(
    suite: &'static str,
    name: impl Into<String>,
    got: &T,
    want: &T,
) -> Check {
    if got == want {
        Check::pass(suite, name)
    } else {
        Check::new(suite, name, false, format!("got {got}, expected {want}"))
    }
}

pub fn all_ok(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.ok)
}

/// Accumulates many cases of one identity into a single check that records the first
/// counterexample.
pub struct Tally {
    suite: &'static str,
    name: String,
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    pub fn new(suite: &'static str, name: impl Into<String>) -> Self {
        Tally { suite, name: name.into(), cases: 0, failure: None }
    }

    pub fn case<T: PartialEq + fmt::Display>(&mut self, label: impl fmt::Display, got: &T, want: &T) {
        self.cases += 1;
        if self.failure.is_none() && got != want {
            self.failure = Some(format!("{label}: got {got}, expected {want}"));
        }
    }

    pub fn holds(&mut self, label: impl fmt::Display, ok: bool) {
        self.cases += 1;
        if self.failure.is_none() && !ok {
            self.failure = Some(format!("{label}"));
        }
    }

    pub fn finish(self) -> Check {
        match self.failure {
            None => Check::new(self.suite, self.name, self.cases > 0, format!("{} cases", self.cases)),
            Some(f) => Check::new(self.suite, self.name, false, f),
        }
    }
}
