//! Verification reports: a counted sweep of exact comparisons with every
//! mismatch recorded verbatim. Assembly is strictly ordered so reports are
//! byte-stable run to run.

use std::fmt::Display;

/// One failed comparison, all sides rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of sweeping one identity over a range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity_id: String,
    pub range_description: String,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn new(identity_id: impl Into<String>, range_description: impl Into<String>) -> Self {
        VerificationReport {
            identity_id: identity_id.into(),
            range_description: range_description.into(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    /// Compares one case and records a failure on mismatch.
    pub fn case<T: PartialEq + Display>(&mut self, inputs: &str, expected: &T, actual: &T) {
        self.checked += 1;
        if expected != actual {
            self.failures.push(Failure {
                inputs: inputs.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    /// Folds another report's cases into this one.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}
