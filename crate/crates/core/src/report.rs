//! Pass/fail bookkeeping shared by the verification routines.

use std::collections::BTreeMap;

use serde::Serialize;

/// The first input on which a check failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

/// One named property, checked on `checked` inputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub passed: bool,
    pub first_failure: Option<Failure>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, serde_json::Value>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checked: 0,
            passed: true,
            first_failure: None,
            details: BTreeMap::new(),
        }
    }

    /// Counts one input; keeps only the first failure.
    pub fn record(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.checked += 1;
        if !ok && self.passed {
            self.passed = false;
            self.first_failure = Some(failure());
        }
    }

    pub fn record_eq<T: PartialEq>(
        &mut self,
        inputs: impl FnOnce() -> String,
        lhs: &T,
        rhs: &T,
        show: impl Fn(&T) -> String,
    ) {
        self.record(lhs == rhs, || Failure {
            inputs: inputs(),
            lhs: show(lhs),
            rhs: show(rhs),
        });
    }

    pub fn detail(&mut self, key: impl Into<String>, value: impl Into<serde_json::Value>) {
        self.details.insert(key.into(), value.into());
    }
}

/// A group of checks run together.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<CheckReport>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: CheckReport) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// The first failing check, in the order the checks were run.
    pub fn first_failure(&self) -> Option<&CheckReport> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }
}
