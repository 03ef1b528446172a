use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// One failed instance, with enough data to re-check it in isolation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub reason: String,
    pub witness: Value,
}

/// Outcome of checking one claim over a family of instances.
///
/// `passed` holds exactly when `failures` is empty.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub statement: String,
    pub parameters: BTreeMap<String, Value>,
    pub instances: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
    pub computed: BTreeMap<String, Value>,
    /// Smallest value of the claim's key quantity over all instances.
    pub min_observed: Option<u64>,
    pub passed: bool,
}

impl VerificationReport {
    pub(crate) fn new(claim: &str, statement: &str) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            statement: statement.to_string(),
            parameters: BTreeMap::new(),
            instances: 0,
            skipped: 0,
            failures: Vec::new(),
            computed: BTreeMap::new(),
            min_observed: None,
            passed: true,
        }
    }

    pub(crate) fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(key.to_string(), to_value(value));
        self
    }

    pub(crate) fn set(&mut self, key: &str, value: impl Serialize) {
        self.computed.insert(key.to_string(), to_value(value));
    }

    pub(crate) fn observe(&mut self, value: usize) {
        let value = value as u64;
        self.min_observed = Some(self.min_observed.map_or(value, |m| m.min(value)));
    }

    pub(crate) fn fail(&mut self, instance: impl Into<String>, reason: impl Into<String>, witness: Value) {
        self.failures.push(Failure { instance: instance.into(), reason: reason.into(), witness });
    }

    pub(crate) fn finish(mut self) -> Self {
        self.passed = self.failures.is_empty();
        self
    }
}

pub(crate) fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("report values serialize")
}
