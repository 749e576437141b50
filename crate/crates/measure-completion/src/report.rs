//! Structured per-check records, shared by the verification routines and
//! the command-line harness. Measured values are serialized as exact
//! rational strings; nothing is ever printed in floating point.

use serde::Serialize;

use crate::rational::Rational;

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub anchor: String,
    pub values: Vec<String>,
    pub radius: String,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(
        name: impl Into<String>,
        anchor: impl Into<String>,
        values: &[Rational],
        radius: &Rational,
        pass: bool,
    ) -> Self {
        CheckRecord {
            name: name.into(),
            anchor: anchor.into(),
            values: values.iter().map(Rational::to_string).collect(),
            radius: radius.to_string(),
            pass,
        }
    }

    /// Records a check that could not run; the cause goes to diagnostics,
    /// not into the report body.
    pub fn errored(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            anchor: anchor.into(),
            values: Vec::new(),
            radius: Rational::zero().to_string(),
            pass: false,
        }
    }
}

/// `true` when every record passed.
pub fn all_pass(records: &[CheckRecord]) -> bool {
    records.iter().all(|r| r.pass)
}
