//! Case-by-case records produced by the verification routines.

use std::fmt::Display;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One compared identity: a human-readable case label with the expected and
/// actual values rendered as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub case: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("identity `{case}` failed: expected {expected}, got {actual}")]
pub struct Mismatch {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

/// An ordered list of [`CaseRecord`]s.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verification {
    pub cases: Vec<CaseRecord>,
}

impl Verification {
    pub fn new() -> Self {
        Verification::default()
    }

    /// Records `expected == actual`.
    pub fn compare<T: PartialEq + Display + ?Sized>(
        &mut self,
        case: impl Into<String>,
        expected: &T,
        actual: &T,
    ) -> bool {
        let ok = expected == actual;
        self.cases.push(CaseRecord {
            case: case.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            ok,
        });
        ok
    }

    /// Records a boolean property, rendered as `true`/`false`.
    pub fn holds(&mut self, case: impl Into<String>, ok: bool) -> bool {
        self.compare(case, &true, &ok)
    }

    pub fn push(&mut self, record: CaseRecord) {
        self.cases.push(record);
    }

    pub fn extend(&mut self, other: Verification) {
        self.cases.extend(other.cases);
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.ok)
    }

    pub fn first_failure(&self) -> Option<&CaseRecord> {
        self.cases.iter().find(|c| !c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| !c.ok)
    }

    /// `Err` naming the first failing identity.
    pub fn into_result(self) -> Result<Self, Mismatch> {
        match self.first_failure() {
            Some(c) => Err(Mismatch { case: c.case.clone(), expected: c.expected.clone(), actual: c.actual.clone() }),
            None => Ok(self),
        }
    }
}
