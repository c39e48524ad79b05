use serde::Serialize;

use crate::error::Result;
use crate::graded::{GradedMap, MapWitness};

/// Outcome of one exact identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub identity: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<MapWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CheckResult {
    /// Compares two maps exactly; shape errors become failing entries.
    pub fn compare(identity: impl Into<String>, level: Option<usize>, lhs: Result<GradedMap>, rhs: Result<GradedMap>) -> Self {
        let identity = identity.into();
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                let witness = l.witness_difference(&r);
                CheckResult {
                    identity,
                    level,
                    pass: witness.is_none(),
                    witness,
                    error: None,
                }
            }
            (Err(e), _) | (_, Err(e)) => CheckResult {
                identity,
                level,
                pass: false,
                witness: None,
                error: Some(e.to_string()),
            },
        }
    }

    pub fn flag(identity: impl Into<String>, level: Option<usize>, pass: bool) -> Self {
        CheckResult {
            identity: identity.into(),
            level,
            pass,
            witness: None,
            error: None,
        }
    }
}

pub fn all_pass(checks: &[CheckResult]) -> bool {
    checks.iter().all(|c| c.pass)
}

pub fn first_failure(checks: &[CheckResult]) -> Option<&CheckResult> {
    checks.iter().find(|c| !c.pass)
}
