//! Counterexample carrier shared by the identity checks.

use serde::Serialize;

/// A failed identity instance: where it failed and both sides, rendered so
/// the report can be re-checked standalone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    pub fn new(
        location: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Self {
        Counterexample {
            location: location.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

impl std::fmt::Display for Counterexample {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {} != {}", self.location, self.lhs, self.rhs)
    }
}

pub type CheckResult = std::result::Result<(), Counterexample>;
