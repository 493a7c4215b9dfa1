//! Deterministic check reports shared by all subsystems and the CLI.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// A single named check with an optional failure witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(id: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: CheckStatus::Pass,
            witness: None,
        }
    }

    pub fn fail(id: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: CheckStatus::Fail,
            witness: Some(witness.into()),
        }
    }

    pub fn skipped(id: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: CheckStatus::Skipped,
            witness: None,
        }
    }

    pub fn of(id: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Check::pass(id)
        } else {
            Check::fail(id, witness())
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

/// An ordered list of checks. Witness ordering is fixed by construction so
/// reports are deterministic for a given input and seed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
    /// Seed used by any sampled checks in this report.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn with_seed(seed: u64) -> Self {
        Report {
            checks: Vec::new(),
            seed: Some(seed),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn passed(&self, id: &str) -> bool {
        self.get(id).is_some_and(Check::passed)
    }

    pub fn merge(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.id = format!("{prefix}.{}", c.id);
            self.checks.push(c);
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}
