//! Pass/fail report schema shared by the verification registry and the
//! identity checks.

use serde::{Deserialize, Serialize};

/// Status of a single verified claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One verified claim: what was compared and where it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub claim_id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    pub location: String,
}

impl Check {
    pub fn pass(claim_id: &str, location: &str) -> Self {
        Check {
            claim_id: claim_id.to_string(),
            status: Status::Pass,
            lhs: None,
            rhs: None,
            location: location.to_string(),
        }
    }

    pub fn fail(claim_id: &str, location: &str, lhs: String, rhs: String) -> Self {
        Check {
            claim_id: claim_id.to_string(),
            status: Status::Fail,
            lhs: Some(lhs),
            rhs: Some(rhs),
            location: location.to_string(),
        }
    }

    pub fn skipped(claim_id: &str, location: &str, why: String) -> Self {
        Check {
            claim_id: claim_id.to_string(),
            status: Status::Skipped,
            lhs: Some(why),
            rhs: None,
            location: location.to_string(),
        }
    }

    pub fn with_detail(mut self, lhs: String, rhs: String) -> Self {
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self
    }
}

/// An ordered collection of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report { checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}
