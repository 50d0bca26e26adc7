use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// Result of one quantified check over a family of instances.
///
/// `instances` counts every evaluated instance; `vacuous` counts those whose
/// hypothesis was false. `witness` is present exactly when `status` is
/// `Fail`. `skipped` counts instances left out by a cap, and `reason`
/// explains a `Skipped` status.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub algebra: String,
    pub status: Status,
    pub instances: u64,
    pub vacuous: u64,
    pub skipped: u64,
    pub witness: Option<Value>,
    pub reason: Option<String>,
}

impl CheckReport {
    pub fn skipped(check: &str, algebra: &str, reason: impl Into<String>) -> Self {
        CheckReport {
            check: check.to_string(),
            algebra: algebra.to_string(),
            status: Status::Skipped,
            instances: 0,
            vacuous: 0,
            skipped: 0,
            witness: None,
            reason: Some(reason.into()),
        }
    }

    /// Instances whose hypothesis held.
    pub fn effective(&self) -> u64 {
        self.instances - self.vacuous
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json_line(line: &str) -> crate::Result<Self> {
        serde_json::from_str(line).map_err(|e| crate::Error::Parse(e.to_string()))
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<7} {:<44} {} instances={} vacuous={}",
            self.status, self.check, self.algebra, self.instances, self.vacuous
        )?;
        if self.skipped > 0 {
            write!(f, " skipped={}", self.skipped)?;
        }
        if let Some(reason) = &self.reason {
            write!(f, " ({reason})")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n        witness: {w}")?;
        }
        Ok(())
    }
}
