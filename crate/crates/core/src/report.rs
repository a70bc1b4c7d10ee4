//! Named pass/fail entries shared by verification reports.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), status: if ok { Status::Pass } else { Status::Fail }, detail: detail.into() }
    }

    pub fn indeterminate(name: &str, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), status: Status::Indeterminate, detail: detail.into() }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Worst status of a list: any fail wins, then indeterminate.
pub fn overall(checks: &[Check]) -> Status {
    if checks.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else if checks.iter().any(|c| c.status == Status::Indeterminate) {
        Status::Indeterminate
    } else {
        Status::Pass
    }
}
