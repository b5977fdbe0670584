//! Tree-shaped verification results.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

pub type Witness = BTreeMap<String, String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub witness: Witness,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<VerificationReport>,
}

impl VerificationReport {
    pub fn pass(id: impl Into<String>) -> Self {
        Self { id: id.into(), status: Status::Pass, witness: Witness::new(), note: None, children: Vec::new() }
    }

    pub fn skipped(id: impl Into<String>, note: impl Into<String>) -> Self {
        Self { note: Some(note.into()), status: Status::Skipped, ..Self::pass(id) }
    }

    /// Failing leaf. A failure must say what failed, so an empty witness panics.
    pub fn fail(id: impl Into<String>, witness: Witness) -> Self {
        assert!(!witness.is_empty(), "failing report without witness");
        Self { status: Status::Fail, witness, ..Self::pass(id) }
    }

    /// Pass when `ok`, otherwise fail carrying `witness`.
    pub fn check(id: impl Into<String>, ok: bool, witness: Witness) -> Self {
        if ok {
            Self { witness, ..Self::pass(id) }
        } else {
            Self::fail(id, witness)
        }
    }

    /// Inner node whose status is derived from the children.
    pub fn group(id: impl Into<String>, children: Vec<VerificationReport>) -> Self {
        let status = aggregate(children.iter().map(|c| c.status));
        Self { id: id.into(), status, witness: Witness::new(), note: None, children }
    }

    pub fn with(mut self, key: &str, value: impl Display) -> Self {
        self.witness.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    /// Every leaf, depth first.
    pub fn leaves(&self) -> Vec<&VerificationReport> {
        if self.children.is_empty() {
            return vec![self];
        }
        self.children.iter().flat_map(|c| c.leaves()).collect()
    }

    pub fn find(&self, id: &str) -> Option<&VerificationReport> {
        if self.id == id {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find(id))
    }
}

pub fn aggregate(statuses: impl IntoIterator<Item = Status>) -> Status {
    let mut out = Status::Pass;
    let mut any = false;
    for s in statuses {
        any = true;
        match s {
            Status::Fail => return Status::Fail,
            Status::Skipped => out = Status::Skipped,
            Status::Pass => {}
        }
    }
    if any {
        out
    } else {
        Status::Skipped
    }
}

/// Builds a witness map from `(key, value)` pairs.
#[macro_export]
macro_rules! witness {
    ($($k:expr => $v:expr),* $(,)?) => {{
        #[allow(unused_mut)]
        let mut w = $crate::report::Witness::new();
        $( w.insert($k.to_string(), $v.to_string()); )*
        w
    }};
}

/// Comma-separated decimal rendering for witness values.
pub fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
