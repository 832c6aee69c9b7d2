//! Claim-by-claim verification reports.
//!
//! Every check in the crate ends up as a [`Claim`]: an identifier, the
//! mathematical statement it verifies, a status and a short witness. The CLI
//! prints reports as text or JSON and derives its exit status from them.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Computed result disagrees with a stated claim in a way that is
    /// reported rather than treated as a failure.
    Flagged,
    /// The statement does not apply to these parameters; the witness records
    /// what was computed instead.
    Info,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Flagged => "FLAGGED",
            Status::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    /// The statement being checked, e.g. `"|E^-1_4| = 2^5"`.
    pub anchor: String,
    pub status: Status,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub case: String,
    pub claims: Vec<Claim>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<serde_json::Value>,
}

impl Report {
    pub fn new(case: impl Into<String>) -> Self {
        Report { case: case.into(), claims: Vec::new(), summary: None }
    }

    pub fn push(&mut self, id: impl Into<String>, anchor: impl Into<String>, status: Status, witness: impl Into<String>) {
        self.claims.push(Claim { id: id.into(), anchor: anchor.into(), status, witness: witness.into() });
    }

    /// Adds a pass/fail claim.
    pub fn check(&mut self, id: impl Into<String>, anchor: impl Into<String>, ok: bool, witness: impl Into<String>) {
        self.push(id, anchor, Status::from_bool(ok), witness);
    }

    /// Appends the claims of `other`, prefixing their ids with `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.claims {
            c.id = format!("{prefix}/{}", c.id);
            self.claims.push(c);
        }
    }

    pub fn with_summary(mut self, summary: serde_json::Value) -> Self {
        self.summary = Some(summary);
        self
    }

    /// True when no claim failed. Flagged and informational claims do not
    /// count as failures.
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn status_of(&self, id: &str) -> Option<Status> {
        self.claims.iter().find(|c| c.id == id).map(|c| c.status)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {}", self.case)?;
        for c in &self.claims {
            writeln!(f, "[{}] {}: {}", c.status, c.id, c.anchor)?;
            if !c.witness.is_empty() {
                writeln!(f, "        {}", c.witness)?;
            }
        }
        let failed = self.failures().count();
        write!(f, "{} claims, {} failed", self.claims.len(), failed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_fail_and_flags() {
        let mut r = Report::new("demo");
        r.check("a", "1 = 1", true, "");
        r.push("b", "kernel is trivial", Status::Flagged, "found -e1 e3");
        assert!(r.passed());
        r.check("c", "1 = 2", false, "no");
        assert!(!r.passed());
        assert_eq!(r.failures().map(|c| c.id.as_str()).collect::<Vec<_>>(), ["c"]);
        assert_eq!(r.status_of("b"), Some(Status::Flagged));
    }

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("demo");
        r.check("a", "x", true, "w");
        let r = r.with_summary(serde_json::json!({"order": 8}));
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"status\":\"pass\""));
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn absorb_prefixes_ids() {
        let mut inner = Report::new("inner");
        inner.check("x", "", true, "");
        let mut outer = Report::new("outer");
        outer.absorb("sub", inner);
        assert_eq!(outer.claims[0].id, "sub/x");
    }
}
