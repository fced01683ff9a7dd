use std::fmt;

use serde::Serialize;

/// Outcome of one check. `Evidence` marks a statement about all words that
/// was checked exhaustively up to `bound` only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Evidence(u64),
}

impl Status {
    pub fn is_fail(self) -> bool {
        matches!(self, Status::Fail)
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Evidence(_) => "evidence",
        }
    }

    pub fn bound(self) -> Option<u64> {
        match self {
            Status::Evidence(b) => Some(b),
            _ => None,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Evidence(b) => write!(f, "evidence({b})"),
            s => f.write_str(s.label()),
        }
    }
}

/// A failing report always names a concrete counterexample in `details`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim_id: String,
    pub status: Status,
    pub details: String,
    pub certificate: Option<String>,
}

impl ClaimReport {
    pub fn new(
        claim_id: impl Into<String>,
        status: Status,
        details: impl Into<String>,
    ) -> ClaimReport {
        ClaimReport {
            claim_id: claim_id.into(),
            status,
            details: details.into(),
            certificate: None,
        }
    }

    /// `Pass` when `ok`, else `Fail`; the caller supplies details for both.
    pub fn check(claim_id: impl Into<String>, ok: bool, details: impl Into<String>) -> ClaimReport {
        ClaimReport::new(
            claim_id,
            if ok { Status::Pass } else { Status::Fail },
            details,
        )
    }

    pub fn with_certificate(mut self, cert: impl Into<String>) -> ClaimReport {
        self.certificate = Some(cert.into());
        self
    }
}

impl fmt::Display for ClaimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.status, self.claim_id, self.details)?;
        if let Some(c) = &self.certificate {
            write!(f, " (certificate: {c})")?;
        }
        Ok(())
    }
}

pub fn any_failed(reports: &[ClaimReport]) -> bool {
    reports.iter().any(|r| r.status.is_fail())
}
