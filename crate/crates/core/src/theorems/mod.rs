//! Named claims about `T(m,n)`-groups, evaluated on concrete groups.
//!
//! [`run_paper_checks`] applies the general statements (C1 to C20) to one
//! group; [`verify_paper_corpus`] evaluates the fixed table of claims about
//! named groups and runs the general checks across the corpus.

mod checks;
mod claims;
mod corpus;

pub use checks::{run_paper_checks, run_paper_checks_with};
pub use claims::{
    claims_table, quaternion_s3_certificate, verify_paper_corpus, CheckReport, Claim, ClaimKind,
    GroupSpectrum, SpectrumEntry,
};
pub use corpus::{corpus, frobenius_21, CorpusEntry, Scope, FROBENIUS_21_GENERATORS};

use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The instance does not meet the claim's hypotheses.
    Skip,
    /// A claim known to be contested; computation agrees with it.
    DisputedAgree,
    DisputedDisagree,
    /// A decision the check needed ran out of budget.
    Unknown,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skip => "SKIP",
            CheckStatus::DisputedAgree => "DISPUTED-AGREE",
            CheckStatus::DisputedDisagree => "DISPUTED-DISAGREE",
            CheckStatus::Unknown => "UNKNOWN",
        }
    }

    pub(crate) fn from_bool(ok: bool) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CheckStatus {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check_id: String,
    pub group: String,
    pub status: CheckStatus,
    pub details: String,
}

impl CheckOutcome {
    pub fn new(
        check_id: impl Into<String>,
        group: impl Into<String>,
        status: CheckStatus,
        details: impl Into<String>,
    ) -> Self {
        CheckOutcome {
            check_id: check_id.into(),
            group: group.into(),
            status,
            details: details.into(),
        }
    }
}
