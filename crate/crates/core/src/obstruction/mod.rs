//! Deciding `T(m,n)`: does every choice of `m` subsets of size `n` contain a
//! commuting pair drawn from two different subsets?
//!
//! An `(m,n)`-obstruction is a family of `m` such subsets with no commuting
//! cross pair. Its parts are automatically disjoint (an element commutes with
//! itself) and avoid the center. The main engine ([`find_obstruction`])
//! searches over twin classes; [`brute_force_is_tmn`] and [`packing_oracle`]
//! are independent checks of it.

mod brute;
mod certificate;
mod packing;
mod search;
mod spectrum;

pub use brute::{brute_force_is_tmn, brute_force_is_tmn_with, BruteLimits};
pub use certificate::{verify_certificate, CertViolation};
pub use packing::{packing_oracle, Packing};
pub use search::find_obstruction;
pub use spectrum::{spectrum, tmn_from_spectrum, SpectrumRow};

use std::time::Duration;

use serde::{Serialize, Serializer};

use crate::analysis::Analysis;
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;

/// `m` parts of `n` element indices each; parts sorted internally and
/// ordered by least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ObstructionCert {
    pub parts: Vec<Vec<usize>>,
}

impl ObstructionCert {
    pub fn new(parts: Vec<Vec<usize>>) -> Self {
        ObstructionCert { parts }
    }

    /// Sorts each part and orders parts by their least element.
    pub fn canonical(mut parts: Vec<Vec<usize>>) -> Self {
        for p in &mut parts {
            p.sort_unstable();
        }
        parts.sort();
        ObstructionCert { parts }
    }

    pub fn m(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.parts.first().map_or(0, Vec::len)
    }

    /// The certificate with part `i` removed.
    pub fn drop_part(&self, i: usize) -> ObstructionCert {
        let mut parts = self.parts.clone();
        parts.remove(i);
        ObstructionCert { parts }
    }

    /// The certificate with the last element of every part removed.
    pub fn shrink_parts(&self) -> ObstructionCert {
        let parts = self
            .parts
            .iter()
            .map(|p| p[..p.len().saturating_sub(1)].to_vec())
            .collect();
        ObstructionCert { parts }
    }

    /// One element per part (the least); pairwise non-commuting by construction.
    pub fn transversal(&self) -> Vec<usize> {
        self.parts
            .iter()
            .filter_map(|p| p.first().copied())
            .collect()
    }

    pub fn labelled(&self, group: &FiniteGroup) -> Vec<Vec<LabelledElement>> {
        self.parts
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&x| LabelledElement {
                        index: x,
                        label: group.label(x).to_string(),
                    })
                    .collect()
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelledElement {
    pub index: usize,
    pub label: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            node_limit: 10_000_000,
            time_limit: Duration::from_secs(60),
        }
    }
}

impl SearchBudget {
    pub fn with_nodes(node_limit: u64) -> Self {
        SearchBudget {
            node_limit,
            ..SearchBudget::default()
        }
    }
}

/// Result of a bounded obstruction search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(ObstructionCert),
    /// Exhaustive search proved no obstruction exists.
    None,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    IsTmn,
    NotTmn,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::IsTmn => "IS_TMN",
            Status::NotTmn => "NOT_TMN",
            Status::Unknown => "UNKNOWN",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub status: Status,
    pub certificate: Option<ObstructionCert>,
    pub nodes: u64,
}

impl Decision {
    /// `Some(true)` for `IS_TMN`, `Some(false)` for `NOT_TMN`.
    pub fn holds(&self) -> Option<bool> {
        match self.status {
            Status::IsTmn => Some(true),
            Status::NotTmn => Some(false),
            Status::Unknown => None,
        }
    }
}

pub(crate) fn check_params(m: usize, n: usize) -> Result<()> {
    if m < 2 || n < 1 {
        return Err(GroupError::Parameter(format!(
            "need m >= 2 and n >= 1, got m = {m}, n = {n}"
        )));
    }
    Ok(())
}

/// Decides whether the group is `T(m,n)`; `NOT_TMN` carries a verified certificate.
pub fn is_tmn(analysis: &Analysis, m: usize, n: usize, budget: &SearchBudget) -> Result<Decision> {
    let res = find_obstruction(analysis, m, n, budget)?;
    Ok(match res.outcome {
        SearchOutcome::Found(cert) => {
            if let Err(v) = verify_certificate(analysis.group(), &cert, m, n) {
                return Err(GroupError::Invariant(format!(
                    "search produced an invalid certificate: {v}"
                )));
            }
            Decision {
                status: Status::NotTmn,
                certificate: Some(cert),
                nodes: res.nodes,
            }
        }
        SearchOutcome::None => Decision {
            status: Status::IsTmn,
            certificate: None,
            nodes: res.nodes,
        },
        SearchOutcome::BudgetExceeded => Decision {
            status: Status::Unknown,
            certificate: None,
            nodes: res.nodes,
        },
    })
}
