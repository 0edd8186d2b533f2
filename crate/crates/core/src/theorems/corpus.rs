use crate::error::Result;
use crate::group::{build_group, ingest_permutations, FiniteGroup, GroupSpec};

/// Generators (1-based images) of the Frobenius group of order 21:
/// `x -> x+1` and `x -> 2x` on the integers mod 7.
pub const FROBENIUS_21_GENERATORS: &str = "degree 7\n2 3 4 5 6 7 1\n2 4 6 1 3 5 7\n";

pub fn frobenius_21() -> Result<FiniteGroup> {
    ingest_permutations(FROBENIUS_21_GENERATORS)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Every check and spectrum.
    Full,
    /// Clique number and small decisions only.
    CliqueOnly,
    /// Full checks, but only when explicitly requested (slow).
    Extended,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    /// A group spec, or `F21` for the permutation fixture.
    pub name: String,
    pub scope: Scope,
}

impl CorpusEntry {
    pub fn build(&self) -> Result<FiniteGroup> {
        if self.name == "F21" {
            frobenius_21()
        } else {
            build_group(&GroupSpec::parse(&self.name)?)
        }
    }
}

/// The builtin corpus: cyclic groups up to order 24, dihedral groups of
/// order 6 to 24, the named small groups and products, and the order-21
/// Frobenius group.
pub fn corpus(include_extended: bool) -> Vec<CorpusEntry> {
    let entry = |name: String, scope| CorpusEntry { name, scope };
    let mut out: Vec<CorpusEntry> = (1..=24)
        .map(|n| entry(format!("C:{n}"), Scope::Full))
        .collect();
    out.extend(
        (6..=24)
            .step_by(2)
            .map(|o| entry(format!("D:{o}"), Scope::Full)),
    );
    for name in [
        "Q:8", "Q:16", "S:3", "S:4", "A:4", "A:5", "S:3*S:3", "Q:8*S:3", "F21",
    ] {
        out.push(entry(name.to_string(), Scope::Full));
    }
    out.push(entry("A:5*C:2".to_string(), Scope::CliqueOnly));
    if include_extended {
        out.push(entry("S:5".to_string(), Scope::Extended));
    }
    out
}
