use std::sync::OnceLock;

use crate::clique::{clique_number, CliqueResult};
use crate::error::Result;
use crate::group::{build_group, FiniteGroup, GroupSpec};
use crate::ncgraph::{build_nc_graph, twin_partition, NCGraph, TwinPartition};

/// A group bundled with its non-commuting graph, twin partition and a lazily
/// computed clique number. Every search entry point takes one of these.
#[derive(Debug)]
pub struct Analysis {
    group: FiniteGroup,
    graph: NCGraph,
    twins: TwinPartition,
    clique: OnceLock<CliqueResult>,
}

impl Analysis {
    pub fn new(group: FiniteGroup) -> Result<Self> {
        let graph = build_nc_graph(&group);
        let twins = twin_partition(&graph, &group)?;
        Ok(Analysis {
            group,
            graph,
            twins,
            clique: OnceLock::new(),
        })
    }

    pub fn from_spec(spec: &str) -> Result<Self> {
        Analysis::new(build_group(&GroupSpec::parse(spec)?)?)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn graph(&self) -> &NCGraph {
        &self.graph
    }

    pub fn twins(&self) -> &TwinPartition {
        &self.twins
    }

    pub fn clique(&self) -> &CliqueResult {
        self.clique.get_or_init(|| clique_number(&self.twins))
    }

    /// Clique number `w(G)`.
    pub fn w(&self) -> usize {
        self.clique().w
    }

    pub fn center_order(&self) -> usize {
        self.graph.center().len()
    }

    pub fn noncentral_elements(&self) -> &[usize] {
        self.graph.vertices()
    }

    /// `|G| − |Z(G)|`.
    pub fn noncentral(&self) -> usize {
        self.twins.noncentral_count()
    }
}
