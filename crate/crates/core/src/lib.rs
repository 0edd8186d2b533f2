pub mod bitset;
pub mod error;
pub mod group;

pub use error::GroupError;
pub use group::{build_group, ElementSet, FiniteGroup, GroupSpec};
pub mod analysis;
pub mod cli;
pub mod clique;
pub mod ncgraph;
pub mod obstruction;
pub mod theorems;
