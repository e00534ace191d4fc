//! Exact fixed-parameter solvers for multi-budgeted directed cut problems.
//!
//! Edges of a [`graph::ColoredDigraph`] carry sets of colors, and a solution
//! may delete at most `k_i` edges of color `i`. The crate decides
//! multi-budgeted cut, skew edge multicut and directed feedback arc set,
//! enumerates multi-budgeted important separators, and ships brute-force
//! oracles, reduction gadgets and detectors for the maze/flower/bowtie
//! structures that appear in the closest-to-sink solution families.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod flow;
pub mod format;
pub mod generate;
pub mod graph;
pub mod important;
pub mod instance;
pub mod oracle;
pub mod reductions;
pub mod skew;
pub mod solver;

pub use error::{Error, Result};
pub use flow::{max_flow_z, FlowCertificate, FlowOutcome};
pub use format::{parse_instance, write_instance};
pub use graph::{
    budget_usage, is_minimal_cut, reachable, Budgets, ColorSet, ColoredDigraph, CutClass, CutSet, EdgeId, EdgeSet,
    GraphBuilder, Vertex, VertexSet,
};
pub use important::{enumerate_candidates, filter_important, CutFamily};
pub use instance::{ChainInstance, CutInstance, DfasInstance, Instance, SkewInstance, WeightedCutInstance};
pub use solver::{solve_mbcut, solve_mbcut_with, SolveStats, SolverOptions};
