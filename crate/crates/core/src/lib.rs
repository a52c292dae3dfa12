//! Simplification of precedence relation systems: sets of difference
//! constraints `x_i - x_j <= c_ij`, viewed as weighted digraphs.
//!
//! Two problems are covered:
//!
//! * removing a maximum set of redundant constraints while keeping the rest
//!   of the input unchanged ([`max_redundant_edge_set`]);
//! * building a minimum-size equivalent system that may use new constraints
//!   ([`equivalent_reduction`]).
//!
//! Both rest on the exact all-pairs minimum walk weights of the graph and on
//! the partition of nodes into classes joined by zero-weight closed walks.

pub mod cli;
pub mod decomposition;
pub mod distance;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod meg;
pub mod reduction;
pub mod redundancy;
pub mod verify;
pub mod weight;

pub use decomposition::{
    analyze, condensation, equivalence_classes, equivalence_classes_with, max_redundant_edge_set, partition_edges,
    Analysis, Condensation, EdgePartition, MaxRedundantSet, Partition, RepresentativePolicy, SolverConfig,
};
pub use distance::{implies, min_walk_weights, DistanceMatrix};
pub use error::{Error, Result};
pub use graph::{decompose_walk, normalize, walk_weight, Edge, PrecedenceGraph, Walk, WalkDecomposition};
pub use meg::{meg_exact, meg_greedy, reachability, same_reachability, Digraph};
pub use reduction::{equivalent_reduction, equivalent_reduction_with, er_condensation, ReductionResult};
pub use redundancy::{
    find_redundant_edges, has_zero_weight_cycle, is_redundant_edge_set, mres_no_zero_cycles, EdgeSet,
};
pub use verify::{brute_force_max_redundant, brute_force_redundant_edges, systems_equivalent, EquivalenceReport};
pub use weight::Weight;
