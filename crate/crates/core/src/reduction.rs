//! Minimum-size equivalent systems, not restricted to the input's edges.
//!
//! Each class of two or more nodes collapses to one zero-weight cycle through
//! its members, and each class pair keeps a single edge unless the
//! condensation makes it redundant.

use crate::decomposition::{analyze, Analysis, Condensation, Partition, RepresentativePolicy};
use crate::distance::DistanceMatrix;
use crate::error::Result;
use crate::graph::PrecedenceGraph;
use crate::redundancy::EdgeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub reduced: PrecedenceGraph,
    pub partition: Partition,
    /// Input edge count minus reduced edge count.
    pub removed_count: usize,
    /// Redundant condensation edges, in representative ids.
    pub condensation_redundant: EdgeSet,
    /// Edge count of the full condensation.
    pub condensation_edge_count: usize,
}

pub fn equivalent_reduction(g: &PrecedenceGraph) -> Result<ReductionResult> {
    equivalent_reduction_with(g, RepresentativePolicy::Smallest)
}

pub fn equivalent_reduction_with(g: &PrecedenceGraph, policy: RepresentativePolicy) -> Result<ReductionResult> {
    let a = analyze(g, policy)?;
    Ok(reduction_from_analysis(g, &a))
}

pub fn reduction_from_analysis(g: &PrecedenceGraph, a: &Analysis) -> ReductionResult {
    let d = &a.distances;
    let mut reduced = PrecedenceGraph::empty(g.node_count());
    for members in a.partition.classes() {
        if members.len() < 2 {
            continue;
        }
        // Ascending member order; the weights d telescope to zero around the cycle.
        for (q, &u) in members.iter().enumerate() {
            let v = members[(q + 1) % members.len()];
            reduced.set_edge(u, v, d.get(u, v).expect("class members reach each other").clone());
        }
    }
    for (&(ki, kj), pair) in &a.edges.inter {
        let cond_edge = (a.partition.rep(ki), a.partition.rep(kj));
        if a.condensation_redundant.contains(&cond_edge) {
            continue;
        }
        let (u, v) = pair.representing;
        reduced.set_edge(u, v, g.weight(u, v).expect("input edge").clone());
    }
    ReductionResult {
        removed_count: g.edge_count() - reduced.edge_count(),
        reduced,
        partition: a.partition.clone(),
        condensation_redundant: a.condensation_redundant.clone(),
        condensation_edge_count: a.condensation.edges.len(),
    }
}

/// Condensation of a reduced system: one edge per remaining class pair,
/// weighted `d_{v_i u} + c_uv + d_{v v_j}` with distances of the original graph.
pub fn er_condensation(r: &ReductionResult, d: &DistanceMatrix) -> Condensation {
    let p = &r.partition;
    let edges = r
        .reduced
        .edges()
        .filter(|((u, v), _)| !p.same_class(*u, *v))
        .map(|((u, v), c)| {
            let (vi, vj) = (p.rep(p.class_of(u)), p.rep(p.class_of(v)));
            let w = d.get(vi, u).expect("same class") + c + d.get(v, vj).expect("same class");
            ((vi, vj), w)
        })
        .collect();
    Condensation { nodes: p.reps().to_vec(), edges }
}
