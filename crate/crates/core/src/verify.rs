//! Equivalence of two systems and exhaustive oracles for small instances.

use std::fmt;

use itertools::Itertools;

use crate::distance::min_walk_weights;
use crate::error::{Error, Result};
use crate::graph::{Edge, PrecedenceGraph};
use crate::redundancy::{is_redundant_edge_set, EdgeSet};

/// Default edge limit for [`brute_force_max_redundant`].
pub const BRUTE_FORCE_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The edge belongs to the first system and is not implied by the second.
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub edge: Edge,
    pub side: Side,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (owner, other) = match self.side {
            Side::A => ("first", "second"),
            Side::B => ("second", "first"),
        };
        write!(f, "edge ({}, {}) of the {owner} system is not implied by the {other}", self.edge.0, self.edge.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub equivalent: bool,
    pub witness: Option<Witness>,
}

/// Two feasible systems are equivalent when each implies every constraint
/// of the other. Infeasible inputs are refused.
pub fn systems_equivalent(a: &PrecedenceGraph, b: &PrecedenceGraph) -> Result<EquivalenceReport> {
    if a.node_count() != b.node_count() {
        return Err(Error::NodeCountMismatch(a.node_count(), b.node_count()));
    }
    let da = min_walk_weights(a)?;
    let db = min_walk_weights(b)?;
    let failing = |g: &PrecedenceGraph, other: &crate::distance::DistanceMatrix, side| {
        g.edges()
            .find(|((i, j), c)| !other.get(*i, *j).is_some_and(|d| d <= *c))
            .map(|(edge, _)| Witness { edge, side })
    };
    let witness = failing(a, &db, Side::A).or_else(|| failing(b, &da, Side::B));
    Ok(EquivalenceReport { equivalent: witness.is_none(), witness })
}

/// Largest redundant edge sets by exhaustive search, largest cardinality
/// first. Returns the maximum size and every set of that size.
pub fn brute_force_max_redundant(g: &PrecedenceGraph, limit: usize) -> Result<(usize, Vec<EdgeSet>)> {
    if g.edge_count() > limit {
        return Err(Error::LimitExceeded { size: g.edge_count(), limit });
    }
    min_walk_weights(g)?;
    let edges: Vec<Edge> = g.edge_keys().collect();
    for size in (1..=edges.len()).rev() {
        let mut found = Vec::new();
        for subset in edges.iter().copied().combinations(size) {
            let r: EdgeSet = subset.into_iter().collect();
            if is_redundant_edge_set(g, &r)? {
                found.push(r);
            }
        }
        if !found.is_empty() {
            return Ok((size, found));
        }
    }
    Ok((0, vec![EdgeSet::new()]))
}

/// Every edge that is redundant on its own.
pub fn brute_force_redundant_edges(g: &PrecedenceGraph) -> Result<EdgeSet> {
    min_walk_weights(g)?;
    let mut out = EdgeSet::new();
    for e in g.edge_keys() {
        if is_redundant_edge_set(g, &[e].into_iter().collect())? {
            out.insert(e);
        }
    }
    Ok(out)
}
