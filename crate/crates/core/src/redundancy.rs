//! Redundant edges and redundant edge sets.
//!
//! A set `R` of edges is redundant when every `(u, v)` in it still has a
//! replacement walk in `E \ R` of weight at most `c_uv`; removing it leaves the
//! solution set unchanged. When every cycle has positive weight the maximum
//! such set is unique and equals the set of individually redundant edges.

use std::collections::BTreeSet;
use std::fmt;

use crate::distance::{min_walk_weights, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{Edge, PrecedenceGraph};
use crate::weight::Weight;

/// An ordered set of edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(pub BTreeSet<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.contains(e)
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        self.0.insert(e)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.0.iter()
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.union(&other.0).copied().collect())
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<T: IntoIterator<Item = Edge>>(iter: T) -> Self {
        EdgeSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a Edge;
    type IntoIter = std::collections::btree_set::Iter<'a, Edge>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, j)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "}}")
    }
}

/// Whether some closed walk of weight zero passes through two distinct nodes.
pub fn has_zero_weight_cycle(d: &DistanceMatrix) -> bool {
    let n = d.node_count();
    (1..=n).any(|i| (i + 1..=n).any(|j| d.round_trip(i, j).is_some_and(|w| w.is_zero())))
}

/// `min { c_ik + d_kj : (i,k) in E, k != j }`, the cheapest detour that
/// leaves `i` through another edge. `None` if no such detour reaches `j`.
pub fn detour_bound(g: &PrecedenceGraph, d: &DistanceMatrix, (i, j): Edge) -> Option<Weight> {
    g.out_edges(i).filter(|&(k, _)| k != j).filter_map(|(k, c_ik)| d.get(k, j).map(|d_kj| c_ik + d_kj)).min()
}

/// All redundant edges of a graph without zero-weight cycles.
///
/// Rejects graphs with a zero-weight cycle: there the detour may run back
/// through the edge itself and the test accepts edges that are not redundant.
pub fn find_redundant_edges(g: &PrecedenceGraph, d: &DistanceMatrix) -> Result<EdgeSet> {
    if has_zero_weight_cycle(d) {
        return Err(Error::ZeroWeightCycle);
    }
    Ok(g.edges().filter(|&(e, c)| detour_bound(g, d, e).is_some_and(|b| b <= *c)).map(|(e, _)| e).collect())
}

/// Checks the redundant-edge-set definition directly by recomputing
/// distances on `g \ r`.
pub fn is_redundant_edge_set(g: &PrecedenceGraph, r: &EdgeSet) -> Result<bool> {
    if let Some(e) = r.iter().find(|e| !g.contains_edge(**e)) {
        return Err(Error::NotASubset(*e));
    }
    if r.is_empty() {
        return Ok(true);
    }
    let rest = min_walk_weights(&g.without_edges(r))?;
    Ok(r.iter().all(|&(u, v)| {
        let c = g.weight(u, v).expect("checked above");
        rest.get(u, v).is_some_and(|d| d <= c)
    }))
}

/// The unique maximum redundant edge set of a graph whose cycles are all
/// strictly positive.
pub fn mres_no_zero_cycles(g: &PrecedenceGraph) -> Result<EdgeSet> {
    let d = min_walk_weights(g)?;
    find_redundant_edges(g, &d)
}
