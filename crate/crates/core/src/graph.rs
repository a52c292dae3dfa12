//! Precedence graphs: one node per variable, one weighted edge `(i, j)` per
//! constraint `x_i - x_j <= c_ij`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::weight::Weight;

/// An ordered node pair `(from, to)`, 1-based.
pub type Edge = (usize, usize);

/// A weighted digraph on nodes `1..=n` without self-loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrecedenceGraph {
    n: usize,
    edges: BTreeMap<Edge, Weight>,
}

/// Something `normalize` accepted but changed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalizeWarning {
    /// `x_i - x_i <= c` with `c >= 0` holds for every assignment.
    DroppedSelfLoop { node: usize, weight: Weight },
    /// Parallel constraints were merged into the tightest one.
    MergedParallel { edge: Edge, kept: Weight },
}

impl fmt::Display for NormalizeWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalizeWarning::DroppedSelfLoop { node, weight } => {
                write!(f, "dropped trivially satisfied self-loop ({node}, {node}) with weight {weight}")
            }
            NormalizeWarning::MergedParallel { edge, kept } => {
                write!(f, "merged parallel edges ({}, {}) keeping weight {kept}", edge.0, edge.1)
            }
        }
    }
}

/// Builds a graph from raw constraint triples.
///
/// Parallel entries collapse to their minimum weight and nonnegative
/// self-loops are dropped; both are reported back as warnings.
pub fn normalize<I>(n: usize, raw_edges: I) -> Result<(PrecedenceGraph, Vec<NormalizeWarning>)>
where
    I: IntoIterator<Item = (usize, usize, Weight)>,
{
    let mut edges: BTreeMap<Edge, Weight> = BTreeMap::new();
    let mut warnings = Vec::new();
    let mut merged = Vec::new();
    for (i, j, c) in raw_edges {
        for index in [i, j] {
            if index == 0 || index > n {
                return Err(Error::IndexOutOfRange { index, n });
            }
        }
        if i == j {
            if c.is_negative() {
                return Err(Error::NegativeSelfLoop { node: i });
            }
            warnings.push(NormalizeWarning::DroppedSelfLoop { node: i, weight: c });
            continue;
        }
        match edges.get_mut(&(i, j)) {
            Some(existing) => {
                if c < *existing {
                    *existing = c;
                }
                merged.push((i, j));
            }
            None => {
                edges.insert((i, j), c);
            }
        }
    }
    merged.sort_unstable();
    merged.dedup();
    warnings
        .extend(merged.into_iter().map(|edge| NormalizeWarning::MergedParallel { edge, kept: edges[&edge].clone() }));
    Ok((PrecedenceGraph { n, edges }, warnings))
}

impl PrecedenceGraph {
    pub fn empty(n: usize) -> Self {
        PrecedenceGraph { n, edges: BTreeMap::new() }
    }

    /// Convenience constructor over [`normalize`] that discards the warnings.
    pub fn from_edges<W: Into<Weight> + Clone>(n: usize, edges: &[(usize, usize, W)]) -> Result<Self> {
        normalize(n, edges.iter().map(|(i, j, c)| (*i, *j, c.clone().into()))).map(|(g, _)| g)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    /// Edges in ascending `(from, to)` order.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, &Weight)> + '_ {
        self.edges.iter().map(|(e, c)| (*e, c))
    }

    pub fn edge_keys(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.keys().copied()
    }

    pub fn weight(&self, from: usize, to: usize) -> Option<&Weight> {
        self.edges.get(&(from, to))
    }

    pub fn contains_edge(&self, edge: Edge) -> bool {
        self.edges.contains_key(&edge)
    }

    pub fn out_edges(&self, from: usize) -> impl Iterator<Item = (usize, &Weight)> + '_ {
        self.edges.range((from, 0)..=(from, usize::MAX)).map(|(&(_, to), c)| (to, c))
    }

    /// Inserts or overwrites an edge. Panics on a self-loop or an out-of-range node.
    pub fn set_edge(&mut self, from: usize, to: usize, weight: Weight) {
        assert!(from != to, "self-loop ({from}, {from})");
        assert!((1..=self.n).contains(&from) && (1..=self.n).contains(&to), "node out of range");
        self.edges.insert((from, to), weight);
    }

    pub fn remove_edge(&mut self, edge: Edge) -> Option<Weight> {
        self.edges.remove(&edge)
    }

    /// The subgraph with `removed` deleted; edges not in the graph are ignored.
    pub fn without_edges<'a, I>(&self, removed: I) -> Self
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut g = self.clone();
        for e in removed {
            g.edges.remove(e);
        }
        g
    }
}

/// A node sequence `(i_0, ..., i_m)`; `m = 0` is the degenerate path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk(pub Vec<usize>);

impl Walk {
    pub fn new(nodes: Vec<usize>) -> Self {
        Walk(nodes)
    }

    pub fn nodes(&self) -> &[usize] {
        &self.0
    }

    pub fn edge_count(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|p| (p[0], p[1]))
    }

    pub fn is_closed(&self) -> bool {
        self.0.len() >= 2 && self.0.first() == self.0.last()
    }

    /// No node repeats.
    pub fn is_path(&self) -> bool {
        let mut seen = self.0.clone();
        seen.sort_unstable();
        seen.windows(2).all(|p| p[0] != p[1])
    }

    /// Closed, and no node repeats apart from the shared endpoint.
    pub fn is_cycle(&self) -> bool {
        self.is_closed() && Walk(self.0[..self.0.len() - 1].to_vec()).is_path()
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

fn check_walk(g: &PrecedenceGraph, w: &Walk) -> Result<()> {
    let first = *w.0.first().ok_or(Error::EmptyWalk)?;
    if first == 0 || first > g.node_count() {
        return Err(Error::IndexOutOfRange { index: first, n: g.node_count() });
    }
    match w.edges().find(|e| !g.contains_edge(*e)) {
        Some((i, j)) => Err(Error::NotAWalk(i, j)),
        None => Ok(()),
    }
}

/// Sum of traversed edge weights, with multiplicity.
pub fn walk_weight(g: &PrecedenceGraph, w: &Walk) -> Result<Weight> {
    check_walk(g, w)?;
    Ok(w.edges().map(|(i, j)| g.edges[&(i, j)].clone()).sum())
}

/// A walk split into a simple path between its endpoints plus cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkDecomposition {
    pub path: Walk,
    pub cycles: Vec<Walk>,
}

/// One left-to-right pass cutting out closed sub-walks.
///
/// At each position the closed sub-walk up to the next occurrence of the same
/// node is removed, repeatedly, so the remainder is a simple path. Returns the
/// remainder and the removed closed walks (which may still contain repeats).
fn scan(mut w: Vec<usize>) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut closed = Vec::new();
    let mut k = 0;
    while k + 1 < w.len() {
        match (k + 1..w.len()).find(|&r| w[r] == w[k]) {
            Some(r) => {
                closed.push(w[k..=r].to_vec());
                w.drain(k + 1..=r);
            }
            None => k += 1,
        }
    }
    (w, closed)
}

/// Splits a closed walk into simple cycles.
fn split_closed(c: Vec<usize>, out: &mut Vec<Walk>) {
    let last = c.len() - 1;
    // Scan the walk minus its closing edge; the path it leaves plus that
    // edge is a cycle.
    let (mut path, nested) = scan(c[..last].to_vec());
    path.push(c[last]);
    out.push(Walk(path));
    for inner in nested {
        split_closed(inner, out);
    }
}

/// Decomposes a walk into a simple path from its first to its last node and
/// a list of cycles, conserving total weight and the edge multiset.
pub fn decompose_walk(g: &PrecedenceGraph, w: &Walk) -> Result<WalkDecomposition> {
    check_walk(g, w)?;
    let (path, closed) = scan(w.0.clone());
    let mut cycles = Vec::new();
    for c in closed {
        split_closed(c, &mut cycles);
    }
    Ok(WalkDecomposition { path: Walk(path), cycles })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn normalize_merges_parallel_edges() {
        let (g, warnings) = normalize(2, [(1, 2, Weight::from(5)), (1, 2, Weight::from(3))]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.weight(1, 2), Some(&Weight::from(3)));
        assert_eq!(warnings.len(), 1);
    }

    #[test]
    fn normalize_drops_nonnegative_self_loop() {
        let (g, warnings) = normalize(2, [(1, 1, Weight::from(0)), (1, 2, Weight::from(1))]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![((1, 2), &Weight::from(1))]);
        assert!(matches!(warnings[..], [NormalizeWarning::DroppedSelfLoop { node: 1, .. }]));
    }

    #[test]
    fn normalize_rejects_bad_input() {
        assert_eq!(normalize(1, [(1, 1, Weight::from(-1))]).unwrap_err(), Error::NegativeSelfLoop { node: 1 });
        assert_eq!(normalize(2, [(1, 3, Weight::from(0))]).unwrap_err(), Error::IndexOutOfRange { index: 3, n: 2 });
        assert!(normalize(2, [(0, 1, Weight::from(0))]).is_err());
    }

    #[test]
    fn walk_weights_on_fig3() {
        let g = fixtures::g_fig3();
        assert_eq!(walk_weight(&g, &Walk(vec![3, 4, 2, 5, 3])).unwrap(), Weight::zero());
        assert_eq!(walk_weight(&g, &Walk(vec![2])).unwrap(), Weight::zero());
        assert_eq!(walk_weight(&g, &Walk(vec![1, 2, 5])).unwrap(), Weight::zero());
        assert_eq!(walk_weight(&g, &Walk(vec![1, 3])).unwrap_err(), Error::NotAWalk(1, 3));
        assert_eq!(walk_weight(&g, &Walk(vec![])).unwrap_err(), Error::EmptyWalk);
    }

    #[test]
    fn decompose_examples() {
        let g = fixtures::g_fig3();
        let d = decompose_walk(&g, &Walk(vec![1, 2, 5, 3, 1, 2])).unwrap();
        assert_eq!(d.path, Walk(vec![1, 2]));
        assert_eq!(d.cycles, vec![Walk(vec![1, 2, 5, 3, 1])]);

        let d = decompose_walk(&g, &Walk(vec![1, 2])).unwrap();
        assert_eq!(d.path, Walk(vec![1, 2]));
        assert!(d.cycles.is_empty());

        let d = decompose_walk(&g, &Walk(vec![2, 5, 3, 4, 2])).unwrap();
        assert_eq!(d.path, Walk(vec![2]));
        assert_eq!(d.cycles, vec![Walk(vec![2, 5, 3, 4, 2])]);
    }

    #[test]
    fn decompose_handles_repeated_start_node() {
        // 2 appears three times; a single pass with the first repeat only
        // would leave (2,5,3,2,...) non-simple.
        let g = fixtures::g_fig3();
        let w = Walk(vec![2, 5, 3, 2, 5, 3, 4, 2, 5]);
        let d = decompose_walk(&g, &w).unwrap();
        assert_eq!(d.path, Walk(vec![2, 5]));
        assert!(d.cycles.iter().all(Walk::is_cycle));
        let total: Weight = std::iter::once(&d.path).chain(&d.cycles).map(|p| walk_weight(&g, p).unwrap()).sum();
        assert_eq!(total, walk_weight(&g, &w).unwrap());
    }

    #[test]
    fn nested_closed_walk_splits_into_cycles() {
        // Closed at 1 with the detour 2 -> 5 -> 3 -> 2 inside.
        let g = fixtures::g_fig3();
        let w = Walk(vec![1, 2, 5, 3, 2, 5, 3, 1]);
        let d = decompose_walk(&g, &w).unwrap();
        assert_eq!(d.path, Walk(vec![1]));
        assert_eq!(d.cycles, vec![Walk(vec![1, 2, 5, 3, 1]), Walk(vec![2, 5, 3, 2])]);
    }
}
