//! Minimum equivalent graphs of unweighted digraphs: the smallest arc subset
//! with the same reachability as the whole graph.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Edge;

/// Unweighted digraph on nodes `1..=n`, no self-loops.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<Edge>,
}

impl Digraph {
    /// Panics on a self-loop or an out-of-range endpoint.
    pub fn new<I: IntoIterator<Item = Edge>>(n: usize, arcs: I) -> Self {
        let arcs: BTreeSet<Edge> = arcs.into_iter().collect();
        for &(i, j) in &arcs {
            assert!(i != j, "self-loop ({i}, {i})");
            assert!((1..=n).contains(&i) && (1..=n).contains(&j), "arc ({i}, {j}) out of range");
        }
        Digraph { n, arcs }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &BTreeSet<Edge> {
        &self.arcs
    }
}

/// Row-major reachability relation, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachMatrix {
    n: usize,
    bits: Vec<bool>,
}

impl ReachMatrix {
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[(i - 1) * self.n + (j - 1)]
    }

    pub fn node_count(&self) -> usize {
        self.n
    }
}

struct Adjacency {
    out: Vec<Vec<usize>>,
}

impl Adjacency {
    fn build<'a, I: IntoIterator<Item = &'a Edge>>(n: usize, arcs: I) -> Self {
        let mut out = vec![Vec::new(); n + 1];
        for &(i, j) in arcs {
            out[i].push(j);
        }
        Adjacency { out }
    }

    fn reaches(&self, from: usize, to: usize, seen: &mut [bool], stack: &mut Vec<usize>) -> bool {
        seen.iter_mut().for_each(|s| *s = false);
        stack.clear();
        stack.push(from);
        seen[from] = true;
        while let Some(u) = stack.pop() {
            if u == to {
                return true;
            }
            for &v in &self.out[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        false
    }
}

/// Every node reaches itself; otherwise `(i, j)` is set iff a walk exists.
pub fn reachability(h: &Digraph) -> ReachMatrix {
    let n = h.n;
    let adj = Adjacency::build(n, &h.arcs);
    let mut bits = vec![false; n * n];
    let mut stack = Vec::new();
    for s in 1..=n {
        let row = &mut bits[(s - 1) * n..s * n];
        row[s - 1] = true;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &v in &adj.out[u] {
                if !row[v - 1] {
                    row[v - 1] = true;
                    stack.push(v);
                }
            }
        }
    }
    ReachMatrix { n, bits }
}

fn removed_arcs_replaceable<'a>(
    n: usize,
    present: impl IntoIterator<Item = &'a Edge>,
    removed: impl IntoIterator<Item = &'a Edge>,
) -> bool {
    let adj = Adjacency::build(n, present);
    let mut seen = vec![false; n + 1];
    let mut stack = Vec::new();
    removed.into_iter().all(|&(i, j)| adj.reaches(i, j, &mut seen, &mut stack))
}

/// Whether keeping only `kept` preserves reachability. It suffices that every
/// dropped arc is replaced by a walk over kept arcs.
pub fn same_reachability(h: &Digraph, kept: &BTreeSet<Edge>) -> Result<bool> {
    if let Some(e) = kept.iter().find(|e| !h.arcs.contains(e)) {
        return Err(Error::NotASubset(*e));
    }
    let removed: Vec<Edge> = h.arcs.difference(kept).copied().collect();
    Ok(removed_arcs_replaceable(h.n, kept, &removed))
}

/// Drops arcs in lexicographic order whenever the rest still connects the
/// arc's endpoints. The result is minimal: no single kept arc is removable.
pub fn meg_greedy(h: &Digraph) -> BTreeSet<Edge> {
    let mut kept = h.arcs.clone();
    let mut seen = vec![false; h.n + 1];
    let mut stack = Vec::new();
    for &arc in &h.arcs {
        kept.remove(&arc);
        let adj = Adjacency::build(h.n, &kept);
        if !adj.reaches(arc.0, arc.1, &mut seen, &mut stack) {
            kept.insert(arc);
        }
    }
    kept
}

struct Search<'a> {
    n: usize,
    arcs: &'a [Edge],
    needs_out: Vec<bool>,
    needs_in: Vec<bool>,
    present: Vec<bool>,
    removed: Vec<Edge>,
    best: Vec<bool>,
    best_len: usize,
}

impl Search<'_> {
    /// Kept arcs so far plus the fewest arcs still needed so that every node
    /// with a successor (resp. predecessor) keeps an out-arc (resp. in-arc).
    fn lower_bound(&self, idx: usize) -> usize {
        let mut has_out = vec![false; self.n + 1];
        let mut has_in = vec![false; self.n + 1];
        for (&(i, j), _) in self.arcs[..idx].iter().zip(&self.present).filter(|(_, p)| **p) {
            has_out[i] = true;
            has_in[j] = true;
        }
        let kept = self.present[..idx].iter().filter(|p| **p).count();
        let missing_out = (1..=self.n).filter(|&v| self.needs_out[v] && !has_out[v]).count();
        let missing_in = (1..=self.n).filter(|&v| self.needs_in[v] && !has_in[v]).count();
        kept + missing_out.max(missing_in)
    }

    fn feasible(&self) -> bool {
        let present = self.arcs.iter().zip(&self.present).filter(|(_, p)| **p).map(|(a, _)| a);
        removed_arcs_replaceable(self.n, present, &self.removed)
    }

    fn run(&mut self, idx: usize) {
        if self.lower_bound(idx) >= self.best_len {
            return;
        }
        if idx == self.arcs.len() {
            // Every removal was checked against a superset of the final arc
            // set when it was made, and the last check saw exactly this set.
            self.best_len = self.present.iter().filter(|p| **p).count();
            self.best = self.present.clone();
            return;
        }
        self.present[idx] = false;
        self.removed.push(self.arcs[idx]);
        if self.feasible() {
            self.run(idx + 1);
        }
        self.removed.pop();
        self.present[idx] = true;
        self.run(idx + 1);
    }
}

/// Exact minimum equivalent graph by branch and bound over arc removals,
/// seeded with the greedy solution. Fails when `h` has more than `limit` arcs.
pub fn meg_exact(h: &Digraph, limit: usize) -> Result<BTreeSet<Edge>> {
    if h.arcs.len() > limit {
        return Err(Error::LimitExceeded { size: h.arcs.len(), limit });
    }
    let arcs: Vec<Edge> = h.arcs.iter().copied().collect();
    let greedy = meg_greedy(h);
    let mut needs_out = vec![false; h.n + 1];
    let mut needs_in = vec![false; h.n + 1];
    for &(i, j) in &arcs {
        needs_out[i] = true;
        needs_in[j] = true;
    }
    let mut search = Search {
        n: h.n,
        arcs: &arcs,
        needs_out,
        needs_in,
        present: vec![true; arcs.len()],
        removed: Vec::new(),
        best: arcs.iter().map(|a| greedy.contains(a)).collect(),
        best_len: greedy.len(),
    };
    search.run(0);
    Ok(arcs.iter().zip(&search.best).filter(|(_, k)| **k).map(|(a, _)| *a).collect())
}
