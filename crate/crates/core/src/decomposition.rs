//! Zero-cycle equivalence classes, the induced edge partition, the weighted
//! condensation, and assembly of a maximum redundant edge set from the
//! per-class and between-class subproblems.
//!
//! Nodes `i != j` are equivalent when a zero-weight closed walk passes through
//! both, which happens exactly when `d_ij + d_ji = 0`. Inside a class every
//! edge is either strictly looser than the class distance (always removable)
//! or tight; between two classes only edges attaining the minimum
//! `d_{v_i s} + c_st + d_{t v_j}` can carry the pair, and one of them is the
//! designated representing edge.

use std::collections::{BTreeMap, BTreeSet};

use crate::distance::{min_walk_weights, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{Edge, PrecedenceGraph};
use crate::meg::{meg_exact, meg_greedy, Digraph};
use crate::redundancy::{mres_no_zero_cycles, EdgeSet};
use crate::weight::Weight;

/// Which member of a class stands for it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RepresentativePolicy {
    #[default]
    Smallest,
    Largest,
}

/// Equivalence classes ordered by their smallest member, independent of the
/// representative policy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
    reps: Vec<usize>,
    class_of: Vec<usize>,
}

impl Partition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Sorted members of class `k` (0-based).
    pub fn members(&self, k: usize) -> &[usize] {
        &self.classes[k]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn rep(&self, k: usize) -> usize {
        self.reps[k]
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    /// Class index of a 1-based node.
    pub fn class_of(&self, node: usize) -> usize {
        self.class_of[node]
    }

    pub fn same_class(&self, i: usize, j: usize) -> bool {
        self.class_of[i] == self.class_of[j]
    }
}

/// Connected components of the relation `d_ij + d_ji = 0`.
pub fn equivalence_classes(d: &DistanceMatrix) -> Partition {
    equivalence_classes_with(d, RepresentativePolicy::Smallest)
}

#[allow(clippy::needless_range_loop)]
pub fn equivalence_classes_with(d: &DistanceMatrix, policy: RepresentativePolicy) -> Partition {
    let n = d.node_count();
    let mut class_of = vec![usize::MAX; n + 1];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 1..=n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let k = classes.len();
        let mut members = vec![start];
        class_of[start] = k;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 1..=n {
                if class_of[j] == usize::MAX && d.round_trip(i, j).is_some_and(|w| w.is_zero()) {
                    class_of[j] = k;
                    members.push(j);
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    let reps = classes
        .iter()
        .map(|c| match policy {
            RepresentativePolicy::Smallest => c[0],
            RepresentativePolicy::Largest => *c.last().expect("classes are nonempty"),
        })
        .collect();
    Partition { classes, reps, class_of }
}

/// Edges with both endpoints in one class.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassEdges {
    /// Every intra-class edge.
    pub all: BTreeSet<Edge>,
    /// `c_ij > d_ij`: always removable.
    pub loose: BTreeSet<Edge>,
    /// `c_ij = d_ij`.
    pub tight: BTreeSet<Edge>,
}

/// Edges from one class to another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairEdges {
    pub all: BTreeSet<Edge>,
    /// Minimizers of `d_{v_i s} + c_st + d_{t v_j}`; any of them may carry the pair.
    pub tight: BTreeSet<Edge>,
    /// Lexicographically smallest member of `tight`.
    pub representing: Edge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    /// Indexed by class.
    pub intra: Vec<ClassEdges>,
    /// Keyed by `(from_class, to_class)`; only nonempty pairs are present.
    pub inter: BTreeMap<(usize, usize), PairEdges>,
}

impl EdgePartition {
    /// All inter-class edges.
    pub fn inter_edges(&self) -> BTreeSet<Edge> {
        self.inter.values().flat_map(|p| p.all.iter().copied()).collect()
    }

    /// Union of the per-pair minimizer sets.
    pub fn inter_tight_edges(&self) -> BTreeSet<Edge> {
        self.inter.values().flat_map(|p| p.tight.iter().copied()).collect()
    }

    pub fn representing_edges(&self) -> BTreeSet<Edge> {
        self.inter.values().map(|p| p.representing).collect()
    }

    pub fn loose_total(&self) -> usize {
        self.intra.iter().map(|c| c.loose.len()).sum()
    }
}

fn d_or_panic(d: &DistanceMatrix, i: usize, j: usize) -> &Weight {
    d.get(i, j).expect("nodes of one class reach each other")
}

pub fn partition_edges(g: &PrecedenceGraph, d: &DistanceMatrix, p: &Partition) -> EdgePartition {
    let mut intra = vec![ClassEdges::default(); p.class_count()];
    let mut candidates: BTreeMap<(usize, usize), Vec<(Edge, Weight)>> = BTreeMap::new();
    for ((s, t), c) in g.edges() {
        let (ks, kt) = (p.class_of(s), p.class_of(t));
        if ks == kt {
            let class = &mut intra[ks];
            class.all.insert((s, t));
            if c > d_or_panic(d, s, t) {
                class.loose.insert((s, t));
            } else {
                class.tight.insert((s, t));
            }
        } else {
            let value = d_or_panic(d, p.rep(ks), s) + c + d_or_panic(d, t, p.rep(kt));
            candidates.entry((ks, kt)).or_default().push(((s, t), value));
        }
    }
    let inter = candidates
        .into_iter()
        .map(|(pair, edges)| {
            let best = edges.iter().map(|(_, v)| v).min().expect("nonempty").clone();
            let tight: BTreeSet<Edge> = edges.iter().filter(|(_, v)| *v == best).map(|(e, _)| *e).collect();
            let representing = *tight.iter().next().expect("nonempty");
            let all = edges.into_iter().map(|(e, _)| e).collect();
            (pair, PairEdges { all, tight, representing })
        })
        .collect();
    EdgePartition { intra, inter }
}

/// Weighted digraph over class representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condensation {
    /// Representatives in class order.
    pub nodes: Vec<usize>,
    /// Keyed by representative pairs.
    pub edges: BTreeMap<Edge, Weight>,
}

impl Condensation {
    /// The same graph relabelled onto class indices `1..=K`.
    pub fn to_graph(&self, p: &Partition) -> PrecedenceGraph {
        let mut g = PrecedenceGraph::empty(self.nodes.len());
        for (&(u, v), c) in &self.edges {
            g.set_edge(p.class_of(u) + 1, p.class_of(v) + 1, c.clone());
        }
        g
    }

    pub fn without_edges(&self, removed: &EdgeSet) -> Condensation {
        Condensation {
            nodes: self.nodes.clone(),
            edges: self.edges.iter().filter(|(e, _)| !removed.contains(e)).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }
}

/// Edge `(v_i, v_j)` for every nonempty class pair, weighted
/// `d_{v_i u} + c_uv + d_{v v_j}` at the representing edge `(u, v)`.
pub fn condensation(g: &PrecedenceGraph, d: &DistanceMatrix, p: &Partition, ep: &EdgePartition) -> Condensation {
    let edges = ep
        .inter
        .iter()
        .map(|(&(ki, kj), pair)| {
            let (u, v) = pair.representing;
            let (vi, vj) = (p.rep(ki), p.rep(kj));
            let c = g.weight(u, v).expect("representing edge is an input edge");
            ((vi, vj), d_or_panic(d, vi, u) + c + d_or_panic(d, v, vj))
        })
        .collect();
    Condensation { nodes: p.reps().to_vec(), edges }
}

/// Everything derived from the class structure of a feasible graph.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub distances: DistanceMatrix,
    pub partition: Partition,
    pub edges: EdgePartition,
    pub condensation: Condensation,
    /// Maximum redundant edge set of the condensation, in representative ids.
    pub condensation_redundant: EdgeSet,
}

pub fn analyze(g: &PrecedenceGraph, policy: RepresentativePolicy) -> Result<Analysis> {
    let distances = min_walk_weights(g)?;
    let partition = equivalence_classes_with(&distances, policy);
    let edges = partition_edges(g, &distances, &partition);
    let condensation = condensation(g, &distances, &partition, &edges);
    let reps = partition.reps();
    // All condensation cycles are strictly positive, so the polynomial
    // criterion applies.
    let condensation_redundant = mres_no_zero_cycles(&condensation.to_graph(&partition))?
        .iter()
        .map(|&(a, b)| (reps[a - 1], reps[b - 1]))
        .collect();
    Ok(Analysis { distances, partition, edges, condensation, condensation_redundant })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest tight intra-class arc count solved exactly.
    pub exact_limit: usize,
    /// Fall back to the greedy solver above `exact_limit` instead of failing.
    pub allow_heuristic: bool,
    pub representative: RepresentativePolicy,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { exact_limit: 20, allow_heuristic: true, representative: RepresentativePolicy::Smallest }
    }
}

/// A redundant edge set and whether its maximality is certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxRedundantSet {
    pub edges: EdgeSet,
    /// False when some class was solved greedily; the set is then maximal
    /// but possibly not maximum.
    pub certified: bool,
}

/// Tight arcs of one class to keep, solved as an unweighted minimum
/// equivalent graph on the class members.
fn kept_tight_arcs(members: &[usize], tight: &BTreeSet<Edge>, cfg: &SolverConfig) -> Result<(BTreeSet<Edge>, bool)> {
    if tight.is_empty() {
        return Ok((BTreeSet::new(), true));
    }
    let local = |v: usize| members.binary_search(&v).expect("member of class") + 1;
    let h = Digraph::new(members.len(), tight.iter().map(|&(s, t)| (local(s), local(t))));
    let (kept, certified) = if tight.len() <= cfg.exact_limit {
        (meg_exact(&h, cfg.exact_limit)?, true)
    } else if cfg.allow_heuristic {
        (meg_greedy(&h), false)
    } else {
        return Err(Error::ExactLimitExceeded { arcs: tight.len(), limit: cfg.exact_limit });
    };
    Ok((kept.into_iter().map(|(a, b)| (members[a - 1], members[b - 1])).collect(), certified))
}

/// A maximum redundant edge set of any feasible graph.
///
/// Inside each class: every loose edge, plus the tight edges outside a
/// minimum equivalent graph of the tight subgraph. Between classes: all of
/// `E_ij` when the condensation edge is redundant there, otherwise all but the
/// representing edge.
pub fn max_redundant_edge_set(g: &PrecedenceGraph, cfg: &SolverConfig) -> Result<MaxRedundantSet> {
    let a = analyze(g, cfg.representative)?;
    max_redundant_from_analysis(&a, cfg)
}

pub fn max_redundant_from_analysis(a: &Analysis, cfg: &SolverConfig) -> Result<MaxRedundantSet> {
    let mut edges = EdgeSet::new();
    let mut certified = true;
    for (k, class) in a.edges.intra.iter().enumerate() {
        edges.0.extend(class.loose.iter().copied());
        let (kept, exact) = kept_tight_arcs(a.partition.members(k), &class.tight, cfg)?;
        certified &= exact;
        edges.0.extend(class.tight.difference(&kept).copied());
    }
    for (&(ki, kj), pair) in &a.edges.inter {
        let cond_edge = (a.partition.rep(ki), a.partition.rep(kj));
        if a.condensation_redundant.contains(&cond_edge) {
            edges.0.extend(pair.all.iter().copied());
        } else {
            edges.0.extend(pair.all.iter().copied().filter(|e| *e != pair.representing));
        }
    }
    Ok(MaxRedundantSet { edges, certified })
}
