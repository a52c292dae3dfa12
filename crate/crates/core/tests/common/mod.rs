//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use precsys::{has_zero_weight_cycle, min_walk_weights, Edge, PrecedenceGraph, Weight};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn all_pairs(n: usize) -> Vec<Edge> {
    (1..=n).flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j))).collect()
}

/// Up to `max_m` distinct edges on `n` nodes with integer weights in `lo..=hi`.
pub fn uniform_graph(rng: &mut ChaCha8Rng, n: usize, max_m: usize, lo: i64, hi: i64) -> PrecedenceGraph {
    let mut pairs = all_pairs(n);
    pairs.shuffle(rng);
    let m = rng.gen_range(1..=max_m.min(pairs.len()));
    let mut g = PrecedenceGraph::empty(n);
    for &(i, j) in &pairs[..m] {
        g.set_edge(i, j, Weight::from(rng.gen_range(lo..=hi)));
    }
    g
}

/// Feasible by construction: `c_ij = p_j - p_i + slack` with slack mostly 0,
/// so zero-weight cycles are common.
pub fn potential_graph(rng: &mut ChaCha8Rng, n: usize, max_m: usize) -> PrecedenceGraph {
    let m = rng.gen_range(1..=max_m.min(n * (n - 1)));
    potential_graph_exact(rng, n, m)
}

/// As [`potential_graph`] with exactly `m` edges.
pub fn potential_graph_exact(rng: &mut ChaCha8Rng, n: usize, m: usize) -> PrecedenceGraph {
    let p: Vec<i64> = (0..=n).map(|_| rng.gen_range(-3..=3)).collect();
    let mut pairs = all_pairs(n);
    pairs.shuffle(rng);
    let mut g = PrecedenceGraph::empty(n);
    for &(i, j) in &pairs[..m] {
        let slack = [0, 0, 0, 1, 2][rng.gen_range(0..5)];
        g.set_edge(i, j, Weight::from(p[j] - p[i] + slack));
    }
    g
}

pub fn is_feasible(g: &PrecedenceGraph) -> bool {
    min_walk_weights(g).is_ok()
}

/// Rejection-sampled feasible graphs whose cycles are all strictly positive.
pub fn positive_cycle_suite(seed: u64, count: usize) -> Vec<PrecedenceGraph> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = r.gen_range(2..=5);
        let g = uniform_graph(&mut r, n, 10, -2, 3);
        if let Ok(d) = min_walk_weights(&g) {
            if !has_zero_weight_cycle(&d) {
                out.push(g);
            }
        }
    }
    out
}

/// Feasible graphs with zero-weight cycles permitted: half uniform
/// rejection-sampled, half built from node potentials.
pub fn general_suite(seed: u64, count: usize) -> Vec<PrecedenceGraph> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = r.gen_range(2..=5);
        let g = if out.len() % 2 == 0 { uniform_graph(&mut r, n, 10, -2, 3) } else { potential_graph(&mut r, n, 10) };
        if is_feasible(&g) {
            out.push(g);
        }
    }
    out
}

/// Minimum weight over all simple paths `u ~> v` by DFS enumeration.
pub fn min_simple_path(g: &PrecedenceGraph, u: usize, v: usize) -> Option<Weight> {
    fn dfs(
        g: &PrecedenceGraph,
        at: usize,
        target: usize,
        acc: Weight,
        seen: &mut Vec<bool>,
        best: &mut Option<Weight>,
    ) {
        if at == target {
            if best.as_ref().is_none_or(|b| acc < *b) {
                *best = Some(acc);
            }
            return;
        }
        for (next, c) in g.out_edges(at) {
            if !seen[next] {
                seen[next] = true;
                dfs(g, next, target, &acc + c, seen, best);
                seen[next] = false;
            }
        }
    }
    if u == v {
        return Some(Weight::zero());
    }
    let mut seen = vec![false; g.node_count() + 1];
    seen[u] = true;
    let mut best = None;
    dfs(g, u, v, Weight::zero(), &mut seen, &mut best);
    best
}

/// Reachability closure by repeated squaring-free propagation.
pub fn closure(n: usize, arcs: &BTreeSet<Edge>) -> Vec<Vec<bool>> {
    let mut r = vec![vec![false; n + 1]; n + 1];
    for i in 1..=n {
        r[i][i] = true;
    }
    for &(i, j) in arcs {
        r[i][j] = true;
    }
    for k in 1..=n {
        for i in 1..=n {
            if r[i][k] {
                for j in 1..=n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

/// Size of a smallest arc subset with the same reachability, by enumeration.
pub fn brute_force_meg_size(n: usize, arcs: &BTreeSet<Edge>) -> usize {
    let all: Vec<Edge> = arcs.iter().copied().collect();
    let target = closure(n, arcs);
    (0u32..1 << all.len())
        .filter_map(|mask| {
            let sub: BTreeSet<Edge> =
                all.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, a)| *a).collect();
            (closure(n, &sub) == target).then_some(sub.len())
        })
        .min()
        .unwrap()
}

/// Transitive reduction of a DAG: keep `(i, j)` unless some other
/// successor `k` of `i` reaches `j`.
pub fn dag_transitive_reduction(n: usize, arcs: &BTreeSet<Edge>) -> BTreeSet<Edge> {
    let r = closure(n, arcs);
    arcs.iter().copied().filter(|&(i, j)| !arcs.iter().any(|&(a, k)| a == i && k != j && r[k][j])).collect()
}

/// Random DAG on a random topological order.
pub fn random_dag(rng: &mut ChaCha8Rng, n: usize, density: f64) -> BTreeSet<Edge> {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut arcs = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                arcs.insert((order[a], order[b]));
            }
        }
    }
    arcs
}

pub fn zero_weight_graph(n: usize, arcs: &BTreeSet<Edge>) -> PrecedenceGraph {
    let mut g = PrecedenceGraph::empty(n);
    for &(i, j) in arcs {
        g.set_edge(i, j, Weight::zero());
    }
    g
}

pub fn edge_set(g: &PrecedenceGraph) -> BTreeSet<Edge> {
    g.edge_keys().collect()
}
