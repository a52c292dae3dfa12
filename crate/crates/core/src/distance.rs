//! Minimum walk weights and the implication test built on them.

use crate::error::{Error, Result};
use crate::graph::PrecedenceGraph;
use crate::weight::Weight;

/// All-pairs minimum walk weights of a feasible graph.
///
/// Only feasible graphs produce a matrix, so `get(i, i)` is always zero and
/// the triangle inequality holds wherever both sides are finite. Unreachable
/// pairs are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Option<Weight>>,
}

impl DistanceMatrix {
    pub fn node_count(&self) -> usize {
        self.n
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        (i - 1) * self.n + (j - 1)
    }

    /// `d_ij`, or `None` if `j` is unreachable from `i`.
    pub fn get(&self, i: usize, j: usize) -> Option<&Weight> {
        self.d[self.idx(i, j)].as_ref()
    }

    pub fn reachable(&self, i: usize, j: usize) -> bool {
        self.get(i, j).is_some()
    }

    /// `d_ij + d_ji`, when both directions are reachable.
    pub fn round_trip(&self, i: usize, j: usize) -> Option<Weight> {
        Some(self.get(i, j)? + self.get(j, i)?)
    }
}

/// Floyd-Warshall over exact weights. Fails with `InfeasibleSystem` as soon as
/// a diagonal entry turns negative.
pub fn min_walk_weights(g: &PrecedenceGraph) -> Result<DistanceMatrix> {
    let n = g.node_count();
    let mut d: Vec<Option<Weight>> = vec![None; n * n];
    for i in 0..n {
        d[i * n + i] = Some(Weight::zero());
    }
    for ((i, j), c) in g.edges() {
        d[(i - 1) * n + (j - 1)] = Some(c.clone());
    }

    for k in 0..n {
        // Row k is stable during pass k unless d_kk < 0, which aborts below.
        let row_k: Vec<Option<Weight>> = d[k * n..(k + 1) * n].to_vec();
        for i in 0..n {
            let Some(dik) = d[i * n + k].clone() else { continue };
            let row_i = &mut d[i * n..(i + 1) * n];
            for (j, dkj) in row_k.iter().enumerate() {
                let Some(dkj) = dkj else { continue };
                let cand = &dik + dkj;
                match &row_i[j] {
                    Some(cur) if *cur <= cand => {}
                    _ => row_i[j] = Some(cand),
                }
            }
            if row_i[i].as_ref().is_some_and(Weight::is_negative) {
                return Err(Error::InfeasibleSystem { node: i + 1 });
            }
        }
    }
    Ok(DistanceMatrix { n, d })
}

/// Whether the system behind `d` implies `x_u - x_v <= b`.
///
/// True exactly when `v` is reachable from `u` with minimum weight `<= b`.
pub fn implies(d: &DistanceMatrix, u: usize, v: usize, b: &Weight) -> Result<bool> {
    if u == v {
        return Err(Error::SameNode(u));
    }
    for index in [u, v] {
        if index == 0 || index > d.node_count() {
            return Err(Error::IndexOutOfRange { index, n: d.node_count() });
        }
    }
    Ok(d.get(u, v).is_some_and(|duv| duv <= b))
}
