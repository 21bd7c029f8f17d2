use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::mos::{MosGraph, VertexId};

use super::SolveError;

/// Distance marker for vertices that cannot reach the target.
pub const UNREACHABLE: u64 = u64::MAX;

/// Exact single-objective distances from every vertex to `target`
/// (Dijkstra over reversed edges).
pub fn dijkstra_bound(
    graph: &MosGraph,
    target: VertexId,
    objective: usize,
) -> Result<Vec<u64>, SolveError> {
    if !graph.contains(target) {
        return Err(SolveError::TargetOutOfRange(target as u64 + 1));
    }
    if objective >= graph.dim() {
        return Err(SolveError::ObjectiveOutOfRange(objective));
    }
    let mut dist = vec![UNREACHABLE; graph.num_vertices()];
    let mut heap = BinaryHeap::new();
    dist[target as usize] = 0;
    heap.push(Reverse((0u64, target)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if d > dist[v as usize] {
            continue;
        }
        for &e in graph.in_edges(v) {
            let e = e as usize;
            let u = graph.tail(e);
            let nd = d + graph.cost(e)[objective];
            if nd < dist[u as usize] {
                dist[u as usize] = nd;
                heap.push(Reverse((nd, u)));
            }
        }
    }
    Ok(dist)
}

/// Componentwise lower bounds on the cost from each vertex to a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeuristicTable {
    target: VertexId,
    dim: usize,
    values: Vec<u64>,
}

impl HeuristicTable {
    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Lower-bound vector at `v`, or `None` if `v` cannot reach the target.
    #[inline]
    pub fn get(&self, v: VertexId) -> Option<&[u64]> {
        let row = &self.values[v as usize * self.dim..(v as usize + 1) * self.dim];
        (row[0] != UNREACHABLE).then_some(row)
    }
}

/// The ideal-point heuristic: one backward Dijkstra per objective.
pub fn ideal_point_heuristic(graph: &MosGraph, target: VertexId) -> Result<HeuristicTable, SolveError> {
    let d = graph.dim();
    let mut values = vec![0u64; graph.num_vertices() * d];
    for i in 0..d {
        let col = dijkstra_bound(graph, target, i)?;
        for (v, x) in col.into_iter().enumerate() {
            values[v * d + i] = x;
        }
    }
    Ok(HeuristicTable {
        target,
        dim: d,
        values,
    })
}
