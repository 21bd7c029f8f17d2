use std::collections::BTreeMap;
use std::ops::Range;

use super::cost::CostVector;
use super::MosError;

/// Zero-based vertex identifier. Files use one-based ids.
pub type VertexId = u32;

/// A named objective with its fixed-point scale (stored units per real unit).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Objective {
    pub name: String,
    pub scale: u64,
}

impl Objective {
    pub fn new(name: impl Into<String>, scale: u64) -> Self {
        Objective {
            name: name.into(),
            scale,
        }
    }

    /// Objectives `names` with unit scale.
    pub fn unit_scaled(names: &[&str]) -> Vec<Objective> {
        names.iter().map(|n| Objective::new(*n, 1)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge<'a> {
    pub tail: VertexId,
    pub head: VertexId,
    pub cost: &'a [u64],
}

/// Directed multigraph with additive non-negative cost vectors on its edges.
///
/// Edges are kept in canonical order `(tail, head, cost)`, so the
/// out-edges of a vertex occupy a contiguous index range and the first
/// edge between two vertices carries the lexicographically smallest cost.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MosGraph {
    num_vertices: usize,
    objectives: Vec<Objective>,
    metadata: BTreeMap<String, String>,
    tails: Vec<VertexId>,
    heads: Vec<VertexId>,
    costs: Vec<u64>,
    out_offsets: Vec<usize>,
    in_offsets: Vec<usize>,
    in_edges: Vec<u32>,
}

/// Accumulates edges for a [`MosGraph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    num_vertices: usize,
    objectives: Vec<Objective>,
    metadata: BTreeMap<String, String>,
    tails: Vec<VertexId>,
    heads: Vec<VertexId>,
    costs: Vec<u64>,
    bad_edge_dim: Option<usize>,
}

impl GraphBuilder {
    pub fn new(num_vertices: usize, objectives: Vec<Objective>) -> Self {
        GraphBuilder {
            num_vertices,
            objectives,
            metadata: BTreeMap::new(),
            tails: Vec::new(),
            heads: Vec::new(),
            costs: Vec::new(),
            bad_edge_dim: None,
        }
    }

    pub fn with_capacity(mut self, edges: usize) -> Self {
        let d = self.objectives.len();
        self.tails.reserve(edges);
        self.heads.reserve(edges);
        self.costs.reserve(edges * d);
        self
    }

    pub fn dim(&self) -> usize {
        self.objectives.len()
    }

    pub fn num_edges(&self) -> usize {
        self.tails.len()
    }

    pub fn meta(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.metadata.insert(key.into(), value.to_string());
        self
    }

    pub fn add_edge(&mut self, tail: VertexId, head: VertexId, cost: &[u64]) -> &mut Self {
        self.tails.push(tail);
        self.heads.push(head);
        let d = self.objectives.len();
        if cost.len() == d {
            self.costs.extend_from_slice(cost);
        } else {
            // Reported by build(); keep the flat cost array aligned meanwhile.
            self.costs.extend(std::iter::repeat_n(0, d));
            self.bad_edge_dim.get_or_insert(cost.len());
        }
        self
    }

    pub fn build(self) -> Result<MosGraph, MosError> {
        let GraphBuilder {
            num_vertices,
            objectives,
            metadata,
            tails,
            heads,
            costs,
            bad_edge_dim,
        } = self;
        let d = objectives.len();
        if d == 0 {
            return Err(MosError::InvalidGraph("graph needs at least one objective".into()));
        }
        if let Some(found) = bad_edge_dim {
            return Err(MosError::DimensionMismatch { expected: d, found });
        }
        if num_vertices > u32::MAX as usize {
            return Err(MosError::InvalidGraph("too many vertices".into()));
        }
        for (&t, &h) in tails.iter().zip(&heads) {
            for v in [t, h] {
                if v as usize >= num_vertices {
                    return Err(MosError::VertexOutOfRange(v as u64 + 1));
                }
            }
        }
        if objectives.iter().any(|o| o.scale == 0) {
            return Err(MosError::InvalidGraph("objective scale must be positive".into()));
        }

        let m = tails.len();
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&a, &b| {
            (tails[a], heads[a])
                .cmp(&(tails[b], heads[b]))
                .then_with(|| costs[a * d..a * d + d].cmp(&costs[b * d..b * d + d]))
        });
        let mut s_tails = Vec::with_capacity(m);
        let mut s_heads = Vec::with_capacity(m);
        let mut s_costs = Vec::with_capacity(m * d);
        for &e in &order {
            s_tails.push(tails[e]);
            s_heads.push(heads[e]);
            s_costs.extend_from_slice(&costs[e * d..e * d + d]);
        }

        let mut out_offsets = vec![0usize; num_vertices + 1];
        let mut in_offsets = vec![0usize; num_vertices + 1];
        for (&t, &h) in s_tails.iter().zip(&s_heads) {
            out_offsets[t as usize + 1] += 1;
            in_offsets[h as usize + 1] += 1;
        }
        for i in 0..num_vertices {
            out_offsets[i + 1] += out_offsets[i];
            in_offsets[i + 1] += in_offsets[i];
        }
        let mut fill = in_offsets.clone();
        let mut in_edges = vec![0u32; m];
        for (e, &h) in s_heads.iter().enumerate() {
            in_edges[fill[h as usize]] = e as u32;
            fill[h as usize] += 1;
        }

        Ok(MosGraph {
            num_vertices,
            objectives,
            metadata,
            tails: s_tails,
            heads: s_heads,
            costs: s_costs,
            out_offsets,
            in_offsets,
            in_edges,
        })
    }
}

impl MosGraph {
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.tails.len()
    }

    /// Number of objectives `d`.
    pub fn dim(&self) -> usize {
        self.objectives.len()
    }

    pub fn objectives(&self) -> &[Objective] {
        &self.objectives
    }

    pub fn metadata(&self) -> &BTreeMap<String, String> {
        &self.metadata
    }

    pub fn with_metadata(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.metadata.insert(key.into(), value.to_string());
        self
    }

    #[inline]
    pub fn tail(&self, e: usize) -> VertexId {
        self.tails[e]
    }

    #[inline]
    pub fn head(&self, e: usize) -> VertexId {
        self.heads[e]
    }

    #[inline]
    pub fn cost(&self, e: usize) -> &[u64] {
        let d = self.dim();
        &self.costs[e * d..e * d + d]
    }

    pub fn edge(&self, e: usize) -> Edge<'_> {
        Edge {
            tail: self.tails[e],
            head: self.heads[e],
            cost: self.cost(e),
        }
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge<'_>> + '_ {
        (0..self.num_edges()).map(move |e| self.edge(e))
    }

    /// Index range of the out-edges of `u`, ordered by head then cost.
    #[inline]
    pub fn out_edges(&self, u: VertexId) -> Range<usize> {
        self.out_offsets[u as usize]..self.out_offsets[u as usize + 1]
    }

    /// Indices of the in-edges of `v`.
    #[inline]
    pub fn in_edges(&self, v: VertexId) -> &[u32] {
        &self.in_edges[self.in_offsets[v as usize]..self.in_offsets[v as usize + 1]]
    }

    pub fn out_degree(&self, u: VertexId) -> usize {
        self.out_edges(u).len()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_edges(v).len()
    }

    /// Costs of objective `i` over all edges in canonical order.
    pub fn objective_column(&self, i: usize) -> impl Iterator<Item = u64> + '_ {
        let d = self.dim();
        self.costs.iter().skip(i).step_by(d).copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        (v as usize) < self.num_vertices
    }

    /// The lexicographically cheapest edge `u → v`, if any.
    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<usize> {
        if !self.contains(u) {
            return None;
        }
        let range = self.out_edges(u);
        let heads = &self.heads[range.clone()];
        let pos = heads.partition_point(|&h| h < v);
        (pos < heads.len() && heads[pos] == v).then_some(range.start + pos)
    }

    /// All parallel edges `u → v`, cheapest first.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Range<usize> {
        match self.find_edge(u, v) {
            None => 0..0,
            Some(first) => {
                let end = self.out_edges(u).end;
                let mut last = first;
                while last < end && self.heads[last] == v {
                    last += 1;
                }
                first..last
            }
        }
    }

    /// Sum of edge costs along `path`; parallel edges resolve to the
    /// lexicographically smallest cost.
    pub fn path_cost(&self, path: &[VertexId]) -> Result<CostVector, MosError> {
        let first = *path.first().ok_or(MosError::EmptyPath)?;
        if !self.contains(first) {
            return Err(MosError::VertexOutOfRange(first as u64 + 1));
        }
        let mut total = CostVector::zero(self.dim());
        for w in path.windows(2) {
            let e = self.find_edge(w[0], w[1]).ok_or(MosError::NonEdge {
                tail: w[0] as u64 + 1,
                head: w[1] as u64 + 1,
            })?;
            total.add_assign_slice(self.cost(e));
        }
        Ok(total)
    }

    /// Whether some choice among parallel edges along `path` sums to exactly `cost`.
    ///
    /// Equal to `path_cost(path) == cost` on graphs without parallel edges.
    pub fn path_realizes(&self, path: &[VertexId], cost: &[u64]) -> Result<bool, MosError> {
        let d = self.dim();
        if cost.len() != d {
            return Err(MosError::DimensionMismatch {
                expected: d,
                found: cost.len(),
            });
        }
        let first = *path.first().ok_or(MosError::EmptyPath)?;
        if !self.contains(first) {
            return Err(MosError::VertexOutOfRange(first as u64 + 1));
        }
        // Partial sums never exceed the target, which bounds the frontier.
        let mut partial: Vec<Vec<u64>> = vec![vec![0; d]];
        for w in path.windows(2) {
            let range = self.edges_between(w[0], w[1]);
            if range.is_empty() {
                return Err(MosError::NonEdge {
                    tail: w[0] as u64 + 1,
                    head: w[1] as u64 + 1,
                });
            }
            let mut next: Vec<Vec<u64>> = Vec::new();
            for p in &partial {
                for e in range.clone() {
                    let s: Vec<u64> = p.iter().zip(self.cost(e)).map(|(a, b)| a + b).collect();
                    if s.iter().zip(cost).all(|(a, b)| a <= b) {
                        next.push(s);
                    }
                }
            }
            next.sort_unstable();
            next.dedup();
            if next.is_empty() {
                return Ok(false);
            }
            partial = next;
        }
        Ok(partial.iter().any(|p| p == cost))
    }
}

/// A start–goal pair with its ordinal in the query set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Query {
    pub index: usize,
    pub source: VertexId,
    pub target: VertexId,
}

pub type QuerySet = Vec<Query>;

impl Query {
    pub fn new(index: usize, source: VertexId, target: VertexId) -> Self {
        Query {
            index,
            source,
            target,
        }
    }

    pub fn validate(&self, graph: &MosGraph) -> Result<(), MosError> {
        for v in [self.source, self.target] {
            if !graph.contains(v) {
                return Err(MosError::VertexOutOfRange(v as u64 + 1));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_edge() -> MosGraph {
        let mut b = GraphBuilder::new(3, Objective::unit_scaled(&["a", "b"]));
        b.add_edge(0, 1, &[1, 2]).add_edge(1, 2, &[3, 4]);
        b.build().unwrap()
    }

    #[test]
    fn path_cost_examples() {
        let g = two_edge();
        assert_eq!(g.path_cost(&[1]).unwrap(), CostVector::zero(2));
        assert_eq!(g.path_cost(&[0, 1, 2]).unwrap(), CostVector::from(vec![4, 6]));
        assert!(matches!(
            g.path_cost(&[0, 2]),
            Err(MosError::NonEdge { tail: 1, head: 3 })
        ));
        assert!(matches!(g.path_cost(&[]), Err(MosError::EmptyPath)));
    }

    #[test]
    fn parallel_edges_resolve_to_lexmin() {
        let mut b = GraphBuilder::new(2, Objective::unit_scaled(&["a", "b"]));
        b.add_edge(0, 1, &[5, 1]).add_edge(0, 1, &[1, 5]).add_edge(0, 1, &[3, 3]);
        let g = b.build().unwrap();
        assert_eq!(g.path_cost(&[0, 1]).unwrap(), CostVector::from(vec![1, 5]));
        assert_eq!(g.edges_between(0, 1).len(), 3);
        assert!(g.path_realizes(&[0, 1], &[5, 1]).unwrap());
        assert!(!g.path_realizes(&[0, 1], &[2, 2]).unwrap());
    }

    #[test]
    fn build_validates() {
        let mut b = GraphBuilder::new(2, Objective::unit_scaled(&["a", "b"]));
        b.add_edge(0, 2, &[1, 1]);
        assert!(matches!(b.build(), Err(MosError::VertexOutOfRange(3))));
        let mut b = GraphBuilder::new(2, Objective::unit_scaled(&["a", "b"]));
        b.add_edge(0, 1, &[1, 1, 1]);
        assert!(matches!(
            b.build(),
            Err(MosError::DimensionMismatch { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn adjacency_is_canonical() {
        let mut b = GraphBuilder::new(3, Objective::unit_scaled(&["a"]));
        b.add_edge(2, 0, &[1]).add_edge(0, 2, &[4]).add_edge(0, 1, &[9]).add_edge(1, 0, &[2]);
        let g = b.build().unwrap();
        let heads: Vec<_> = g.out_edges(0).map(|e| g.head(e)).collect();
        assert_eq!(heads, vec![1, 2]);
        let tails: Vec<_> = g.in_edges(0).iter().map(|&e| g.tail(e as usize)).collect();
        assert_eq!(tails, vec![1, 2]);
        assert_eq!(g.objective_column(0).collect::<Vec<_>>(), vec![9, 4, 2, 1]);
    }
}
