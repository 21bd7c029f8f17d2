use crate::mos::{GraphBuilder, MosGraph, Objective, VertexId};

use super::rng::{SplitMix64, TAG_COSTS, TAG_STRUCTURE};
use super::GenError;

/// Cost intervals for Hamiltonian-cycle edges: one value from each, in a
/// per-edge random assignment to the three objectives.
pub const CYCLE_COST_BANDS: [(u64, u64); 3] = [(1, 333), (334, 666), (667, 1000)];
/// Cost interval for locality edges, sampled independently per objective.
pub const LOCAL_COST_BAND: (u64, u64) = (1, 99);

/// Parameters of a NetMaker graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetMakerSpec {
    pub num_vertices: usize,
    pub min_out_degree: usize,
    pub max_out_degree: usize,
    pub window: usize,
    pub seed: u64,
}

impl NetMakerSpec {
    pub fn new(num_vertices: usize, window: usize, seed: u64) -> Self {
        NetMakerSpec {
            num_vertices,
            min_out_degree: 1,
            max_out_degree: 10,
            window,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.num_vertices < 2 {
            return Err(GenError::InvalidSpec("netmaker needs at least two vertices".into()));
        }
        if self.num_vertices > u32::MAX as usize {
            return Err(GenError::InvalidSpec("too many vertices".into()));
        }
        if self.min_out_degree < 1 || self.min_out_degree > self.max_out_degree {
            return Err(GenError::InvalidSpec("need 1 <= a_min <= a_max".into()));
        }
        if self.window < 1 {
            return Err(GenError::InvalidSpec("locality window must be positive".into()));
        }
        Ok(())
    }

    /// The one-based id interval `W(u)` for one-based `u`.
    pub fn window_of(&self, u: usize) -> (usize, usize) {
        let half = self.window / 2;
        (u.saturating_sub(half).max(1), (u + half).min(self.num_vertices))
    }
}

#[derive(Clone, Debug)]
pub struct NetMaker {
    pub graph: MosGraph,
    /// Vertices whose sampled out-degree exceeded the available window.
    pub truncated: Vec<VertexId>,
}

/// True for cost vectors that can only come from a Hamiltonian-cycle edge.
pub fn is_cycle_cost(cost: &[u64]) -> bool {
    cost.iter().any(|&c| c > LOCAL_COST_BAND.1)
}

/// Builds a NetMaker graph.
///
/// Structure stream: a Fisher–Yates permutation σ of the vertices, then for
/// each vertex `u` in id order an out-degree target from
/// `[a_min+1, a_max]` (exactly `a_max` when the two coincide) and a partial
/// shuffle of the candidate heads in `W(u)` (ascending, minus `u` and its
/// cycle successor) whose prefix gives the `target - 1` locality edges.
///
/// Cost stream, cycle edges first in σ order and then locality edges in
/// construction order: a cycle edge shuffles the band indices `[0,1,2]` and
/// draws one value per objective from its band; a locality edge draws three
/// values from `[1,99]`.
pub fn generate_netmaker(spec: &NetMakerSpec) -> Result<NetMaker, GenError> {
    spec.validate()?;
    let n = spec.num_vertices;
    let mut structure = SplitMix64::substream(spec.seed, TAG_STRUCTURE);

    // one-based vertex labels, as in the construction's id-space locality
    let mut sigma: Vec<usize> = (1..=n).collect();
    structure.shuffle(&mut sigma);
    let mut successor = vec![0usize; n + 1];
    let mut cycle_edges = Vec::with_capacity(n);
    for i in 0..n {
        let u = sigma[i];
        let v = sigma[(i + 1) % n];
        successor[u] = v;
        cycle_edges.push((u, v));
    }

    let mut local_edges = Vec::with_capacity(n * spec.max_out_degree);
    let mut truncated = Vec::new();
    let mut candidates = Vec::with_capacity(spec.window + 1);
    for (u, &succ) in successor.iter().enumerate().skip(1) {
        let target = if spec.min_out_degree >= spec.max_out_degree {
            spec.max_out_degree
        } else {
            structure.range_inclusive(spec.min_out_degree as u64 + 1, spec.max_out_degree as u64)
                as usize
        };
        let wanted = target - 1;
        let (lo, hi) = spec.window_of(u);
        candidates.clear();
        candidates.extend((lo..=hi).filter(|&w| w != u && w != succ));
        if wanted > candidates.len() {
            truncated.push((u - 1) as VertexId);
        }
        let take = wanted.min(candidates.len());
        structure.partial_shuffle(&mut candidates, take);
        local_edges.extend(candidates[..take].iter().map(|&w| (u, w)));
    }

    let mut costs = SplitMix64::substream(spec.seed, TAG_COSTS);
    let mut b = GraphBuilder::new(n, Objective::unit_scaled(&["obj1", "obj2", "obj3"]))
        .with_capacity(cycle_edges.len() + local_edges.len());
    let mut cost = [0u64; 3];
    for &(u, v) in &cycle_edges {
        let mut bands = [0usize, 1, 2];
        costs.shuffle(&mut bands);
        for (c, &band) in cost.iter_mut().zip(&bands) {
            let (lo, hi) = CYCLE_COST_BANDS[band];
            *c = costs.range_inclusive(lo, hi);
        }
        b.add_edge((u - 1) as VertexId, (v - 1) as VertexId, &cost);
    }
    for &(u, w) in &local_edges {
        for c in cost.iter_mut() {
            *c = costs.range_inclusive(LOCAL_COST_BAND.0, LOCAL_COST_BAND.1);
        }
        b.add_edge((u - 1) as VertexId, (w - 1) as VertexId, &cost);
    }

    b.meta("family", "netmaker")
        .meta("n", n)
        .meta("a_min", spec.min_out_degree)
        .meta("a_max", spec.max_out_degree)
        .meta("window", spec.window)
        .meta("seed", spec.seed)
        .meta("cycle_edges", cycle_edges.len())
        .meta("local_edges", local_edges.len());
    if !truncated.is_empty() {
        b.meta("truncated_vertices", truncated.len());
    }
    Ok(NetMaker {
        graph: b.build()?,
        truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_clamps_to_id_range() {
        let s = NetMakerSpec::new(20, 4, 0);
        assert_eq!(s.window_of(1), (1, 3));
        assert_eq!(s.window_of(10), (8, 12));
        assert_eq!(s.window_of(20), (18, 20));
        let s = NetMakerSpec::new(20, 5, 0);
        assert_eq!(s.window_of(10), (8, 12));
    }

    #[test]
    fn small_window_truncates() {
        let mut s = NetMakerSpec::new(50, 1, 3);
        s.max_out_degree = 4;
        let nm = generate_netmaker(&s).unwrap();
        // window of width one has no candidate other than u itself
        assert_eq!(nm.truncated.len(), 50);
        assert_eq!(nm.graph.num_edges(), 50);
    }

    #[test]
    fn degenerate_degree_bounds() {
        let mut s = NetMakerSpec::new(30, 6, 9);
        s.min_out_degree = 1;
        s.max_out_degree = 1;
        let nm = generate_netmaker(&s).unwrap();
        assert_eq!(nm.graph.num_edges(), 30);
        assert!(generate_netmaker(&NetMakerSpec::new(1, 4, 0)).is_err());
    }
}
