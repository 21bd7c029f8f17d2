use crate::mos::{GraphBuilder, MosGraph, Objective, Query, VertexId};

use super::rng::{SplitMix64, TAG_COSTS};
use super::GenError;

/// Parameters of a random-cost four-connected grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub width: usize,
    pub height: usize,
    pub num_objectives: usize,
    pub cost_low: u64,
    pub cost_high: u64,
    pub seed: u64,
}

impl GridSpec {
    pub fn new(width: usize, height: usize, num_objectives: usize, seed: u64) -> Self {
        GridSpec {
            width,
            height,
            num_objectives,
            cost_low: 1,
            cost_high: 10,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.width == 0 || self.height == 0 {
            return Err(GenError::InvalidSpec("grid width and height must be positive".into()));
        }
        if self.num_objectives < 2 {
            return Err(GenError::InvalidSpec("grid needs at least two objectives".into()));
        }
        if self.cost_low > self.cost_high {
            return Err(GenError::InvalidSpec("cost_low exceeds cost_high".into()));
        }
        if (self.width * self.height + 2) > u32::MAX as usize {
            return Err(GenError::InvalidSpec("grid too large".into()));
        }
        Ok(())
    }

    pub fn cell(&self, x: usize, y: usize) -> VertexId {
        (y * self.width + x) as VertexId
    }

    pub fn source(&self) -> VertexId {
        (self.width * self.height) as VertexId
    }

    pub fn target(&self) -> VertexId {
        self.source() + 1
    }
}

const STEPS: [(isize, isize); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

/// Builds the grid and its single query from the auxiliary source to the
/// auxiliary target.
///
/// Cells are numbered row-major; the auxiliary source and target follow.
/// Every directed grid edge draws its own `d` costs, visiting cells
/// row-major and neighbours in the order right, left, down, up. Auxiliary
/// edges cost zero.
pub fn generate_grid(spec: &GridSpec) -> Result<(MosGraph, Query), GenError> {
    spec.validate()?;
    let (k, m, d) = (spec.width, spec.height, spec.num_objectives);
    let names: Vec<String> = (1..=d).map(|i| format!("c{i}")).collect();
    let objectives = names.iter().map(|n| Objective::new(n.as_str(), 1)).collect();
    let mut b = GraphBuilder::new(k * m + 2, objectives).with_capacity(4 * k * m + 2 * m);
    let mut rng = SplitMix64::substream(spec.seed, TAG_COSTS);
    let mut cost = vec![0u64; d];

    for y in 0..m {
        for x in 0..k {
            let u = spec.cell(x, y);
            for (dx, dy) in STEPS {
                let nx = x as isize + dx;
                let ny = y as isize + dy;
                if nx < 0 || ny < 0 || nx as usize >= k || ny as usize >= m {
                    continue;
                }
                for c in cost.iter_mut() {
                    *c = rng.range_inclusive(spec.cost_low, spec.cost_high);
                }
                b.add_edge(u, spec.cell(nx as usize, ny as usize), &cost);
            }
        }
    }
    let zero = vec![0u64; d];
    for y in 0..m {
        b.add_edge(spec.source(), spec.cell(0, y), &zero);
        b.add_edge(spec.cell(k - 1, y), spec.target(), &zero);
    }

    b.meta("family", "grid")
        .meta("width", k)
        .meta("height", m)
        .meta("seed", spec.seed)
        .meta("cost_range", format!("{}-{}", spec.cost_low, spec.cost_high))
        .meta("edge_costs", "independent-per-direction")
        .meta("auxiliary_edges", "zero-cost");
    let graph = b.build()?;
    Ok((graph, Query::new(0, spec.source(), spec.target())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_counts() {
        let (g, q) = generate_grid(&GridSpec::new(3, 2, 2, 1)).unwrap();
        assert_eq!(g.num_vertices(), 8);
        // 2*(m(k-1) + k(m-1)) = 2*(4 + 3) = 14 grid edges, 2m = 4 auxiliary
        assert_eq!(g.num_edges(), 18);
        assert_eq!((q.source, q.target), (6, 7));
        assert_eq!(g.in_degree(6), 0);
        assert_eq!(g.out_degree(7), 0);
        assert!(g.out_edges(6).all(|e| g.cost(e) == [0, 0]));
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(generate_grid(&GridSpec::new(0, 3, 2, 1)).is_err());
        assert!(generate_grid(&GridSpec::new(3, 3, 1, 1)).is_err());
        let mut s = GridSpec::new(3, 3, 2, 1);
        s.cost_low = 11;
        assert!(generate_grid(&s).is_err());
    }

    #[test]
    fn single_cell_grid() {
        let (g, q) = generate_grid(&GridSpec::new(1, 1, 3, 5)).unwrap();
        assert_eq!(g.num_vertices(), 3);
        assert_eq!(g.num_edges(), 2);
        assert_eq!(g.path_cost(&[q.source, 0, q.target]).unwrap().values(), &[0, 0, 0]);
    }
}
