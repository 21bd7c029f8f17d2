use std::collections::HashSet;

use crate::mos::{MosGraph, Query, QuerySet, VertexId};

use super::rng::{SplitMix64, TAG_QUERIES};
use super::GenError;

/// Resampling budget per requested query.
const ATTEMPTS_PER_QUERY: usize = 100;

/// Distinct start–goal pairs with sources in the first tenth of the id
/// range and targets in the last tenth.
pub fn sample_netmaker_queries(
    graph: &MosGraph,
    count: usize,
    seed: u64,
) -> Result<QuerySet, GenError> {
    let n = graph.num_vertices();
    if n < 20 {
        return Err(GenError::TooFewVertices(n));
    }
    let tenth = (n / 10) as u64;
    let sources = (0, tenth - 1);
    let targets = (n as u64 - tenth, n as u64 - 1);
    sample_pairs(count, seed, sources, targets, tenth * tenth)
}

/// Distinct pairs of different vertices drawn uniformly from the whole graph.
pub fn sample_uniform_queries(
    graph: &MosGraph,
    count: usize,
    seed: u64,
) -> Result<QuerySet, GenError> {
    let n = graph.num_vertices() as u64;
    if n < 2 {
        return Err(GenError::TooFewVertices(n as usize));
    }
    let range = (0, n - 1);
    sample_pairs(count, seed, range, range, n * (n - 1))
}

fn sample_pairs(
    count: usize,
    seed: u64,
    sources: (u64, u64),
    targets: (u64, u64),
    capacity: u64,
) -> Result<QuerySet, GenError> {
    if count == 0 {
        return Err(GenError::InvalidSpec("query count must be positive".into()));
    }
    if count as u64 > capacity {
        return Err(GenError::ExhaustedPairs {
            requested: count,
            found: 0,
        });
    }
    let mut rng = SplitMix64::substream(seed, TAG_QUERIES);
    let mut seen = HashSet::with_capacity(count);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        if attempts == ATTEMPTS_PER_QUERY * count {
            return Err(GenError::ExhaustedPairs {
                requested: count,
                found: out.len(),
            });
        }
        attempts += 1;
        let s = rng.range_inclusive(sources.0, sources.1) as VertexId;
        let t = rng.range_inclusive(targets.0, targets.1) as VertexId;
        if s != t && seen.insert((s, t)) {
            out.push(Query::new(out.len(), s, t));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mos::{GraphBuilder, Objective};

    fn empty_graph(n: usize) -> MosGraph {
        GraphBuilder::new(n, Objective::unit_scaled(&["a"])).build().unwrap()
    }

    #[test]
    fn netmaker_ranges() {
        let g = empty_graph(200);
        let qs = sample_netmaker_queries(&g, 50, 11).unwrap();
        assert_eq!(qs.len(), 50);
        assert!(qs.iter().all(|q| q.source < 20 && q.target >= 180));
        let distinct: HashSet<_> = qs.iter().map(|q| (q.source, q.target)).collect();
        assert_eq!(distinct.len(), 50);
        assert_eq!(qs, sample_netmaker_queries(&g, 50, 11).unwrap());
    }

    #[test]
    fn exhausted_pairs() {
        let g = empty_graph(20);
        // 2 sources x 2 targets
        assert!(sample_netmaker_queries(&g, 4, 1).is_ok());
        assert!(matches!(
            sample_netmaker_queries(&g, 5, 1),
            Err(GenError::ExhaustedPairs { .. })
        ));
        assert!(matches!(
            sample_netmaker_queries(&empty_graph(19), 1, 1),
            Err(GenError::TooFewVertices(19))
        ));
    }

    #[test]
    fn uniform_pairs_are_distinct_vertices() {
        let g = empty_graph(5);
        let qs = sample_uniform_queries(&g, 20, 3).unwrap();
        assert!(qs.iter().all(|q| q.source != q.target));
    }
}
