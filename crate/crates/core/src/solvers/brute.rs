use crate::mos::{pareto_filter, CostVector, MosGraph, Query, Solution, SolutionSet, Epsilon};

use super::SolveError;

/// Maximum number of source-target simple paths the oracle will enumerate.
pub const BRUTE_FORCE_PATH_LIMIT: u64 = 10_000_000;

/// Enumerates every simple source-target path (parallel edges count as
/// distinct paths) and returns the Pareto front of their costs, each with
/// the first witness found.
pub fn brute_force_pareto(graph: &MosGraph, query: &Query) -> Result<SolutionSet, SolveError> {
    query
        .validate(graph)
        .map_err(|_| SolveError::QueryOutOfRange(query.index))?;
    let d = graph.dim();
    let mut found: Vec<(CostVector, Vec<u32>)> = Vec::new();
    let mut on_path = vec![false; graph.num_vertices()];
    let mut path = vec![query.source];
    let mut cost = vec![0u64; d];
    let mut count = 0u64;
    on_path[query.source as usize] = true;
    walk(graph, query.target, &mut on_path, &mut path, &mut cost, &mut found, &mut count)?;

    let front = pareto_filter(&found.iter().map(|(c, _)| c.clone()).collect::<Vec<_>>())
        .expect("costs share the graph dimension");
    let entries = front
        .into_iter()
        .map(|c| {
            let witness = found.iter().find(|(f, _)| *f == c).map(|(_, p)| p.clone());
            Solution::new(c, witness.expect("front is drawn from found costs"))
        })
        .collect();
    Ok(SolutionSet::new(*query, Epsilon::zero(), entries))
}

fn walk(
    graph: &MosGraph,
    target: u32,
    on_path: &mut [bool],
    path: &mut Vec<u32>,
    cost: &mut Vec<u64>,
    found: &mut Vec<(CostVector, Vec<u32>)>,
    count: &mut u64,
) -> Result<(), SolveError> {
    let u = *path.last().expect("path starts at the source");
    if u == target {
        *count += 1;
        if *count > BRUTE_FORCE_PATH_LIMIT {
            return Err(SolveError::InstanceTooLarge {
                limit: BRUTE_FORCE_PATH_LIMIT,
            });
        }
        found.push((CostVector::from(cost.as_slice()), path.clone()));
        return Ok(());
    }
    for e in graph.out_edges(u) {
        let w = graph.head(e);
        if on_path[w as usize] {
            continue;
        }
        let c = graph.cost(e);
        for (a, b) in cost.iter_mut().zip(c) {
            *a += b;
        }
        on_path[w as usize] = true;
        path.push(w);
        let r = walk(graph, target, on_path, path, cost, found, count);
        path.pop();
        on_path[w as usize] = false;
        for (a, b) in cost.iter_mut().zip(c) {
            *a -= b;
        }
        r?;
    }
    Ok(())
}
