use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::mos::{Epsilon, MosGraph, Query, SolutionSet, VertexId};
use crate::solvers::{ideal_point_heuristic, search, HeuristicTable, SolveError};

use super::records::{BenchmarkRecord, EpsilonGrid, RecordStatus};
use super::ProtocolError;

pub const DEFAULT_TIMEOUT_MS: u64 = 300_000;

pub const EXACT_SOLVER: &str = "namoa-dr";
pub const APPROX_SOLVER: &str = "namoa-dr-eps";

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub benchmark: String,
    pub grid: EpsilonGrid,
    /// Per (query, ε) budget; `None` disables the limit.
    pub timeout_ms: Option<u64>,
}

impl RunConfig {
    pub fn new(benchmark: impl Into<String>) -> Self {
        RunConfig {
            benchmark: benchmark.into(),
            grid: EpsilonGrid::default(),
            timeout_ms: Some(DEFAULT_TIMEOUT_MS),
        }
    }
}

/// Results ordered by query, then ε.
#[derive(Clone, Debug)]
pub struct BenchmarkOutput {
    pub records: Vec<BenchmarkRecord>,
    /// One entry per record; `None` for timeouts.
    pub sets: Vec<Option<SolutionSet>>,
}

impl BenchmarkOutput {
    /// The completed sets at grid position `eps`, in query order.
    pub fn sets_at(&self, eps: &Epsilon) -> Vec<&SolutionSet> {
        self.sets
            .iter()
            .flatten()
            .filter(|s| &s.epsilon == eps)
            .collect()
    }
}

/// Solves every (query, ε) pair. Work runs on the current rayon pool; the
/// output order does not depend on scheduling.
pub fn run_benchmark(
    graph: &MosGraph,
    queries: &[Query],
    config: &RunConfig,
) -> Result<BenchmarkOutput, ProtocolError> {
    for q in queries {
        q.validate(graph)
            .map_err(|_| SolveError::QueryOutOfRange(q.index))?;
    }
    for e in config.grid.values() {
        if !e.fits(graph.dim()) {
            return Err(SolveError::EpsilonDimension {
                expected: graph.dim(),
                found: e.dim(),
            }
            .into());
        }
    }

    let targets: Vec<VertexId> = {
        let mut t: Vec<_> = queries.iter().map(|q| q.target).collect();
        t.sort_unstable();
        t.dedup();
        t
    };
    let tables: BTreeMap<VertexId, HeuristicTable> = targets
        .par_iter()
        .map(|&t| ideal_point_heuristic(graph, t).map(|h| (t, h)))
        .collect::<Result<_, _>>()?;

    let tasks: Vec<(&Query, &Epsilon)> = queries
        .iter()
        .flat_map(|q| config.grid.values().iter().map(move |e| (q, e)))
        .collect();
    let results: Vec<(BenchmarkRecord, Option<SolutionSet>)> = tasks
        .par_iter()
        .map(|&(q, eps)| solve_one(graph, q, eps, &tables[&q.target], config))
        .collect::<Result<_, _>>()?;

    let (records, sets) = results.into_iter().unzip();
    Ok(BenchmarkOutput { records, sets })
}

fn solve_one(
    graph: &MosGraph,
    query: &Query,
    eps: &Epsilon,
    heuristic: &HeuristicTable,
    config: &RunConfig,
) -> Result<(BenchmarkRecord, Option<SolutionSet>), ProtocolError> {
    let started = Instant::now();
    let deadline = config
        .timeout_ms
        .map(|ms| started + Duration::from_millis(ms));
    let outcome = search(graph, query, eps, heuristic, deadline);
    let ms = started.elapsed().as_millis() as u64;
    let solver = if eps.is_zero() { EXACT_SOLVER } else { APPROX_SOLVER };
    let mut record = BenchmarkRecord {
        benchmark: config.benchmark.clone(),
        query: query.index + 1,
        epsilon: eps.to_string(),
        cardinality: 0,
        ms,
        solver: solver.to_string(),
        status: RecordStatus::Timeout,
    };
    match outcome {
        Ok(out) => {
            record.cardinality = out.solutions.len();
            record.status = if out.solutions.is_empty() {
                RecordStatus::Empty
            } else {
                RecordStatus::Solved
            };
            Ok((record, Some(out.solutions)))
        }
        Err(SolveError::Timeout { .. }) => Ok((record, None)),
        Err(e) => Err(e.into()),
    }
}
