//! Exact and ε-approximate multi-objective search, plus a brute-force
//! enumeration oracle for small instances.

mod archive;
mod brute;
mod heuristic;
mod queue;
mod search;

pub use brute::{brute_force_pareto, BRUTE_FORCE_PATH_LIMIT};
pub use heuristic::{dijkstra_bound, ideal_point_heuristic, HeuristicTable, UNREACHABLE};
pub use search::{search, solve_approx, solve_exact, SearchOutcome, SearchStats};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("target vertex {0} is out of range")]
    TargetOutOfRange(u64),
    #[error("objective index {0} is out of range")]
    ObjectiveOutOfRange(usize),
    #[error("query {0} names a vertex outside the graph")]
    QueryOutOfRange(usize),
    #[error("heuristic table was built for a different target or dimension")]
    HeuristicMismatch,
    #[error("epsilon has {found} components but the graph has {expected} objectives")]
    EpsilonDimension { expected: usize, found: usize },
    #[error("instance has more than {limit} simple paths; too large for enumeration")]
    InstanceTooLarge { limit: u64 },
    #[error("label arena exceeded 2^32 - 1 labels")]
    LabelLimit,
    #[error("search timed out after {elapsed_ms} ms")]
    Timeout { elapsed_ms: u64 },
}
