//! Domain types shared by every other module: cost vectors, dominance,
//! Pareto filtering, graphs, queries, fronts and objective correlation.

mod correlation;
mod cost;
mod epsilon;
mod graph;
mod solution;

pub use correlation::{
    correlation_matrix_where, objective_correlation_matrix, pearson, CorrelationMatrix,
};
pub use cost::{
    dominates, dominates_slice, eps_covers_slice, eps_dominates, eps_dominates_slice,
    pareto_filter, weakly_dominates_slice, CostVector,
};
pub use epsilon::{EpsFactor, Epsilon};
pub use graph::{Edge, GraphBuilder, MosGraph, Objective, Query, QuerySet, VertexId};
pub use solution::{Solution, SolutionSet};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MosError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("no edge from vertex {tail} to vertex {head}")]
    NonEdge { tail: u64, head: u64 },
    #[error("empty path")]
    EmptyPath,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(u64),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("correlation undefined for a constant sample")]
    DegenerateInput,
    #[error("graph has fewer than two edges")]
    EmptyGraph,
    #[error("invalid epsilon literal {0:?}")]
    BadEpsilon(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}
