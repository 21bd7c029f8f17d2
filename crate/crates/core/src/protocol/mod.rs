//! The evaluation protocol: batch runs over an ε grid, solution-set
//! verification, and descriptive statistics.

mod records;
mod run;
mod stats;
mod verify;

pub use records::{read_records, write_records, BenchmarkRecord, EpsilonGrid, RecordStatus};
pub use run::{run_benchmark, BenchmarkOutput, RunConfig, DEFAULT_TIMEOUT_MS};
pub use stats::{
    cardinality_stats, correlation_report, reduction_stats, spread_stats, AxisSpread,
    CardinalityStats, EdgeClass, ReductionReport, ReductionRow, SpreadReport,
};
pub use verify::{verify_coverage, verify_solutions, Coverage, VerificationReport, Violation};

use thiserror::Error;

use crate::mos::MosError;
use crate::solvers::SolveError;

#[derive(Debug, Error)]
pub enum ProtocolError {
    #[error("no usable records at epsilon {0}")]
    NoRecords(String),
    #[error("benchmark {benchmark} query {query} has no epsilon = 0 baseline")]
    MissingBaseline { benchmark: String, query: usize },
    #[error("every query was excluded from the average on axis {0}")]
    AllExcluded(usize),
    #[error("no non-empty solution sets")]
    NoSolutions,
    #[error("solution sets belong to different queries ({0} vs {1})")]
    QueryMismatch(String, String),
    #[error("solution sets have different dimensions ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("invalid epsilon grid: {0}")]
    InvalidGrid(String),
    #[error("invalid record: {0}")]
    InvalidRecord(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Mos(#[from] MosError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
