//! Parsers, converters and canonical file formats.
//!
//! Every text format here uses one-based vertex ids and `c`-prefixed
//! comment lines. Line numbers in errors are one-based.

mod dimacs;
mod graph_file;
mod guards;
mod panda;
mod query_file;
mod solution_file;
mod subgraph;

pub use dimacs::{
    extend_dimacs, parse_dimacs, parse_dimacs_files, read_elevation, ElevationTable,
    ELEVATION_SCALE,
};
pub use graph_file::{read_graph, read_graph_file, write_graph, write_graph_file};
pub use guards::{
    guards_to_graph, parse_guards_map, write_guards_map, GuardGrid, DIAGONAL_COST,
    ORTHOGONAL_COST,
};
pub use panda::{
    clearance_penalty, panda_apply_clearance, parse_roadmap, to_fixed_point, write_roadmap,
    ClearanceMode, ClearanceRoadmap, RoadmapEdge, JOINTS, PANDA_SCALE,
};
pub use query_file::{read_queries, read_queries_file, write_queries, write_queries_file};
pub use solution_file::{
    read_solutions, read_solutions_file, write_solutions, write_solutions_file,
};
pub use subgraph::{extract_connected_subgraph, Subgraph};

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::Path;

use thiserror::Error;

use crate::mos::MosError;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("{path}: {source}")]
    File {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: negative cost")]
    NegativeCost { line: usize },
    #[error("arc {arc} differs between the distance and time files")]
    ArcSetMismatch { arc: usize },
    #[error("elevation data is required for three or more objectives")]
    MissingElevation,
    #[error("elevation table has {found} entries, graph has {expected} vertices")]
    ElevationSizeMismatch { expected: usize, found: usize },
    #[error("root vertex {0} out of range")]
    RootOutOfRange(u64),
    #[error("expected {expected} {what}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("bad token {token:?} at row {row}, column {col}")]
    BadToken {
        row: usize,
        col: usize,
        token: String,
    },
    #[error("roadmap edge {edge} has a non-positive clearance")]
    NonPositiveClearance { edge: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Graph(#[from] MosError),
}

pub(crate) fn malformed(line: usize, reason: impl Into<String>) -> IngestError {
    IngestError::Malformed {
        line,
        reason: reason.into(),
    }
}

pub(crate) fn open(path: &Path) -> Result<BufReader<File>, IngestError> {
    File::open(path).map(BufReader::new).map_err(|source| IngestError::File {
        path: path.display().to_string(),
        source,
    })
}

pub(crate) fn create(path: &Path) -> Result<BufWriter<File>, IngestError> {
    File::create(path).map(BufWriter::new).map_err(|source| IngestError::File {
        path: path.display().to_string(),
        source,
    })
}

/// Parses a one-based vertex id into a zero-based one.
pub(crate) fn parse_vertex(tok: &str, n: usize, line: usize) -> Result<u32, IngestError> {
    let v: u64 = tok
        .parse()
        .map_err(|_| malformed(line, format!("bad vertex id {tok:?}")))?;
    if v == 0 || v > n as u64 {
        return Err(malformed(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok((v - 1) as u32)
}

/// Parses a non-negative integer cost.
pub(crate) fn parse_cost(tok: &str, line: usize) -> Result<u64, IngestError> {
    if tok.starts_with('-') {
        return Err(IngestError::NegativeCost { line });
    }
    tok.parse()
        .map_err(|_| malformed(line, format!("bad cost {tok:?}")))
}

pub(crate) fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize, IngestError> {
    let tok = tok.ok_or_else(|| malformed(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| malformed(line, format!("bad {what} {tok:?}")))
}
