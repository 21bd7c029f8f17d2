//! Benchmark instances, exact and ε-approximate solvers, and the evaluation
//! protocol for multi-objective shortest-path (MOS) search.
//!
//! Vertex ids are zero-based in memory and one-based in every file format.

pub mod mos;
pub mod generators;
pub mod ingest;
pub mod solvers;
pub mod protocol;
