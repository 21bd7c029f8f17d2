//! Seeded construction of the synthetic benchmark families.

mod grid;
mod netmaker;
mod queries;
pub mod rng;

pub use grid::{generate_grid, GridSpec};
pub use netmaker::{
    generate_netmaker, is_cycle_cost, NetMaker, NetMakerSpec, CYCLE_COST_BANDS, LOCAL_COST_BAND,
};
pub use queries::{sample_netmaker_queries, sample_uniform_queries};

use thiserror::Error;

use crate::mos::MosError;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("invalid generator parameters: {0}")]
    InvalidSpec(String),
    #[error("graph has {0} vertices, too few to sample queries")]
    TooFewVertices(usize),
    #[error("could only sample {found} of {requested} distinct query pairs")]
    ExhaustedPairs { requested: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] MosError),
}
