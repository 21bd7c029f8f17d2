use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::mos::Epsilon;

use super::ProtocolError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordStatus {
    Solved,
    /// The target is unreachable from the source.
    Empty,
    Timeout,
}

/// One (query, ε) result row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkRecord {
    pub benchmark: String,
    /// One-based, as in the query file.
    pub query: usize,
    pub epsilon: String,
    pub cardinality: usize,
    pub ms: u64,
    pub solver: String,
    pub status: RecordStatus,
}

impl BenchmarkRecord {
    pub fn epsilon(&self) -> Result<Epsilon, ProtocolError> {
        Ok(Epsilon::parse(&self.epsilon)?)
    }
}

/// Writes records with the header `benchmark,query,epsilon,cardinality,ms,solver,status`.
pub fn write_records<W: Write>(records: &[BenchmarkRecord], out: W) -> Result<(), ProtocolError> {
    let mut w = csv::Writer::from_writer(out);
    if records.is_empty() {
        w.write_record(["benchmark", "query", "epsilon", "cardinality", "ms", "solver", "status"])?;
    }
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_records<R: Read>(input: R) -> Result<Vec<BenchmarkRecord>, ProtocolError> {
    let mut r = csv::Reader::from_reader(input);
    let records = r.deserialize().collect::<Result<Vec<BenchmarkRecord>, _>>()?;
    for rec in &records {
        rec.epsilon()?;
        if rec.status == RecordStatus::Empty && rec.cardinality != 0 {
            return Err(ProtocolError::InvalidRecord(format!(
                "query {} is empty with cardinality {}",
                rec.query, rec.cardinality
            )));
        }
    }
    Ok(records)
}

/// The ε values every query is evaluated at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonGrid {
    values: Vec<Epsilon>,
}

impl Default for EpsilonGrid {
    fn default() -> Self {
        EpsilonGrid::scalars(&["0", "0.01", "0.05", "0.1"]).expect("default grid is valid")
    }
}

impl EpsilonGrid {
    /// Scalar (broadcast) entries must be strictly increasing; per-objective
    /// entries may appear in any order but must be distinct.
    pub fn new(values: Vec<Epsilon>) -> Result<Self, ProtocolError> {
        if values.is_empty() {
            return Err(ProtocolError::InvalidGrid("grid is empty".into()));
        }
        let scalars: Vec<_> = values
            .iter()
            .filter(|e| e.is_broadcast())
            .map(|e| e.component(0))
            .collect();
        if scalars.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ProtocolError::InvalidGrid(
                "scalar values must be strictly increasing".into(),
            ));
        }
        for (i, a) in values.iter().enumerate() {
            if values[..i].contains(a) {
                return Err(ProtocolError::InvalidGrid(format!("duplicate value {a}")));
            }
        }
        Ok(EpsilonGrid { values })
    }

    pub fn scalars(literals: &[&str]) -> Result<Self, ProtocolError> {
        let values = literals
            .iter()
            .map(|s| {
                let e = Epsilon::parse(s)?;
                if !e.is_broadcast() {
                    return Err(ProtocolError::InvalidGrid(format!("{s} is not a scalar")));
                }
                Ok(e)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(values)
    }

    pub fn values(&self) -> &[Epsilon] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}
