use std::collections::BTreeMap;
use std::io::Write;

use crate::generators::is_cycle_cost;
use crate::mos::{correlation_matrix_where, EpsFactor, Epsilon, MosGraph, SolutionSet};

use super::records::{BenchmarkRecord, RecordStatus};
use super::ProtocolError;

/// Lower middle element for even counts.
fn lower_median<T: Copy + PartialOrd>(sorted: &[T]) -> T {
    sorted[(sorted.len() - 1) / 2]
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

fn sort_f64(xs: &mut [f64]) {
    xs.sort_by(|a, b| a.total_cmp(b));
}

#[derive(Clone, Debug, PartialEq)]
pub struct CardinalityStats {
    pub queries: usize,
    /// Timed-out records left out of the statistics.
    pub timeouts_excluded: usize,
    pub min: usize,
    pub max: usize,
    pub median: usize,
    pub mean: f64,
}

impl CardinalityStats {
    /// The mean rounded half-up, as printed in reports.
    pub fn mean_rounded(&self) -> u64 {
        (self.mean + 0.5).floor() as u64
    }
}

/// Front-size statistics over the records at `at_eps`.
pub fn cardinality_stats(
    records: &[BenchmarkRecord],
    at_eps: &Epsilon,
) -> Result<CardinalityStats, ProtocolError> {
    let mut sizes = Vec::new();
    let mut timeouts_excluded = 0;
    for r in records {
        if &r.epsilon()? != at_eps {
            continue;
        }
        match r.status {
            RecordStatus::Timeout => timeouts_excluded += 1,
            _ => sizes.push(r.cardinality),
        }
    }
    if sizes.is_empty() {
        return Err(ProtocolError::NoRecords(at_eps.to_string()));
    }
    sizes.sort_unstable();
    let total: usize = sizes.iter().sum();
    Ok(CardinalityStats {
        queries: sizes.len(),
        timeouts_excluded,
        min: sizes[0],
        max: sizes[sizes.len() - 1],
        median: lower_median(&sizes),
        mean: total as f64 / sizes.len() as f64,
    })
}

/// Reduction of front size relative to ε = 0 at one ε value, in percent.
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionRow {
    pub epsilon: String,
    pub queries: usize,
    pub median_pct: f64,
    pub mean_pct: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionReport {
    /// Per benchmark, rows in ascending ε.
    pub per_benchmark: BTreeMap<String, Vec<ReductionRow>>,
    /// All queries of all benchmarks pooled.
    pub pooled: Vec<ReductionRow>,
    /// Unweighted average of the per-benchmark median and mean.
    pub benchmark_averaged: Vec<ReductionRow>,
    /// Query pairs skipped because a record timed out or |Π_0| = 0.
    pub excluded: usize,
}

/// Scalar entries first in numeric order (ε = 0 leads), then per-objective ones.
type EpsKey = (bool, Vec<EpsFactor>, String);

fn eps_key(e: &Epsilon) -> EpsKey {
    (!e.is_broadcast(), e.factors().to_vec(), e.to_string())
}

/// Per-query reductions `1 - |Π_ε| / |Π_0|`, aggregated per ε.
pub fn reduction_stats(records: &[BenchmarkRecord]) -> Result<ReductionReport, ProtocolError> {
    // (benchmark, query) -> baseline cardinality, None when unusable
    let mut baseline: BTreeMap<(&str, usize), Option<usize>> = BTreeMap::new();
    for r in records {
        if r.epsilon()?.is_zero() {
            let usable = (r.status != RecordStatus::Timeout && r.cardinality > 0)
                .then_some(r.cardinality);
            baseline.insert((&r.benchmark, r.query), usable);
        }
    }
    let mut reductions: BTreeMap<String, BTreeMap<EpsKey, Vec<f64>>> = BTreeMap::new();
    let mut excluded = 0;
    for r in records {
        let eps = r.epsilon()?;
        let base = baseline.get(&(r.benchmark.as_str(), r.query)).ok_or_else(|| {
            ProtocolError::MissingBaseline {
                benchmark: r.benchmark.clone(),
                query: r.query,
            }
        })?;
        let Some(base) = *base else {
            excluded += 1;
            continue;
        };
        if r.status == RecordStatus::Timeout {
            excluded += 1;
            continue;
        }
        let pct = 100.0 * (1.0 - r.cardinality as f64 / base as f64);
        reductions
            .entry(r.benchmark.clone())
            .or_default()
            .entry(eps_key(&eps))
            .or_default()
            .push(pct);
    }

    let row = |key: &EpsKey, values: &[f64]| {
        let mut v = values.to_vec();
        sort_f64(&mut v);
        ReductionRow {
            epsilon: key.2.clone(),
            queries: v.len(),
            median_pct: lower_median(&v),
            mean_pct: mean(&v),
        }
    };
    let mut per_benchmark = BTreeMap::new();
    let mut pooled_values: BTreeMap<EpsKey, Vec<f64>> = BTreeMap::new();
    let mut averaged_parts: BTreeMap<EpsKey, Vec<(f64, f64, usize)>> = BTreeMap::new();
    for (bench, by_eps) in &reductions {
        let rows: Vec<ReductionRow> = by_eps
            .iter()
            .map(|(k, v)| {
                pooled_values.entry(k.clone()).or_default().extend(v);
                let r = row(k, v);
                averaged_parts
                    .entry(k.clone())
                    .or_default()
                    .push((r.median_pct, r.mean_pct, r.queries));
                r
            })
            .collect();
        per_benchmark.insert(bench.clone(), rows);
    }
    let pooled = pooled_values.iter().map(|(k, v)| row(k, v)).collect();
    let benchmark_averaged = averaged_parts
        .iter()
        .map(|(k, parts)| ReductionRow {
            epsilon: k.2.clone(),
            queries: parts.iter().map(|p| p.2).sum(),
            median_pct: mean(&parts.iter().map(|p| p.0).collect::<Vec<_>>()),
            mean_pct: mean(&parts.iter().map(|p| p.1).collect::<Vec<_>>()),
        })
        .collect();
    Ok(ReductionReport {
        per_benchmark,
        pooled,
        benchmark_averaged,
        excluded,
    })
}

impl ReductionReport {
    /// One row per (aggregation, benchmark, ε).
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), ProtocolError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["aggregation", "benchmark", "epsilon", "queries", "median_pct", "mean_pct"])?;
        let mut emit = |agg: &str, bench: &str, r: &ReductionRow| {
            w.write_record([
                agg,
                bench,
                &r.epsilon,
                &r.queries.to_string(),
                &format!("{:.3}", r.median_pct),
                &format!("{:.3}", r.mean_pct),
            ])
        };
        for (bench, rows) in &self.per_benchmark {
            for r in rows {
                emit("benchmark", bench, r)?;
            }
        }
        for r in &self.pooled {
            emit("pooled", "*", r)?;
        }
        for r in &self.benchmark_averaged {
            emit("benchmark-averaged", "*", r)?;
        }
        w.flush()?;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxisSpread {
    pub mean: f64,
    pub included: usize,
    /// Queries whose minimum on this axis is zero.
    pub excluded_zero_min: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpreadReport {
    pub axes: Vec<AxisSpread>,
}

/// Average per-axis max/min ratio over the non-empty fronts in `sets`.
pub fn spread_stats(sets: &[SolutionSet]) -> Result<SpreadReport, ProtocolError> {
    let fronts: Vec<&SolutionSet> = sets.iter().filter(|s| !s.is_empty()).collect();
    let Some(first) = fronts.first() else {
        return Err(ProtocolError::NoSolutions);
    };
    let d = first.entries[0].cost.dim();
    let mut axes = Vec::with_capacity(d);
    for axis in 0..d {
        let mut ratios = Vec::new();
        let mut excluded_zero_min = 0;
        for s in &fronts {
            let mut lo = u64::MAX;
            let mut hi = 0;
            for e in &s.entries {
                if e.cost.dim() != d {
                    return Err(ProtocolError::DimensionMismatch(d, e.cost.dim()));
                }
                lo = lo.min(e.cost[axis]);
                hi = hi.max(e.cost[axis]);
            }
            if lo == 0 {
                excluded_zero_min += 1;
            } else {
                ratios.push(hi as f64 / lo as f64);
            }
        }
        if ratios.is_empty() {
            return Err(ProtocolError::AllExcluded(axis));
        }
        axes.push(AxisSpread {
            mean: mean(&ratios),
            included: ratios.len(),
            excluded_zero_min,
        });
    }
    Ok(SpreadReport { axes })
}

/// Which edges enter a correlation estimate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EdgeClass {
    #[default]
    All,
    /// NetMaker Hamiltonian-cycle edges.
    Cycle,
    /// NetMaker locality-window edges.
    Local,
}

/// Labeled CSV of pairwise objective correlations
/// (`objective_i,objective_j,rho,edges`; `rho` is blank where undefined).
pub fn correlation_report(graph: &MosGraph, class: EdgeClass) -> Result<String, ProtocolError> {
    let m = correlation_matrix_where(graph, |c| match class {
        EdgeClass::All => true,
        EdgeClass::Cycle => is_cycle_cost(c),
        EdgeClass::Local => !is_cycle_cost(c),
    })?;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["objective_i", "objective_j", "rho", "edges"])?;
    for (i, j, rho) in m.pairs() {
        w.write_record([
            m.names[i].as_str(),
            m.names[j].as_str(),
            &rho.map(|r| format!("{r:.6}")).unwrap_or_default(),
            &m.edge_count.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
