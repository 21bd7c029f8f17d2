use std::io::BufRead;
use std::path::Path;

use crate::mos::{GraphBuilder, MosGraph, Objective};

use super::{malformed, open, parse_cost, parse_count, parse_vertex, IngestError};

/// Elevation differences are stored in centimetres.
pub const ELEVATION_SCALE: u64 = 100;

struct ArcFile {
    vertices: usize,
    arcs: Vec<(u32, u32, u64)>,
}

/// Reads a 9th DIMACS Challenge `.gr` file (`p sp n m`, `a u v w`).
fn read_arc_file<R: BufRead>(input: R) -> Result<ArcFile, IngestError> {
    let mut vertices = None;
    let mut declared = 0;
    let mut arcs = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let ln = i + 1;
        let mut toks = line.split_ascii_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if vertices.is_some() {
                    return Err(malformed(ln, "duplicate problem line"));
                }
                if toks.next() != Some("sp") {
                    return Err(malformed(ln, "expected 'p sp <n> <m>'"));
                }
                vertices = Some(parse_count(toks.next(), ln, "vertex count")?);
                declared = parse_count(toks.next(), ln, "arc count")?;
                arcs.reserve(declared);
            }
            Some("a") => {
                let n = vertices.ok_or_else(|| malformed(ln, "arc before problem line"))?;
                let u = parse_vertex(toks.next().unwrap_or(""), n, ln)?;
                let v = parse_vertex(toks.next().unwrap_or(""), n, ln)?;
                let w = parse_cost(toks.next().ok_or_else(|| malformed(ln, "missing arc weight"))?, ln)?;
                if toks.next().is_some() {
                    return Err(malformed(ln, "trailing tokens on arc line"));
                }
                arcs.push((u, v, w));
            }
            Some(other) => return Err(malformed(ln, format!("unknown keyword {other:?}"))),
        }
    }
    let vertices = vertices.ok_or_else(|| malformed(0, "missing problem line"))?;
    if arcs.len() != declared {
        return Err(malformed(0, format!("header declares {declared} arcs, file has {}", arcs.len())));
    }
    Ok(ArcFile { vertices, arcs })
}

/// Combines a distance file and a travel-time file over the same arcs into
/// a bi-objective graph `(distance, time)`. Arcs are matched by position.
pub fn parse_dimacs<R1: BufRead, R2: BufRead>(
    distance: R1,
    time: R2,
) -> Result<MosGraph, IngestError> {
    let dist = read_arc_file(distance)?;
    let time = read_arc_file(time)?;
    if dist.vertices != time.vertices {
        return Err(IngestError::DimensionMismatch {
            what: "vertices in the time file",
            expected: dist.vertices,
            found: time.vertices,
        });
    }
    if dist.arcs.len() != time.arcs.len() {
        return Err(IngestError::ArcSetMismatch {
            arc: dist.arcs.len().min(time.arcs.len()) + 1,
        });
    }
    let mut b = GraphBuilder::new(dist.vertices, Objective::unit_scaled(&["distance", "time"]))
        .with_capacity(dist.arcs.len());
    for (i, (d, t)) in dist.arcs.iter().zip(&time.arcs).enumerate() {
        if (d.0, d.1) != (t.0, t.1) {
            return Err(IngestError::ArcSetMismatch { arc: i + 1 });
        }
        b.add_edge(d.0, d.1, &[d.2, t.2]);
    }
    b.meta("family", "dimacs");
    Ok(b.build()?)
}

pub fn parse_dimacs_files(distance: &Path, time: &Path) -> Result<MosGraph, IngestError> {
    let g = parse_dimacs(open(distance)?, open(time)?)?;
    Ok(g.with_metadata("source", format!("{} {}", distance.display(), time.display())))
}

/// Per-vertex elevation in metres.
#[derive(Clone, Debug, PartialEq)]
pub struct ElevationTable {
    pub values: Vec<f64>,
}

/// Reads `p elev <n>` followed by `v <id> <metres>` lines, one per vertex.
pub fn read_elevation<R: BufRead>(input: R) -> Result<ElevationTable, IngestError> {
    let mut values: Option<Vec<Option<f64>>> = None;
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let ln = i + 1;
        let mut toks = line.split_ascii_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if values.is_some() {
                    return Err(malformed(ln, "duplicate problem line"));
                }
                if toks.next() != Some("elev") {
                    return Err(malformed(ln, "expected 'p elev <n>'"));
                }
                values = Some(vec![None; parse_count(toks.next(), ln, "vertex count")?]);
            }
            Some("v") => {
                let vals = values.as_mut().ok_or_else(|| malformed(ln, "vertex before problem line"))?;
                let v = parse_vertex(toks.next().unwrap_or(""), vals.len(), ln)?;
                let t = toks.next().ok_or_else(|| malformed(ln, "missing elevation"))?;
                let e: f64 = t.parse().map_err(|_| malformed(ln, format!("bad elevation {t:?}")))?;
                if !e.is_finite() {
                    return Err(malformed(ln, "elevation must be finite"));
                }
                if vals[v as usize].replace(e).is_some() {
                    return Err(malformed(ln, format!("duplicate elevation for vertex {}", v + 1)));
                }
            }
            Some(other) => return Err(malformed(ln, format!("unknown keyword {other:?}"))),
        }
    }
    let vals = values.ok_or_else(|| malformed(0, "missing problem line"))?;
    let found = vals.iter().filter(|v| v.is_some()).count();
    if found != vals.len() {
        return Err(IngestError::ElevationSizeMismatch {
            expected: vals.len(),
            found,
        });
    }
    Ok(ElevationTable {
        values: vals.into_iter().map(Option::unwrap).collect(),
    })
}

/// Appends road-network objectives to a bi-objective graph, in order:
/// absolute elevation difference (`d >= 3`), endpoint degree sum (`d >= 4`)
/// and hop count (`d = 5`).
///
/// Degree is in-degree plus out-degree; the objective stores
/// `deg(u) + deg(v)`, i.e. twice the endpoints' average, at scale 2.
pub fn extend_dimacs(
    graph: &MosGraph,
    elevation: Option<&ElevationTable>,
    target_dim: usize,
) -> Result<MosGraph, IngestError> {
    if graph.dim() != 2 {
        return Err(IngestError::InvalidParameter(format!(
            "base graph must have 2 objectives, found {}",
            graph.dim()
        )));
    }
    if !(3..=5).contains(&target_dim) {
        return Err(IngestError::InvalidParameter(format!(
            "target dimension must be 3, 4 or 5, found {target_dim}"
        )));
    }
    let elevation = elevation.ok_or(IngestError::MissingElevation)?;
    if elevation.values.len() != graph.num_vertices() {
        return Err(IngestError::ElevationSizeMismatch {
            expected: graph.num_vertices(),
            found: elevation.values.len(),
        });
    }

    let mut objectives = graph.objectives().to_vec();
    objectives.push(Objective::new("elevation", ELEVATION_SCALE));
    if target_dim >= 4 {
        objectives.push(Objective::new("degree", 2));
    }
    if target_dim >= 5 {
        objectives.push(Objective::new("hop", 1));
    }
    let degree = |v: u32| (graph.in_degree(v) + graph.out_degree(v)) as u64;

    let mut b = GraphBuilder::new(graph.num_vertices(), objectives).with_capacity(graph.num_edges());
    let mut cost = Vec::with_capacity(target_dim);
    for e in graph.edges() {
        cost.clear();
        cost.extend_from_slice(e.cost);
        let rise = elevation.values[e.head as usize] - elevation.values[e.tail as usize];
        cost.push((rise.abs() * ELEVATION_SCALE as f64).round() as u64);
        if target_dim >= 4 {
            cost.push(degree(e.tail) + degree(e.head));
        }
        if target_dim >= 5 {
            cost.push(1);
        }
        b.add_edge(e.tail, e.head, &cost);
    }
    for (k, v) in graph.metadata() {
        b.meta(k.clone(), v);
    }
    b.meta("family", "dimacs-extended").meta("degree_objective", "endpoint-degree-sum");
    Ok(b.build()?)
}
