use std::io::{BufRead, Write};

use crate::mos::{GraphBuilder, MosGraph, Objective};

use super::{malformed, parse_count, parse_vertex, IngestError};

/// Arm joints (and links) of the manipulator.
pub const JOINTS: usize = 7;
/// Fixed-point scale of every roadmap objective (micro-units).
pub const PANDA_SCALE: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct RoadmapEdge {
    pub u: u32,
    pub v: u32,
    pub joint_distance: f64,
    /// Minimum clearance of each link along the edge, metres.
    pub link_clearance: [f64; JOINTS],
    pub min_clearance: f64,
}

/// A motion-planning roadmap with precomputed clearances.
#[derive(Clone, Debug, PartialEq)]
pub struct ClearanceRoadmap {
    pub configurations: Vec<[f64; JOINTS]>,
    pub edges: Vec<RoadmapEdge>,
    /// Undirected roadmaps contribute both directions of every edge.
    pub directed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClearanceMode {
    /// Path length plus one penalty on the minimum clearance over all links.
    Bi,
    /// Path length plus one penalty per link.
    Many,
}

/// Smooth obstacle-proximity penalty: zero from `delta` on, `(d-δ)²/(2δ)` below.
pub fn clearance_penalty(d: f64, delta: f64) -> f64 {
    if d >= delta {
        0.0
    } else {
        (d - delta).powi(2) / (2.0 * delta)
    }
}

/// Converts a non-negative real value to [`PANDA_SCALE`] fixed point.
pub fn to_fixed_point(x: f64) -> u64 {
    (x * PANDA_SCALE as f64).round() as u64
}

fn parse_reals<'a>(
    toks: impl Iterator<Item = &'a str>,
    n: usize,
    ln: usize,
) -> Result<Vec<f64>, IngestError> {
    let vals: Vec<f64> = toks
        .map(|t| {
            t.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| malformed(ln, format!("bad number {t:?}")))
        })
        .collect::<Result<_, _>>()?;
    if vals.len() != n {
        return Err(malformed(ln, format!("expected {n} numbers, found {}", vals.len())));
    }
    Ok(vals)
}

/// Reads a roadmap:
///
/// ```text
/// roadmap <V> <E> directed|undirected
/// v <q_1> ... <q_7>                              (V lines)
/// e <u> <v> <dist> <d_1> ... <d_7> <d_min>       (E lines)
/// ```
pub fn parse_roadmap<R: BufRead>(input: R) -> Result<ClearanceRoadmap, IngestError> {
    let mut header: Option<(usize, usize, bool)> = None;
    let mut configurations = Vec::new();
    let mut edges = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let ln = i + 1;
        let mut toks = line.split_ascii_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("roadmap") => {
                if header.is_some() {
                    return Err(malformed(ln, "duplicate roadmap header"));
                }
                let v = parse_count(toks.next(), ln, "vertex count")?;
                let e = parse_count(toks.next(), ln, "edge count")?;
                let directed = match toks.next() {
                    Some("directed") => true,
                    Some("undirected") => false,
                    _ => return Err(malformed(ln, "expected 'directed' or 'undirected'")),
                };
                header = Some((v, e, directed));
            }
            Some("v") => {
                let (n, _, _) = header.ok_or_else(|| malformed(ln, "vertex before header"))?;
                if configurations.len() == n {
                    return Err(malformed(ln, "more vertices than declared"));
                }
                let q = parse_reals(toks, JOINTS, ln)?;
                configurations.push(q.try_into().unwrap());
            }
            Some("e") => {
                let (n, _, _) = header.ok_or_else(|| malformed(ln, "edge before header"))?;
                let u = parse_vertex(toks.next().unwrap_or(""), n, ln)?;
                let v = parse_vertex(toks.next().unwrap_or(""), n, ln)?;
                let vals = parse_reals(toks, JOINTS + 2, ln)?;
                if vals[0] < 0.0 {
                    return Err(malformed(ln, "negative joint distance"));
                }
                edges.push(RoadmapEdge {
                    u,
                    v,
                    joint_distance: vals[0],
                    link_clearance: vals[1..=JOINTS].try_into().unwrap(),
                    min_clearance: vals[JOINTS + 1],
                });
            }
            Some(other) => return Err(malformed(ln, format!("unknown keyword {other:?}"))),
        }
    }
    let (n, m, directed) = header.ok_or_else(|| malformed(0, "missing roadmap header"))?;
    if configurations.len() != n {
        return Err(IngestError::DimensionMismatch {
            what: "roadmap vertices",
            expected: n,
            found: configurations.len(),
        });
    }
    if edges.len() != m {
        return Err(IngestError::DimensionMismatch {
            what: "roadmap edges",
            expected: m,
            found: edges.len(),
        });
    }
    Ok(ClearanceRoadmap {
        configurations,
        edges,
        directed,
    })
}

pub fn write_roadmap<W: Write>(map: &ClearanceRoadmap, mut out: W) -> Result<(), IngestError> {
    let kind = if map.directed { "directed" } else { "undirected" };
    writeln!(out, "roadmap {} {} {kind}", map.configurations.len(), map.edges.len())?;
    for q in &map.configurations {
        write!(out, "v")?;
        for x in q {
            write!(out, " {x}")?;
        }
        writeln!(out)?;
    }
    for e in &map.edges {
        write!(out, "e {} {} {}", e.u + 1, e.v + 1, e.joint_distance)?;
        for d in &e.link_clearance {
            write!(out, " {d}")?;
        }
        writeln!(out, " {}", e.min_clearance)?;
    }
    out.flush()?;
    Ok(())
}

/// Builds the bi- or many-objective roadmap graph. Objective 1 is the
/// joint-space edge length; the rest are clearance penalties with safety
/// band `delta` (metres). All objectives are stored at [`PANDA_SCALE`].
pub fn panda_apply_clearance(
    map: &ClearanceRoadmap,
    delta: f64,
    mode: ClearanceMode,
) -> Result<MosGraph, IngestError> {
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(IngestError::InvalidParameter(format!(
            "clearance band must be positive, got {delta}"
        )));
    }
    let mut names = vec!["joint_length".to_string()];
    match mode {
        ClearanceMode::Bi => names.push("clearance".into()),
        ClearanceMode::Many => names.extend((1..=JOINTS).map(|i| format!("clearance_link{i}"))),
    }
    let objectives = names.iter().map(|n| Objective::new(n.as_str(), PANDA_SCALE)).collect();
    let per_edge = if map.directed { 1 } else { 2 };
    let mut b = GraphBuilder::new(map.configurations.len(), objectives)
        .with_capacity(map.edges.len() * per_edge);
    let mut cost = Vec::with_capacity(JOINTS + 1);
    for (i, e) in map.edges.iter().enumerate() {
        if e.min_clearance <= 0.0 || e.link_clearance.iter().any(|&d| d <= 0.0) {
            return Err(IngestError::NonPositiveClearance { edge: i + 1 });
        }
        cost.clear();
        cost.push(to_fixed_point(e.joint_distance));
        match mode {
            ClearanceMode::Bi => cost.push(to_fixed_point(clearance_penalty(e.min_clearance, delta))),
            ClearanceMode::Many => cost.extend(
                e.link_clearance
                    .iter()
                    .map(|&d| to_fixed_point(clearance_penalty(d, delta))),
            ),
        }
        b.add_edge(e.u, e.v, &cost);
        if !map.directed {
            b.add_edge(e.v, e.u, &cost);
        }
    }
    b.meta("family", "panda")
        .meta("mode", if mode == ClearanceMode::Bi { "bi" } else { "many" })
        .meta("delta", delta);
    Ok(b.build()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const MAP: &str = "roadmap 3 2 undirected
v 0 0 0 0 0 0 0
v 0.5 0 0 0 0 0 0
v 1 0 0 0 0 0 0
e 1 2 0.5 0.3 0.25 0.09 0.05 0.2 0.2 0.2 0.05
e 2 3 0.5 0.3 0.3 0.3 0.3 0.3 0.3 0.3 0.3
";

    #[test]
    fn penalty_values() {
        assert_eq!(clearance_penalty(0.1, 0.1), 0.0);
        assert!((clearance_penalty(0.05, 0.1) - 0.0125).abs() < 1e-15);
        assert_eq!(to_fixed_point(clearance_penalty(0.05, 0.1)), 12_500);
        assert_eq!(clearance_penalty(0.5, 0.1), 0.0);
    }

    #[test]
    fn bi_and_many_modes() {
        let map = parse_roadmap(MAP.as_bytes()).unwrap();
        let bi = panda_apply_clearance(&map, 0.1, ClearanceMode::Bi).unwrap();
        assert_eq!(bi.dim(), 2);
        assert_eq!(bi.num_edges(), 4);
        assert_eq!(bi.cost(bi.find_edge(0, 1).unwrap()), &[500_000, 12_500]);
        assert_eq!(bi.cost(bi.find_edge(2, 1).unwrap()), &[500_000, 0]);

        let many = panda_apply_clearance(&map, 0.1, ClearanceMode::Many).unwrap();
        assert_eq!(many.dim(), 8);
        // (0.09 - 0.1)^2 / 0.2 = 0.0005
        assert_eq!(
            many.cost(many.find_edge(0, 1).unwrap()),
            &[500_000, 0, 0, 500, 12_500, 0, 0, 0]
        );
        assert!(many.objective_column(1).all(|c| c == 0));
        assert!(many.objective_column(2).all(|c| c == 0));
    }

    #[test]
    fn rejects_invalid_roadmaps() {
        let map = parse_roadmap(MAP.as_bytes()).unwrap();
        assert!(panda_apply_clearance(&map, 0.0, ClearanceMode::Bi).is_err());
        let mut bad = map.clone();
        bad.edges[1].link_clearance[3] = 0.0;
        assert!(matches!(
            panda_apply_clearance(&bad, 0.1, ClearanceMode::Many),
            Err(IngestError::NonPositiveClearance { edge: 2 })
        ));
        assert!(parse_roadmap("roadmap 1 0 sideways\n".as_bytes()).is_err());
        assert!(parse_roadmap("roadmap 2 0 directed\nv 0 0 0 0 0 0 0\n".as_bytes()).is_err());
    }

    #[test]
    fn round_trip() {
        let map = parse_roadmap(MAP.as_bytes()).unwrap();
        let mut buf = Vec::new();
        write_roadmap(&map, &mut buf).unwrap();
        assert_eq!(parse_roadmap(&buf[..]).unwrap(), map);
    }
}
