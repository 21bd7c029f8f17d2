use std::io::{BufRead, Write};
use std::path::Path;

use crate::mos::{GraphBuilder, MosGraph, Objective};

use super::{create, malformed, open, parse_cost, parse_count, parse_vertex, IngestError};

/// Writes the canonical graph format:
///
/// ```text
/// c objectives <name_1> ... <name_d>
/// c meta <key> <value>
/// p mosp <V> <E> <d>
/// s <scale_1> ... <scale_d>
/// a <u> <v> <c_1> ... <c_d>
/// ```
///
/// The `s` line is omitted when every scale is 1. Arcs follow the graph's
/// canonical `(u, v, cost)` order.
pub fn write_graph<W: Write>(graph: &MosGraph, mut out: W) -> Result<(), IngestError> {
    write!(out, "c objectives")?;
    for o in graph.objectives() {
        if o.name.is_empty() || o.name.contains(char::is_whitespace) {
            return Err(IngestError::InvalidParameter(format!(
                "objective name {:?} must be a single token",
                o.name
            )));
        }
        write!(out, " {}", o.name)?;
    }
    writeln!(out)?;
    for (k, v) in graph.metadata() {
        if k.is_empty() || k.contains(char::is_whitespace) || v.contains('\n') {
            return Err(IngestError::InvalidParameter(format!("bad metadata entry {k:?}")));
        }
        writeln!(out, "c meta {k} {v}")?;
    }
    writeln!(out, "p mosp {} {} {}", graph.num_vertices(), graph.num_edges(), graph.dim())?;
    if graph.objectives().iter().any(|o| o.scale != 1) {
        write!(out, "s")?;
        for o in graph.objectives() {
            write!(out, " {}", o.scale)?;
        }
        writeln!(out)?;
    }
    for e in graph.edges() {
        write!(out, "a {} {}", e.tail + 1, e.head + 1)?;
        for c in e.cost {
            write!(out, " {c}")?;
        }
        writeln!(out)?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_graph_file(graph: &MosGraph, path: &Path) -> Result<(), IngestError> {
    write_graph(graph, create(path)?)
}

struct Header {
    vertices: usize,
    edges: usize,
    dim: usize,
}

/// Reads the canonical graph format written by [`write_graph`].
pub fn read_graph<R: BufRead>(input: R) -> Result<MosGraph, IngestError> {
    let mut names: Option<Vec<String>> = None;
    let mut meta: Vec<(String, String)> = Vec::new();
    let mut header: Option<Header> = None;
    let mut scales: Option<Vec<u64>> = None;
    let mut builder: Option<GraphBuilder> = None;
    let mut cost: Vec<u64> = Vec::new();

    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let ln = i + 1;
        let mut toks = line.split_ascii_whitespace();
        let Some(kw) = toks.next() else { continue };
        match kw {
            "c" => match toks.next() {
                Some("objectives") => names = Some(toks.map(str::to_string).collect()),
                Some("meta") => {
                    let rest = line.trim_start()[1..].trim_start()["meta".len()..].trim_start();
                    let (k, v) = rest.split_once(' ').unwrap_or((rest, ""));
                    if k.is_empty() {
                        return Err(malformed(ln, "metadata entry without key"));
                    }
                    meta.push((k.to_string(), v.to_string()));
                }
                _ => {}
            },
            "p" => {
                if header.is_some() {
                    return Err(malformed(ln, "duplicate problem line"));
                }
                if toks.next() != Some("mosp") {
                    return Err(malformed(ln, "expected 'p mosp <V> <E> <d>'"));
                }
                let vertices = parse_count(toks.next(), ln, "vertex count")?;
                let edges = parse_count(toks.next(), ln, "edge count")?;
                let dim = parse_count(toks.next(), ln, "objective count")?;
                if dim == 0 {
                    return Err(malformed(ln, "objective count must be positive"));
                }
                if toks.next().is_some() {
                    return Err(malformed(ln, "trailing tokens on problem line"));
                }
                header = Some(Header {
                    vertices,
                    edges,
                    dim,
                });
            }
            "s" => {
                let h = header.as_ref().ok_or_else(|| malformed(ln, "scale line before problem line"))?;
                if scales.is_some() || builder.is_some() {
                    return Err(malformed(ln, "scale line must directly follow the problem line"));
                }
                let s: Vec<u64> = toks
                    .map(|t| t.parse().map_err(|_| malformed(ln, format!("bad scale {t:?}"))))
                    .collect::<Result<_, _>>()?;
                if s.len() != h.dim {
                    return Err(malformed(ln, format!("expected {} scales, found {}", h.dim, s.len())));
                }
                if s.contains(&0) {
                    return Err(malformed(ln, "scale must be positive"));
                }
                scales = Some(s);
            }
            "a" => {
                let h = header.as_ref().ok_or_else(|| malformed(ln, "arc before problem line"))?;
                let b = match builder.as_mut() {
                    Some(b) => b,
                    None => {
                        let names = names.take().unwrap_or_else(|| {
                            (1..=h.dim).map(|i| format!("c{i}")).collect()
                        });
                        if names.len() != h.dim {
                            return Err(malformed(
                                ln,
                                format!("{} objective names for {} objectives", names.len(), h.dim),
                            ));
                        }
                        let scales = scales.take().unwrap_or_else(|| vec![1; h.dim]);
                        let objectives = names
                            .into_iter()
                            .zip(scales)
                            .map(|(n, s)| Objective::new(n, s))
                            .collect();
                        builder.insert(GraphBuilder::new(h.vertices, objectives).with_capacity(h.edges))
                    }
                };
                let u = parse_vertex(toks.next().unwrap_or(""), h.vertices, ln)?;
                let v = parse_vertex(toks.next().unwrap_or(""), h.vertices, ln)?;
                cost.clear();
                for t in toks {
                    cost.push(parse_cost(t, ln)?);
                }
                if cost.len() != h.dim {
                    return Err(malformed(ln, format!("expected {} costs, found {}", h.dim, cost.len())));
                }
                b.add_edge(u, v, &cost);
            }
            other => return Err(malformed(ln, format!("unknown keyword {other:?}"))),
        }
    }

    let h = header.ok_or_else(|| malformed(0, "missing problem line"))?;
    let mut b = match builder {
        Some(b) => b,
        None => {
            let names = names.unwrap_or_else(|| (1..=h.dim).map(|i| format!("c{i}")).collect());
            if names.len() != h.dim {
                return Err(malformed(0, "objective names do not match objective count"));
            }
            let scales = scales.unwrap_or_else(|| vec![1; h.dim]);
            GraphBuilder::new(
                h.vertices,
                names.into_iter().zip(scales).map(|(n, s)| Objective::new(n, s)).collect(),
            )
        }
    };
    if b.num_edges() != h.edges {
        return Err(malformed(
            0,
            format!("header declares {} arcs, file has {}", h.edges, b.num_edges()),
        ));
    }
    for (k, v) in meta {
        b.meta(k, v);
    }
    Ok(b.build()?)
}

pub fn read_graph_file(path: &Path) -> Result<MosGraph, IngestError> {
    read_graph(open(path)?)
}
