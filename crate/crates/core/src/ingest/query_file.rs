use std::io::{BufRead, Write};
use std::path::Path;

use crate::mos::{Query, QuerySet};

use super::{create, malformed, open, IngestError};

/// Writes one `q <source> <target>` line per query, in query order.
pub fn write_queries<W: Write>(queries: &[Query], mut out: W) -> Result<(), IngestError> {
    for q in queries {
        writeln!(out, "q {} {}", q.source + 1, q.target + 1)?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_queries_file(queries: &[Query], path: &Path) -> Result<(), IngestError> {
    write_queries(queries, create(path)?)
}

/// Reads `q` lines; indices follow file order. Ids are range-checked later
/// against a graph with [`Query::validate`].
pub fn read_queries<R: BufRead>(input: R) -> Result<QuerySet, IngestError> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let ln = i + 1;
        let mut toks = line.split_ascii_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("q") => {
                let mut ends = [0u32; 2];
                for e in ends.iter_mut() {
                    let t = toks.next().ok_or_else(|| malformed(ln, "expected 'q <source> <target>'"))?;
                    let v: u64 = t.parse().map_err(|_| malformed(ln, format!("bad vertex id {t:?}")))?;
                    if v == 0 || v > u32::MAX as u64 {
                        return Err(malformed(ln, format!("vertex id {v} out of range")));
                    }
                    *e = (v - 1) as u32;
                }
                if toks.next().is_some() {
                    return Err(malformed(ln, "trailing tokens on query line"));
                }
                out.push(Query::new(out.len(), ends[0], ends[1]));
            }
            Some(other) => return Err(malformed(ln, format!("unknown keyword {other:?}"))),
        }
    }
    Ok(out)
}

pub fn read_queries_file(path: &Path) -> Result<QuerySet, IngestError> {
    read_queries(open(path)?)
}
