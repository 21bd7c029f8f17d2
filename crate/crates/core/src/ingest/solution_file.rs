use std::io::{BufRead, Write};
use std::path::Path;

use crate::mos::{CostVector, Epsilon, Objective, Query, Solution, SolutionSet};

use super::{create, malformed, open, parse_cost, IngestError};

/// Writes solution sets, one block per set:
///
/// ```text
/// c objectives <name_1> ... <name_d>
/// c query <index> <source> <target>
/// r <index> <epsilon_csv> <count>
/// x <c_1> ... <c_d> : <v_1> ... <v_k>
/// ```
///
/// Entries are written in lexicographic cost order. The `: path` suffix is
/// written only when `with_paths` is set and the entry carries a path.
pub fn write_solutions<W: Write>(
    sets: &[SolutionSet],
    objectives: &[Objective],
    with_paths: bool,
    mut out: W,
) -> Result<(), IngestError> {
    write!(out, "c objectives")?;
    for o in objectives {
        write!(out, " {}", o.name)?;
    }
    writeln!(out)?;
    for set in sets {
        let q = set.query;
        writeln!(out, "c query {} {} {}", q.index + 1, q.source + 1, q.target + 1)?;
        writeln!(out, "r {} {} {}", q.index + 1, set.epsilon, set.len())?;
        let mut entries: Vec<&Solution> = set.entries.iter().collect();
        entries.sort_by(|a, b| a.cost.lex_cmp(&b.cost));
        for s in entries {
            write!(out, "x")?;
            for c in s.cost.values() {
                write!(out, " {c}")?;
            }
            if let (true, Some(path)) = (with_paths, &s.path) {
                write!(out, " :")?;
                for v in path {
                    write!(out, " {}", v + 1)?;
                }
            }
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}

pub fn write_solutions_file(
    sets: &[SolutionSet],
    objectives: &[Objective],
    with_paths: bool,
    path: &Path,
) -> Result<(), IngestError> {
    write_solutions(sets, objectives, with_paths, create(path)?)
}

struct Block {
    query: Option<Query>,
    index: usize,
    epsilon: Epsilon,
    count: usize,
    entries: Vec<Solution>,
    line: usize,
}

fn finish(block: Block, dim: &mut Option<usize>) -> Result<SolutionSet, IngestError> {
    if block.entries.len() != block.count {
        return Err(malformed(
            block.line,
            format!("block declares {} entries, found {}", block.count, block.entries.len()),
        ));
    }
    let query = match block.query {
        Some(q) => q,
        None => {
            let path = block
                .entries
                .first()
                .and_then(|s| s.path.as_ref())
                .ok_or_else(|| malformed(block.line, "block has no query endpoints"))?;
            Query::new(block.index, path[0], *path.last().unwrap())
        }
    };
    if let Some(d) = *dim {
        if !block.epsilon.fits(d) {
            return Err(malformed(block.line, "epsilon does not match the objective count"));
        }
    }
    Ok(SolutionSet {
        query,
        epsilon: block.epsilon,
        entries: block.entries,
    })
}

/// Reads solution blocks written by [`write_solutions`].
pub fn read_solutions<R: BufRead>(input: R) -> Result<Vec<SolutionSet>, IngestError> {
    let mut sets = Vec::new();
    let mut dim: Option<usize> = None;
    let mut pending_query: Option<Query> = None;
    let mut block: Option<Block> = None;

    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let ln = i + 1;
        let mut toks = line.split_ascii_whitespace();
        match toks.next() {
            None => continue,
            Some("c") => match toks.next() {
                Some("objectives") => {
                    let d = toks.count();
                    if d > 0 {
                        dim = Some(d);
                    }
                }
                Some("query") => {
                    let nums: Vec<u64> = toks
                        .map(|t| t.parse().map_err(|_| malformed(ln, format!("bad number {t:?}"))))
                        .collect::<Result<_, _>>()?;
                    if nums.len() != 3 || nums.contains(&0) {
                        return Err(malformed(ln, "expected 'c query <index> <source> <target>'"));
                    }
                    pending_query =
                        Some(Query::new((nums[0] - 1) as usize, (nums[1] - 1) as u32, (nums[2] - 1) as u32));
                }
                _ => {}
            },
            Some("r") => {
                if let Some(b) = block.take() {
                    sets.push(finish(b, &mut dim)?);
                }
                let index: usize = toks
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .filter(|&i| i > 0)
                    .ok_or_else(|| malformed(ln, "bad query index"))?
                    - 1;
                let epsilon = Epsilon::parse(toks.next().unwrap_or(""))
                    .map_err(|e| malformed(ln, e.to_string()))?;
                let count: usize = toks
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| malformed(ln, "bad entry count"))?;
                if toks.next().is_some() {
                    return Err(malformed(ln, "trailing tokens on result line"));
                }
                let query = pending_query.take();
                if let Some(q) = query {
                    if q.index != index {
                        return Err(malformed(ln, "result line does not match preceding query line"));
                    }
                }
                block = Some(Block {
                    query,
                    index,
                    epsilon,
                    count,
                    entries: Vec::new(),
                    line: ln,
                });
            }
            Some("x") => {
                let b = block.as_mut().ok_or_else(|| malformed(ln, "entry outside a result block"))?;
                let mut cost = Vec::new();
                let mut path: Option<Vec<u32>> = None;
                for t in toks {
                    if t == ":" {
                        if path.is_some() {
                            return Err(malformed(ln, "repeated ':'"));
                        }
                        path = Some(Vec::new());
                    } else if let Some(p) = path.as_mut() {
                        let v: u64 = t.parse().map_err(|_| malformed(ln, format!("bad vertex id {t:?}")))?;
                        if v == 0 || v > u32::MAX as u64 {
                            return Err(malformed(ln, format!("vertex id {v} out of range")));
                        }
                        p.push((v - 1) as u32);
                    } else {
                        cost.push(parse_cost(t, ln)?);
                    }
                }
                match dim {
                    None if !cost.is_empty() => dim = Some(cost.len()),
                    Some(d) if d == cost.len() => {}
                    _ => return Err(malformed(ln, "cost dimension differs from the header")),
                }
                if path.as_ref().is_some_and(Vec::is_empty) {
                    return Err(malformed(ln, "empty witness path"));
                }
                b.entries.push(Solution {
                    cost: CostVector::new(cost),
                    path,
                });
            }
            Some(other) => return Err(malformed(ln, format!("unknown keyword {other:?}"))),
        }
    }
    if let Some(b) = block.take() {
        sets.push(finish(b, &mut dim)?);
    }
    Ok(sets)
}

pub fn read_solutions_file(path: &Path) -> Result<Vec<SolutionSet>, IngestError> {
    read_solutions(open(path)?)
}
