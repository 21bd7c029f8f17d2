use std::io::{BufRead, Write};

use crate::mos::{GraphBuilder, MosGraph, Objective, VertexId};

use super::{malformed, IngestError};

pub const ORTHOGONAL_COST: u64 = 10;
pub const DIAGONAL_COST: u64 = 14;

/// A grid map whose passable cells carry a guard-exposure count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuardGrid {
    pub width: usize,
    pub height: usize,
    /// Row-major; `None` is an impassable cell.
    pub cells: Vec<Option<u32>>,
}

impl GuardGrid {
    pub fn new(width: usize, height: usize, cells: Vec<Option<u32>>) -> Result<Self, IngestError> {
        if cells.len() != width * height {
            return Err(IngestError::DimensionMismatch {
                what: "cells",
                expected: width * height,
                found: cells.len(),
            });
        }
        Ok(GuardGrid { width, height, cells })
    }

    pub fn get(&self, x: isize, y: isize) -> Option<u32> {
        if x < 0 || y < 0 || x as usize >= self.width || y as usize >= self.height {
            return None;
        }
        self.cells[y as usize * self.width + x as usize]
    }

    pub fn passable_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }

    /// Graph vertex of each cell: passable cells numbered row-major.
    pub fn vertex_ids(&self) -> Vec<Option<VertexId>> {
        let mut next = 0;
        self.cells
            .iter()
            .map(|c| {
                c.map(|_| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    }
}

/// Reads a guard map: a `guards <width> <height>` header, then `height`
/// rows of `width` whitespace-separated tokens, each `@` (impassable) or a
/// guard count. Lines starting with `c` before the header are comments.
pub fn parse_guards_map<R: BufRead>(input: R) -> Result<GuardGrid, IngestError> {
    let mut dims: Option<(usize, usize)> = None;
    let mut cells = Vec::new();
    let mut rows = 0;
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let ln = i + 1;
        let toks: Vec<&str> = line.split_ascii_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        let Some((w, h)) = dims else {
            match toks[0] {
                "c" => continue,
                "guards" if toks.len() == 3 => {
                    let w = toks[1].parse().map_err(|_| malformed(ln, "bad width"))?;
                    let h = toks[2].parse().map_err(|_| malformed(ln, "bad height"))?;
                    dims = Some((w, h));
                    cells.reserve(w * h);
                    continue;
                }
                _ => return Err(malformed(ln, "expected 'guards <width> <height>'")),
            }
        };
        rows += 1;
        if rows > h {
            return Err(IngestError::DimensionMismatch {
                what: "rows",
                expected: h,
                found: rows,
            });
        }
        if toks.len() != w {
            return Err(IngestError::DimensionMismatch {
                what: "columns",
                expected: w,
                found: toks.len(),
            });
        }
        for (col, t) in toks.iter().enumerate() {
            let cell = if *t == "@" {
                None
            } else {
                Some(t.parse::<u32>().map_err(|_| IngestError::BadToken {
                    row: rows,
                    col: col + 1,
                    token: t.to_string(),
                })?)
            };
            cells.push(cell);
        }
    }
    let (w, h) = dims.ok_or_else(|| malformed(0, "missing guards header"))?;
    if rows != h {
        return Err(IngestError::DimensionMismatch {
            what: "rows",
            expected: h,
            found: rows,
        });
    }
    GuardGrid::new(w, h, cells)
}

pub fn write_guards_map<W: Write>(grid: &GuardGrid, mut out: W) -> Result<(), IngestError> {
    writeln!(out, "guards {} {}", grid.width, grid.height)?;
    for row in grid.cells.chunks(grid.width.max(1)).take(grid.height) {
        let line: Vec<String> = row
            .iter()
            .map(|c| c.map_or_else(|| "@".to_string(), |g| g.to_string()))
            .collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    out.flush()?;
    Ok(())
}

/// Moves in the order N, NE, E, SE, S, SW, W, NW (y grows downwards).
const MOVES: [(isize, isize); 8] = [
    (0, -1),
    (1, -1),
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (-1, -1),
];

/// Converts a guard map into a directed eight-connected bi-objective graph
/// with objectives `(length, exposure)`.
///
/// Orthogonal moves cost `(10, guards(dest))`. Diagonal moves cost
/// `(14, max(guards(dest), guards(side_1), guards(side_2)))` and exist only
/// when both side cells are passable.
pub fn guards_to_graph(grid: &GuardGrid) -> Result<MosGraph, IngestError> {
    let ids = grid.vertex_ids();
    let mut b = GraphBuilder::new(
        grid.passable_count(),
        Objective::unit_scaled(&["length", "exposure"]),
    )
    .with_capacity(grid.passable_count() * 8);
    for y in 0..grid.height as isize {
        for x in 0..grid.width as isize {
            let Some(u) = ids[y as usize * grid.width + x as usize] else {
                continue;
            };
            for (dx, dy) in MOVES {
                let Some(dest) = grid.get(x + dx, y + dy) else {
                    continue;
                };
                let v = ids[(y + dy) as usize * grid.width + (x + dx) as usize]
                    .expect("passable cell has a vertex");
                let cost = if dx == 0 || dy == 0 {
                    [ORTHOGONAL_COST, dest as u64]
                } else {
                    match (grid.get(x + dx, y), grid.get(x, y + dy)) {
                        (Some(a), Some(b)) => [DIAGONAL_COST, dest.max(a).max(b) as u64],
                        _ => continue,
                    }
                };
                b.add_edge(u, v, &cost);
            }
        }
    }
    b.meta("family", "guards")
        .meta("width", grid.width)
        .meta("height", grid.height);
    Ok(b.build()?)
}
