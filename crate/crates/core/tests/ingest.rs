use std::collections::BTreeSet;

use mosbench::ingest::{
    clearance_penalty, extend_dimacs, extract_connected_subgraph, guards_to_graph,
    panda_apply_clearance, parse_dimacs, parse_roadmap, read_elevation, read_graph,
    read_queries, read_solutions, to_fixed_point, write_graph, write_queries, write_roadmap,
    write_solutions, ClearanceMode, GuardGrid, IngestError, PANDA_SCALE,
};
use mosbench::mos::{CostVector, Epsilon, Query, Solution, SolutionSet};

/// Expected out-moves of the centre cell of a 3x3 map, computed cell by cell.
fn centre_moves(cells: &[Option<u32>; 9]) -> BTreeSet<(usize, u64, u64)> {
    let at = |x: i32, y: i32| cells[(y * 3 + x) as usize];
    let mut out = BTreeSet::new();
    for dy in -1..=1 {
        for dx in -1..=1 {
            if (dx, dy) == (0, 0) {
                continue;
            }
            let Some(dest) = at(1 + dx, 1 + dy) else { continue };
            let cell = ((1 + dy) * 3 + 1 + dx) as usize;
            if dx == 0 || dy == 0 {
                out.insert((cell, 10, dest as u64));
            } else if let (Some(a), Some(b)) = (at(1 + dx, 1), at(1, 1 + dy)) {
                out.insert((cell, 14, [dest, a, b].into_iter().max().unwrap() as u64));
            }
        }
    }
    out
}

#[test]
fn guards_moves_exhaustive_three_by_three() {
    let exposures: [[u32; 9]; 3] = [
        [1, 2, 3, 4, 5, 6, 7, 8, 9],
        [9, 8, 7, 6, 5, 4, 3, 2, 1],
        [0, 5, 0, 5, 0, 5, 0, 5, 0],
    ];
    let mut checked = 0;
    for exposure in exposures {
        for mask in 0u32..512 {
            if mask & (1 << 4) == 0 {
                continue;
            }
            let mut cells = [None; 9];
            for (i, c) in cells.iter_mut().enumerate() {
                if mask & (1 << i) != 0 {
                    *c = Some(exposure[i]);
                }
            }
            let grid = GuardGrid::new(3, 3, cells.to_vec()).unwrap();
            let g = guards_to_graph(&grid).unwrap();
            let ids = grid.vertex_ids();
            let cell_of: Vec<usize> = (0..9).filter(|&i| ids[i].is_some()).collect();
            let centre = ids[4].unwrap();
            let got: BTreeSet<_> = g
                .out_edges(centre)
                .map(|e| {
                    let c = g.cost(e);
                    (cell_of[g.head(e) as usize], c[0], c[1])
                })
                .collect();
            assert_eq!(got, centre_moves(&cells), "mask {mask:09b}");
            assert_eq!(got.len(), g.out_degree(centre));
            checked += 1;
        }
    }
    assert_eq!(checked, 768);
}

const DIST: &str = "c truncated road network excerpt
p sp 5 7
a 1 2 803
a 2 1 803
a 2 3 158
a 3 4 774
a 4 5 1205
a 5 1 300
a 1 3 1100
";
const TIME: &str = "c travel times
p sp 5 7
a 1 2 2008
a 2 1 2008
a 2 3 395
a 3 4 1935
a 4 5 3013
a 5 1 750
a 1 3 2600
";

#[test]
fn dimacs_excerpt_round_trip() {
    let g = parse_dimacs(DIST.as_bytes(), TIME.as_bytes()).unwrap();
    assert_eq!((g.num_vertices(), g.num_edges(), g.dim()), (5, 7, 2));
    assert_eq!(g.cost(g.find_edge(3, 4).unwrap()), &[1205, 3013]);
    let mut buf = Vec::new();
    write_graph(&g, &mut buf).unwrap();
    let back = read_graph(buf.as_slice()).unwrap();
    assert_eq!(back, g);
    let mut again = Vec::new();
    write_graph(&back, &mut again).unwrap();
    assert_eq!(buf, again);

    let elev = read_elevation("p elev 5\nv 1 10.0\nv 2 12.5\nv 3 12.5\nv 4 9.0\nv 5 10.0\n".as_bytes())
        .unwrap();
    let ext = extend_dimacs(&g, Some(&elev), 5).unwrap();
    assert_eq!(ext.dim(), 5);
    // elevation in centimetres, degree sum in half units, hop count
    assert_eq!(ext.cost(ext.find_edge(0, 1).unwrap())[2..], [250, 4 + 3, 1]);
    let mut buf = Vec::new();
    write_graph(&ext, &mut buf).unwrap();
    assert_eq!(read_graph(buf.as_slice()).unwrap(), ext);

    let sub = extract_connected_subgraph(&g, 2, Some(3)).unwrap();
    assert_eq!(sub.original, vec![2, 3, 4]);
    assert_eq!(sub.graph.num_edges(), 2);
}

#[test]
fn dimacs_rejects_inconsistent_inputs() {
    let shifted = TIME.replace("a 2 3 395", "a 3 2 395");
    assert!(matches!(
        parse_dimacs(DIST.as_bytes(), shifted.as_bytes()),
        Err(IngestError::ArcSetMismatch { arc: 3 })
    ));
    let negative = DIST.replace("a 2 3 158", "a 2 3 -158");
    assert!(matches!(
        parse_dimacs(negative.as_bytes(), TIME.as_bytes()),
        Err(IngestError::NegativeCost { line: 5 })
    ));
}

#[test]
fn clearance_penalty_values_and_continuity() {
    assert_eq!(clearance_penalty(0.1, 0.1), 0.0);
    assert_eq!(to_fixed_point(clearance_penalty(0.05, 0.1)), 12_500);
    assert!((clearance_penalty(0.05, 0.1) - 0.0125).abs() < 1e-12);
    let below = f64::from_bits(0.1f64.to_bits() - 1);
    assert!(to_fixed_point(clearance_penalty(below, 0.1)) <= 1);
    let ulp = 1.0 / PANDA_SCALE as f64;
    assert!(clearance_penalty(0.1 - ulp, 0.1) * (PANDA_SCALE as f64) < 1.0);
    // non-increasing in clearance
    let mut prev = f64::INFINITY;
    for i in 1..=120 {
        let u = clearance_penalty(i as f64 / 1000.0, 0.1);
        assert!(u <= prev);
        prev = u;
    }
}

#[test]
fn roadmap_round_trip_and_modes() {
    let text = "roadmap 3 2 undirected
v 0 0 0 0 0 0 0
v 0.5 0 0 0 0 0 0
v 1 0 0 0 0 0 0
e 1 2 0.5 0.3 0.25 0.09 0.05 0.2 0.2 0.2 0.05
e 2 3 0.5 0.3 0.3 0.3 0.3 0.3 0.3 0.3 0.3
";
    let map = parse_roadmap(text.as_bytes()).unwrap();
    let mut buf = Vec::new();
    write_roadmap(&map, &mut buf).unwrap();
    assert_eq!(parse_roadmap(buf.as_slice()).unwrap(), map);

    let bi = panda_apply_clearance(&map, 0.1, ClearanceMode::Bi).unwrap();
    assert_eq!((bi.dim(), bi.num_edges()), (2, 4));
    assert_eq!(bi.cost(bi.find_edge(1, 0).unwrap()), &[500_000, 12_500]);
    let many = panda_apply_clearance(&map, 0.1, ClearanceMode::Many).unwrap();
    assert_eq!(many.dim(), 8);
    assert_eq!(
        many.cost(many.find_edge(0, 1).unwrap()),
        &[500_000, 0, 0, 500, 12_500, 0, 0, 0]
    );
    assert!(many.cost(many.find_edge(1, 2).unwrap())[1..].iter().all(|&c| c == 0));
}

#[test]
fn query_and_solution_files_round_trip() {
    let qs = vec![Query::new(0, 0, 4), Query::new(1, 3, 1)];
    let mut buf = Vec::new();
    write_queries(&qs, &mut buf).unwrap();
    assert_eq!(read_queries(buf.as_slice()).unwrap(), qs);

    let g = parse_dimacs(DIST.as_bytes(), TIME.as_bytes()).unwrap();
    let sets = vec![
        SolutionSet::new(
            qs[0],
            Epsilon::parse("0.05").unwrap(),
            vec![
                Solution::new(CostVector::from(vec![1100 + 774 + 1205, 2600 + 1935 + 3013]), vec![0, 2, 3, 4]),
                Solution::new(CostVector::from(vec![803 + 158 + 774 + 1205, 2008 + 395 + 1935 + 3013]), vec![0, 1, 2, 3, 4]),
            ],
        ),
        SolutionSet::new(qs[1], Epsilon::parse("0.05").unwrap(), vec![]),
    ];
    let mut buf = Vec::new();
    write_solutions(&sets, g.objectives(), true, &mut buf).unwrap();
    assert_eq!(read_solutions(buf.as_slice()).unwrap(), sets);
    let mut buf = Vec::new();
    write_solutions(&sets, g.objectives(), false, &mut buf).unwrap();
    let costs_only = read_solutions(buf.as_slice()).unwrap();
    assert!(costs_only[0].entries.iter().all(|s| s.path.is_none()));
}
