use std::collections::VecDeque;

use mosbench::generators::{
    generate_grid, generate_netmaker, is_cycle_cost, sample_netmaker_queries, GridSpec,
    NetMakerSpec, CYCLE_COST_BANDS,
};
use mosbench::mos::{correlation_matrix_where, objective_correlation_matrix, MosGraph};

/// Edge list of the N=20, a_min=1, a_max=4, I=4, seed=2024 instance, produced
/// by the independent simulation in tests/oracles/netmaker_toy.py.
const TOY_EDGES: &[(u32, u32, [u64; 3])] = &[
    (1, 3, [96, 83, 83]),
    (1, 16, [8, 673, 435]),
    (2, 1, [50, 4, 54]),
    (2, 4, [68, 64, 27]),
    (2, 19, [138, 951, 371]),
    (3, 1, [80, 93, 28]),
    (3, 5, [1, 30, 32]),
    (3, 12, [105, 666, 832]),
    (4, 2, [78, 98, 81]),
    (4, 5, [72, 63, 72]),
    (4, 10, [283, 717, 413]),
    (5, 3, [97, 65, 68]),
    (5, 4, [22, 83, 24]),
    (5, 18, [85, 570, 923]),
    (6, 2, [542, 30, 832]),
    (6, 5, [25, 82, 58]),
    (6, 7, [89, 72, 55]),
    (6, 8, [65, 3, 26]),
    (7, 5, [8, 68, 23]),
    (7, 6, [69, 75, 2]),
    (7, 14, [198, 347, 894]),
    (8, 6, [75, 787, 447]),
    (8, 7, [45, 8, 28]),
    (8, 9, [67, 52, 48]),
    (8, 10, [10, 91, 66]),
    (9, 7, [19, 11, 30]),
    (9, 10, [81, 27, 94]),
    (9, 11, [53, 9, 33]),
    (9, 20, [755, 213, 664]),
    (10, 1, [836, 57, 417]),
    (10, 8, [93, 83, 28]),
    (10, 12, [41, 77, 25]),
    (11, 8, [217, 491, 678]),
    (11, 10, [15, 51, 78]),
    (11, 13, [11, 74, 95]),
    (12, 11, [9, 59, 73]),
    (12, 15, [652, 308, 820]),
    (13, 4, [829, 250, 475]),
    (13, 11, [91, 15, 77]),
    (13, 12, [87, 41, 84]),
    (13, 15, [89, 24, 91]),
    (14, 11, [84, 728, 610]),
    (14, 12, [96, 96, 41]),
    (14, 15, [49, 74, 19]),
    (15, 7, [627, 883, 273]),
    (15, 13, [56, 78, 29]),
    (15, 16, [49, 7, 56]),
    (15, 17, [78, 39, 37]),
    (16, 14, [11, 60, 66]),
    (16, 15, [97, 66, 98]),
    (16, 17, [906, 324, 400]),
    (16, 18, [35, 74, 51]),
    (17, 3, [424, 956, 236]),
    (17, 15, [48, 21, 55]),
    (18, 13, [986, 515, 133]),
    (18, 16, [67, 11, 38]),
    (18, 19, [57, 11, 59]),
    (19, 9, [705, 243, 646]),
    (19, 18, [78, 65, 22]),
    (20, 5, [260, 873, 504]),
    (20, 19, [33, 31, 39]),
];

#[test]
fn netmaker_toy_matches_independent_simulation() {
    let mut spec = NetMakerSpec::new(20, 4, 2024);
    spec.max_out_degree = 4;
    let g = generate_netmaker(&spec).unwrap().graph;
    let got: Vec<(u32, u32, [u64; 3])> = g
        .edges()
        .map(|e| (e.tail + 1, e.head + 1, [e.cost[0], e.cost[1], e.cost[2]]))
        .collect();
    assert_eq!(got, TOY_EDGES);
}

fn reachable_count(g: &MosGraph, forward: bool) -> usize {
    let mut seen = vec![false; g.num_vertices()];
    let mut queue = VecDeque::from([0u32]);
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        let next: Vec<u32> = if forward {
            g.out_edges(u).map(|e| g.head(e)).collect()
        } else {
            g.in_edges(u).iter().map(|&e| g.tail(e as usize)).collect()
        };
        for v in next {
            if !seen[v as usize] {
                seen[v as usize] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    count
}

#[test]
fn netmaker_structural_invariants() {
    let spec = NetMakerSpec::new(2_000, 20, 77);
    let nm = generate_netmaker(&spec).unwrap();
    let g = &nm.graph;
    assert!(nm.truncated.is_empty());
    assert_eq!(reachable_count(g, true), 2_000);
    assert_eq!(reachable_count(g, false), 2_000);
    let mut cycle = 0;
    for e in g.edges() {
        if is_cycle_cost(e.cost) {
            cycle += 1;
            let mut bands: Vec<usize> = e
                .cost
                .iter()
                .map(|&c| CYCLE_COST_BANDS.iter().position(|&(lo, hi)| lo <= c && c <= hi).unwrap())
                .collect();
            bands.sort();
            assert_eq!(bands, vec![0, 1, 2]);
        } else {
            assert!(e.cost.iter().all(|&c| (1..=99).contains(&c)));
            assert!(e.tail.abs_diff(e.head) <= 10, "{e:?}");
            assert_ne!(e.tail, e.head);
        }
    }
    assert_eq!(cycle, 2_000);
    for u in 0..2_000u32 {
        let deg = g.out_degree(u);
        assert!((1..=10).contains(&deg), "vertex {u} has degree {deg}");
        // no duplicate heads
        let mut heads: Vec<u32> = g.out_edges(u).map(|e| g.head(e)).collect();
        heads.dedup();
        assert_eq!(heads.len(), deg);
    }
}

#[test]
fn netmaker_is_a_pure_function_of_its_spec() {
    let spec = NetMakerSpec::new(500, 20, 5);
    let a = generate_netmaker(&spec).unwrap().graph;
    let b = generate_netmaker(&spec).unwrap().graph;
    assert_eq!(a, b);
    let c = generate_netmaker(&NetMakerSpec::new(500, 20, 6)).unwrap().graph;
    assert_ne!(a, c);
}

#[test]
fn netmaker_queries_use_first_and_last_tenth() {
    let g = generate_netmaker(&NetMakerSpec::new(10_000, 20, 1)).unwrap().graph;
    let qs = sample_netmaker_queries(&g, 50, 1).unwrap();
    assert_eq!(qs.len(), 50);
    // zero-based: sources <= 999, targets >= 9000
    assert!(qs.iter().all(|q| q.source <= 999 && q.target >= 9_000));
}

#[test]
fn grid_counts_match_analytic_enumeration() {
    let (g, q) = generate_grid(&GridSpec::new(300, 300, 2, 7)).unwrap();
    assert_eq!(g.num_vertices(), 90_002);
    assert_eq!(g.num_edges(), 358_800 + 600);
    assert_eq!(g.out_degree(q.source), 300);
    assert_eq!(g.in_degree(q.target), 300);
}

#[test]
fn grid_costs_are_uniform_and_uncorrelated() {
    let (g, q) = generate_grid(&GridSpec::new(300, 300, 4, 19)).unwrap();
    let mut bins = [0u64; 10];
    let mut sampled = 0u64;
    for e in g.edges() {
        if e.tail == q.source || e.head == q.target {
            continue;
        }
        for &c in e.cost {
            assert!((1..=10).contains(&c));
            if sampled < 100_000 {
                bins[c as usize - 1] += 1;
                sampled += 1;
            }
        }
    }
    let expected = sampled as f64 / 10.0;
    let chi2: f64 = bins.iter().map(|&o| (o as f64 - expected).powi(2) / expected).sum();
    // chi-squared critical value, 9 degrees of freedom, alpha = 0.001
    assert!(chi2 < 27.877, "chi2 = {chi2}");

    let interior = correlation_matrix_where(&g, |c| c.iter().all(|&x| x > 0)).unwrap();
    for (i, j, r) in interior.pairs() {
        assert!(r.unwrap().abs() < 0.02, "rho[{i},{j}] = {r:?}");
    }
    let all = objective_correlation_matrix(&g).unwrap();
    for (_, _, r) in all.pairs() {
        assert!(r.unwrap().abs() < 0.02);
    }
}

#[test]
fn grid_is_a_pure_function_of_its_spec() {
    let spec = GridSpec::new(40, 30, 3, 99);
    assert_eq!(generate_grid(&spec).unwrap(), generate_grid(&spec).unwrap());
}
