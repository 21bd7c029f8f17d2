use mosbench::generators::rng::SplitMix64;
use mosbench::mos::{
    eps_covers_slice, weakly_dominates_slice, Epsilon, GraphBuilder, MosGraph, Objective, Query,
};
use mosbench::solvers::{
    brute_force_pareto, ideal_point_heuristic, search, solve_approx, solve_exact, SolveError,
};
use proptest::prelude::*;

fn random_graph(rng: &mut SplitMix64, n: usize, m: usize, d: usize, max_cost: u64) -> MosGraph {
    let names: Vec<String> = (1..=d).map(|i| format!("c{i}")).collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut b = GraphBuilder::new(n, Objective::unit_scaled(&names));
    for _ in 0..m {
        let u = rng.below(n as u64) as u32;
        let v = rng.below(n as u64) as u32;
        let c: Vec<u64> = (0..d).map(|_| rng.range_inclusive(0, max_cost)).collect();
        b.add_edge(u, v, &c);
    }
    b.build().unwrap()
}

fn costs(set: &mosbench::mos::SolutionSet) -> Vec<Vec<u64>> {
    set.entries.iter().map(|s| s.cost.values().to_vec()).collect()
}

fn check_witnesses(g: &MosGraph, q: &Query, set: &mosbench::mos::SolutionSet) {
    for s in &set.entries {
        let p = s.path.as_ref().unwrap();
        assert_eq!(p.first(), Some(&q.source));
        assert_eq!(p.last(), Some(&q.target));
        assert!(g.path_realizes(p, s.cost.values()).unwrap(), "{:?} {:?}", p, s.cost);
    }
}

#[test]
fn exact_matches_enumeration_on_random_graphs() {
    let mut rng = SplitMix64::new(0x5EED_0001);
    for trial in 0..200 {
        let n = 4 + rng.below(9) as usize;
        let m = n + rng.below(3 * n as u64) as usize;
        let d = 2 + (trial % 3);
        let g = random_graph(&mut rng, n, m, d, 9);
        let q = Query::new(trial, rng.below(n as u64) as u32, rng.below(n as u64) as u32);
        let h = ideal_point_heuristic(&g, q.target).unwrap();
        let got = solve_exact(&g, &q, &h).unwrap();
        let want = brute_force_pareto(&g, &q).unwrap();
        assert_eq!(costs(&got), costs(&want), "trial {trial}");
        check_witnesses(&g, &q, &got);
    }
}

#[test]
fn single_objective_is_shortest_path() {
    let mut rng = SplitMix64::new(7);
    for trial in 0..50 {
        let g = random_graph(&mut rng, 10, 30, 1, 20);
        let q = Query::new(trial, 0, 9);
        let h = ideal_point_heuristic(&g, 9).unwrap();
        let got = solve_exact(&g, &q, &h).unwrap();
        let want = brute_force_pareto(&g, &q).unwrap();
        assert_eq!(costs(&got), costs(&want));
        assert!(got.len() <= 1);
    }
}

#[test]
fn zero_epsilon_equals_exact() {
    let mut rng = SplitMix64::new(99);
    for trial in 0..100 {
        let g = random_graph(&mut rng, 30, 120, 3, 50);
        let q = Query::new(trial, 0, 29);
        let h = ideal_point_heuristic(&g, 29).unwrap();
        let exact = solve_exact(&g, &q, &h).unwrap();
        let zero = solve_approx(&g, &q, &Epsilon::parse("0.0").unwrap(), &h).unwrap();
        assert_eq!(exact.entries, zero.entries);
    }
}

#[test]
fn brute_force_rejects_oversized_instances() {
    // complete digraph on 13 vertices has far more than 10^7 simple paths
    let n = 13;
    let mut b = GraphBuilder::new(n, Objective::unit_scaled(&["a", "b"]));
    for u in 0..n as u32 {
        for v in 0..n as u32 {
            if u != v {
                b.add_edge(u, v, &[1, 1]);
            }
        }
    }
    let g = b.build().unwrap();
    assert!(matches!(
        brute_force_pareto(&g, &Query::new(0, 0, 12)),
        Err(SolveError::InstanceTooLarge { .. })
    ));
}

#[test]
fn expired_deadline_times_out() {
    let mut rng = SplitMix64::new(3);
    let g = random_graph(&mut rng, 2000, 12000, 3, 1000);
    let h = ideal_point_heuristic(&g, 1999).unwrap();
    let past = std::time::Instant::now();
    let r = search(&g, &Query::new(0, 0, 1999), &Epsilon::zero(), &h, Some(past));
    // tiny searches may finish before the first deadline check
    if let Err(e) = r {
        assert!(matches!(e, SolveError::Timeout { .. }));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn approximate_front_covers_exact(
        seed in any::<u64>(),
        d in 2usize..5,
        eps_milli in prop::sample::select(vec![10u64, 50, 100, 250]),
    ) {
        let mut rng = SplitMix64::new(seed);
        let g = random_graph(&mut rng, 40, 200, d, 100);
        let q = Query::new(0, 0, 39);
        let h = ideal_point_heuristic(&g, 39).unwrap();
        let exact = solve_exact(&g, &q, &h).unwrap();
        let eps = Epsilon::parse(&format!("0.{eps_milli:03}")).unwrap();
        let approx = solve_approx(&g, &q, &eps, &h).unwrap();

        // exact front: mutually non-dominated, distinct, sorted
        for (i, a) in exact.entries.iter().enumerate() {
            for (j, b) in exact.entries.iter().enumerate() {
                if i != j {
                    prop_assert!(!weakly_dominates_slice(a.cost.values(), b.cost.values()));
                }
            }
        }
        prop_assert!(approx.len() <= exact.len());
        prop_assert_eq!(exact.is_empty(), approx.is_empty());
        for a in &approx.entries {
            prop_assert!(exact.entries.iter().any(|e| e.cost == a.cost));
        }
        for e in &exact.entries {
            prop_assert!(approx
                .entries
                .iter()
                .any(|a| eps_covers_slice(a.cost.values(), e.cost.values(), &eps)));
        }
        check_witnesses(&g, &q, &approx);
        check_witnesses(&g, &q, &exact);
    }
}
