//! Best-first label-setting search for exact and ε-approximate fronts.
//!
//! Labels are extracted in lexicographic order of `f = g + h` (ties broken
//! by vertex id, then creation order). With a consistent heuristic every
//! closed label at a vertex, and every solution found so far, is then
//! lexicographically no worse than any label tested later, so weak
//! dominance checks only compare the last `d - 1` components
//! (see [`super::archive`]).
//!
//! A label is discarded, both when generated and when extracted, if
//! - a closed label at its vertex weakly dominates its `g`, or
//! - a solution found at the target covers its `f`: weakly dominates it
//!   (exact search) or equals or ε-dominates it (approximate search).
//!
//! ε is only ever applied against solutions, never between intermediate
//! labels, so approximation error does not compound along a path. Since
//! `f` bounds every completion from below, a solution that covers `f`
//! covers every completion, and the returned set covers the exact front.

use std::time::Instant;

use crate::mos::{eps_covers_slice, CostVector, Epsilon, MosGraph, Query, Solution, SolutionSet};

use super::archive::{AnyClosed, MinScalar, Staircase, TailArchive, TailList};
use super::heuristic::HeuristicTable;
use super::queue::{is_less, LabelQueue};
use super::SolveError;

const NO_PARENT: u32 = u32::MAX;
/// Extractions between deadline checks.
const DEADLINE_STRIDE: u64 = 1024;

/// Counters from one search run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub generated: u64,
    pub expanded: u64,
    pub pruned_closed: u64,
    pub pruned_goal: u64,
}

/// A solved query.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub solutions: SolutionSet,
    pub stats: SearchStats,
}

/// Computes the full Pareto front of `query`.
pub fn solve_exact(
    graph: &MosGraph,
    query: &Query,
    heuristic: &HeuristicTable,
) -> Result<SolutionSet, SolveError> {
    search(graph, query, &Epsilon::zero(), heuristic, None).map(|o| o.solutions)
}

/// Computes an ε-approximate front of `query`. With ε = 0 this is exactly
/// [`solve_exact`].
pub fn solve_approx(
    graph: &MosGraph,
    query: &Query,
    eps: &Epsilon,
    heuristic: &HeuristicTable,
) -> Result<SolutionSet, SolveError> {
    search(graph, query, eps, heuristic, None).map(|o| o.solutions)
}

/// The shared search, with an optional wall-clock deadline.
pub fn search(
    graph: &MosGraph,
    query: &Query,
    eps: &Epsilon,
    heuristic: &HeuristicTable,
    deadline: Option<Instant>,
) -> Result<SearchOutcome, SolveError> {
    query
        .validate(graph)
        .map_err(|_| SolveError::QueryOutOfRange(query.index))?;
    if heuristic.target() != query.target || heuristic.dim() != graph.dim() {
        return Err(SolveError::HeuristicMismatch);
    }
    if !eps.fits(graph.dim()) {
        return Err(SolveError::EpsilonDimension {
            expected: graph.dim(),
            found: eps.dim(),
        });
    }
    match graph.dim() {
        1 => Search::<AnyClosed>::new(graph, query, eps, heuristic, deadline).run(),
        2 => Search::<MinScalar>::new(graph, query, eps, heuristic, deadline).run(),
        3 => Search::<Staircase>::new(graph, query, eps, heuristic, deadline).run(),
        _ => Search::<TailList>::new(graph, query, eps, heuristic, deadline).run(),
    }
}

struct Search<'a, A> {
    graph: &'a MosGraph,
    query: &'a Query,
    eps: &'a Epsilon,
    approximate: bool,
    heuristic: &'a HeuristicTable,
    deadline: Option<Instant>,
    dim: usize,
    // label arena; f is stored flat, g is recovered as f - h(vertex)
    f: Vec<u64>,
    vertex: Vec<u32>,
    parent: Vec<u32>,
    open: LabelQueue,
    closed: Vec<A>,
    goal: A,
    solutions: Vec<u32>,
    stats: SearchStats,
}

/// Lexicographic f, then vertex id, then creation order.
fn label_less(f: &[u64], vertex: &[u32], dim: usize, a: u32, b: u32) -> bool {
    let (ai, bi) = (a as usize, b as usize);
    let ord = f[ai * dim..ai * dim + dim]
        .cmp(&f[bi * dim..bi * dim + dim])
        .then(vertex[ai].cmp(&vertex[bi]))
        .then(a.cmp(&b));
    is_less(ord)
}

impl<'a, A: TailArchive> Search<'a, A> {
    fn new(
        graph: &'a MosGraph,
        query: &'a Query,
        eps: &'a Epsilon,
        heuristic: &'a HeuristicTable,
        deadline: Option<Instant>,
    ) -> Self {
        let mut closed = Vec::with_capacity(graph.num_vertices());
        closed.resize_with(graph.num_vertices(), A::default);
        Search {
            graph,
            query,
            eps,
            approximate: !eps.is_zero(),
            heuristic,
            deadline,
            dim: graph.dim(),
            f: Vec::new(),
            vertex: Vec::new(),
            parent: Vec::new(),
            open: LabelQueue::default(),
            closed,
            goal: A::default(),
            solutions: Vec::new(),
            stats: SearchStats::default(),
        }
    }

    fn goal_covers(&self, f: &[u64]) -> bool {
        if self.goal.covers(&f[1..]) {
            return true;
        }
        if !self.approximate {
            return false;
        }
        // Recent solutions have the smallest trailing components.
        self.solutions.iter().rev().any(|&s| {
            let s = s as usize;
            eps_covers_slice(&self.f[s * self.dim..(s + 1) * self.dim], f, self.eps)
        })
    }

    fn push(&mut self, vertex: u32, f: &[u64], parent: u32) -> Result<(), SolveError> {
        let id = u32::try_from(self.vertex.len())
            .ok()
            .filter(|&id| id != NO_PARENT)
            .ok_or(SolveError::LabelLimit)?;
        self.f.extend_from_slice(f);
        self.vertex.push(vertex);
        self.parent.push(parent);
        let (fs, vs, d) = (&self.f, &self.vertex, self.dim);
        self.open.push(id, |a, b| label_less(fs, vs, d, a, b));
        self.stats.generated += 1;
        Ok(())
    }

    fn pop(&mut self) -> Option<u32> {
        let (fs, vs, d) = (&self.f, &self.vertex, self.dim);
        self.open.pop(|a, b| label_less(fs, vs, d, a, b))
    }

    fn run(mut self) -> Result<SearchOutcome, SolveError> {
        let started = Instant::now();
        let d = self.dim;
        let (source, target) = (self.query.source, self.query.target);
        if let Some(h) = self.heuristic.get(source) {
            let h = h.to_vec();
            self.push(source, &h, NO_PARENT)?;
        }

        let mut f = vec![0u64; d];
        let mut g = vec![0u64; d];
        let mut next_f = vec![0u64; d];
        let mut next_g = vec![0u64; d];
        let mut pops = 0u64;
        while let Some(label) = self.pop() {
            pops += 1;
            if pops.is_multiple_of(DEADLINE_STRIDE) {
                if let Some(deadline) = self.deadline {
                    if Instant::now() >= deadline {
                        return Err(SolveError::Timeout {
                            elapsed_ms: started.elapsed().as_millis() as u64,
                        });
                    }
                }
            }
            let l = label as usize;
            let v = self.vertex[l];
            f.copy_from_slice(&self.f[l * d..(l + 1) * d]);
            let hv = self.heuristic.get(v).expect("stored labels reach the target");
            for i in 0..d {
                g[i] = f[i] - hv[i];
            }
            if self.closed[v as usize].covers(&g[1..]) {
                self.stats.pruned_closed += 1;
                continue;
            }
            if self.goal_covers(&f) {
                self.stats.pruned_goal += 1;
                continue;
            }
            if v == target {
                self.goal.insert(&f[1..]);
                self.solutions.push(label);
                continue;
            }
            self.closed[v as usize].insert(&g[1..]);
            self.stats.expanded += 1;

            for e in self.graph.out_edges(v) {
                let w = self.graph.head(e);
                let Some(hw) = self.heuristic.get(w) else {
                    continue;
                };
                let c = self.graph.cost(e);
                for i in 0..d {
                    next_g[i] = g[i] + c[i];
                    next_f[i] = next_g[i] + hw[i];
                }
                if self.closed[w as usize].covers(&next_g[1..]) {
                    self.stats.pruned_closed += 1;
                    continue;
                }
                if self.goal_covers(&next_f) {
                    self.stats.pruned_goal += 1;
                    continue;
                }
                self.push(w, &next_f, label)?;
            }
        }

        let entries = self
            .solutions
            .iter()
            .map(|&s| {
                let s = s as usize;
                Solution::new(CostVector::from(&self.f[s * d..(s + 1) * d]), self.witness(s as u32))
            })
            .collect();
        Ok(SearchOutcome {
            solutions: SolutionSet::new(*self.query, self.eps.clone(), entries),
            stats: self.stats,
        })
    }

    fn witness(&self, mut label: u32) -> Vec<u32> {
        let mut path = Vec::new();
        while label != NO_PARENT {
            path.push(self.vertex[label as usize]);
            label = self.parent[label as usize];
        }
        path.reverse();
        path
    }
}

impl<A> std::fmt::Debug for Search<'_, A> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Search")
            .field("labels", &self.vertex.len())
            .field("open", &self.open.len())
            .field("solutions", &self.solutions.len())
            .finish()
    }
}
