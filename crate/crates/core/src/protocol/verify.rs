use std::fmt;

use crate::mos::{
    eps_covers_slice, weakly_dominates_slice, CostVector, Epsilon, MosError, MosGraph, Query,
    SolutionSet,
};

use super::ProtocolError;

/// A defect in a solution set. Entry numbers are one-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    WrongQuery { expected: Query, found: Query },
    DimensionMismatch { entry: usize },
    /// The witness does not start at the source or end at the target.
    WrongEndpoints { entry: usize },
    /// The witness uses a pair of vertices with no connecting edge.
    PathInfeasible { entry: usize, reason: String },
    /// The witness is feasible but its edge costs do not sum to the stated cost.
    CostMismatch { entry: usize },
    /// The cost is dominated by entry `by`.
    DominanceViolation { entry: usize, by: usize },
    Duplicate { entry: usize, of: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongQuery { expected, found } => write!(
                f,
                "set is for {}->{}, expected {}->{}",
                found.source + 1,
                found.target + 1,
                expected.source + 1,
                expected.target + 1
            ),
            Violation::DimensionMismatch { entry } => {
                write!(f, "entry {entry}: wrong number of objectives")
            }
            Violation::WrongEndpoints { entry } => {
                write!(f, "entry {entry}: witness has wrong endpoints")
            }
            Violation::PathInfeasible { entry, reason } => {
                write!(f, "entry {entry}: infeasible witness ({reason})")
            }
            Violation::CostMismatch { entry } => {
                write!(f, "entry {entry}: witness does not realize the stated cost")
            }
            Violation::DominanceViolation { entry, by } => {
                write!(f, "entry {entry}: dominated by entry {by}")
            }
            Violation::Duplicate { entry, of } => write!(f, "entry {entry}: duplicate of entry {of}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks witnesses (when present), recomputed costs, distinctness and
/// mutual non-dominance.
pub fn verify_solutions(graph: &MosGraph, query: &Query, set: &SolutionSet) -> VerificationReport {
    let mut violations = Vec::new();
    if (set.query.source, set.query.target) != (query.source, query.target) {
        violations.push(Violation::WrongQuery {
            expected: *query,
            found: set.query,
        });
    }
    let d = graph.dim();
    for (i, s) in set.entries.iter().enumerate() {
        let entry = i + 1;
        if s.cost.dim() != d {
            violations.push(Violation::DimensionMismatch { entry });
            continue;
        }
        let Some(path) = &s.path else { continue };
        if path.first() != Some(&query.source) || path.last() != Some(&query.target) {
            violations.push(Violation::WrongEndpoints { entry });
            continue;
        }
        match graph.path_realizes(path, s.cost.values()) {
            Ok(true) => {}
            Ok(false) => violations.push(Violation::CostMismatch { entry }),
            Err(e) => violations.push(Violation::PathInfeasible {
                entry,
                reason: e.to_string(),
            }),
        }
    }
    for (i, a) in set.entries.iter().enumerate() {
        if a.cost.dim() != d {
            continue;
        }
        for (j, b) in set.entries.iter().enumerate().take(i) {
            if b.cost.dim() != d {
                continue;
            }
            let (entry, other) = (i + 1, j + 1);
            if a.cost == b.cost {
                violations.push(Violation::Duplicate { entry, of: other });
            } else if weakly_dominates_slice(b.cost.values(), a.cost.values()) {
                violations.push(Violation::DominanceViolation { entry, by: other });
            } else if weakly_dominates_slice(a.cost.values(), b.cost.values()) {
                violations.push(Violation::DominanceViolation { entry: other, by: entry });
            }
        }
    }
    VerificationReport { violations }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coverage {
    pub covered: bool,
    /// Exact vectors with no covering approximate vector.
    pub uncovered: Vec<CostVector>,
}

/// Whether every vector of `exact` is equal to or ε-dominated by some
/// vector of `approx`.
pub fn verify_coverage(
    exact: &SolutionSet,
    approx: &SolutionSet,
    eps: &Epsilon,
) -> Result<Coverage, ProtocolError> {
    if (exact.query.source, exact.query.target) != (approx.query.source, approx.query.target) {
        let show = |q: &Query| format!("{}->{}", q.source + 1, q.target + 1);
        return Err(ProtocolError::QueryMismatch(show(&exact.query), show(&approx.query)));
    }
    let dims = |s: &SolutionSet| s.entries.first().map(|e| e.cost.dim());
    let dim = match (dims(exact), dims(approx)) {
        (Some(a), Some(b)) if a != b => return Err(ProtocolError::DimensionMismatch(a, b)),
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => 0,
    };
    for s in exact.entries.iter().chain(&approx.entries) {
        if s.cost.dim() != dim {
            return Err(ProtocolError::DimensionMismatch(dim, s.cost.dim()));
        }
    }
    if dim > 0 && !eps.fits(dim) {
        return Err(MosError::DimensionMismatch {
            expected: dim,
            found: eps.dim(),
        }
        .into());
    }
    let uncovered: Vec<CostVector> = exact
        .entries
        .iter()
        .filter(|e| {
            !approx
                .entries
                .iter()
                .any(|a| eps_covers_slice(a.cost.values(), e.cost.values(), eps))
        })
        .map(|e| e.cost.clone())
        .collect();
    Ok(Coverage {
        covered: uncovered.is_empty(),
        uncovered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mos::{GraphBuilder, Objective, Solution};

    fn set(costs: &[[u64; 2]]) -> SolutionSet {
        SolutionSet::new(
            Query::new(0, 0, 1),
            Epsilon::zero(),
            costs
                .iter()
                .map(|c| Solution::cost_only(CostVector::from(&c[..])))
                .collect(),
        )
    }

    #[test]
    fn coverage_examples() {
        let e = |s| Epsilon::parse(s).unwrap();
        let exact = set(&[[100, 1], [101, 1]]);
        let approx = set(&[[100, 1]]);
        assert!(verify_coverage(&exact, &approx, &e("0.05")).unwrap().covered);
        assert!(verify_coverage(&exact, &exact, &e("0")).unwrap().covered);
        let c = verify_coverage(&set(&[[100, 1]]), &set(&[[120, 1]]), &e("0.1")).unwrap();
        assert!(!c.covered);
        assert_eq!(c.uncovered, vec![CostVector::from(vec![100, 1])]);

        let mut other = set(&[[1, 1]]);
        other.query = Query::new(0, 0, 2);
        assert!(matches!(
            verify_coverage(&exact, &other, &e("0.1")),
            Err(ProtocolError::QueryMismatch(..))
        ));
    }

    #[test]
    fn report_examples() {
        let mut b = GraphBuilder::new(3, Objective::unit_scaled(&["a", "b"]));
        b.add_edge(0, 1, &[1, 2]).add_edge(0, 2, &[1, 1]).add_edge(2, 1, &[0, 2]);
        let g = b.build().unwrap();
        let q = Query::new(0, 0, 1);

        let dominated = set(&[[1, 2], [1, 3]]);
        let r = verify_solutions(&g, &q, &dominated);
        assert_eq!(r.violations, vec![Violation::DominanceViolation { entry: 2, by: 1 }]);

        let good = SolutionSet::new(
            q,
            Epsilon::zero(),
            vec![Solution::new(CostVector::from(vec![1, 2]), vec![0, 1])],
        );
        assert!(verify_solutions(&g, &q, &good).is_clean());

        let mut bad = good.clone();
        bad.entries[0].cost = CostVector::from(vec![1, 3]);
        assert_eq!(
            verify_solutions(&g, &q, &bad).violations,
            vec![Violation::CostMismatch { entry: 1 }]
        );
        bad.entries[0].path = Some(vec![0, 2, 1, 0, 1]);
        assert!(matches!(
            verify_solutions(&g, &q, &bad).violations[0],
            Violation::PathInfeasible { entry: 1, .. }
        ));
        bad.entries[0].path = Some(vec![0, 2]);
        assert_eq!(
            verify_solutions(&g, &q, &bad).violations,
            vec![Violation::WrongEndpoints { entry: 1 }]
        );
        let dup = set(&[[1, 2], [1, 2]]);
        assert_eq!(
            verify_solutions(&g, &q, &dup).violations,
            vec![Violation::Duplicate { entry: 2, of: 1 }]
        );
    }
}
