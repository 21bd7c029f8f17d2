use super::cost::CostVector;
use super::epsilon::Epsilon;
use super::graph::{Query, VertexId};

/// One member of a front: a cost vector and, optionally, a path realizing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub cost: CostVector,
    pub path: Option<Vec<VertexId>>,
}

impl Solution {
    pub fn new(cost: CostVector, path: Vec<VertexId>) -> Self {
        Solution {
            cost,
            path: Some(path),
        }
    }

    pub fn cost_only(cost: CostVector) -> Self {
        Solution { cost, path: None }
    }
}

/// A Pareto front (exact or ε-approximate) for one query.
///
/// Entries hold pairwise distinct cost vectors in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub query: Query,
    pub epsilon: Epsilon,
    pub entries: Vec<Solution>,
}

impl SolutionSet {
    pub fn new(query: Query, epsilon: Epsilon, mut entries: Vec<Solution>) -> Self {
        entries.sort_by(|a, b| a.cost.lex_cmp(&b.cost));
        SolutionSet {
            query,
            epsilon,
            entries,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn costs(&self) -> impl Iterator<Item = &CostVector> + '_ {
        self.entries.iter().map(|s| &s.cost)
    }

    /// Copy without witness paths.
    pub fn without_paths(&self) -> SolutionSet {
        SolutionSet {
            query: self.query,
            epsilon: self.epsilon.clone(),
            entries: self
                .entries
                .iter()
                .map(|s| Solution::cost_only(s.cost.clone()))
                .collect(),
        }
    }
}
