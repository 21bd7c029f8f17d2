use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Index};

use super::epsilon::Epsilon;
use super::MosError;

/// A non-negative additive cost vector in fixed-point integer units.
///
/// Component `i` is expressed in the units of the owning graph's objective `i`
/// (see [`Objective::scale`](super::Objective)).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CostVector(Vec<u64>);

impl CostVector {
    pub fn new(values: Vec<u64>) -> Self {
        CostVector(values)
    }

    pub fn zero(dim: usize) -> Self {
        CostVector(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }

    /// Lexicographic comparison in canonical objective order.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }

    pub fn add_assign_slice(&mut self, other: &[u64]) {
        debug_assert_eq!(self.0.len(), other.len());
        for (a, b) in self.0.iter_mut().zip(other) {
            *a += b;
        }
    }
}

impl From<Vec<u64>> for CostVector {
    fn from(v: Vec<u64>) -> Self {
        CostVector(v)
    }
}

impl From<&[u64]> for CostVector {
    fn from(v: &[u64]) -> Self {
        CostVector(v.to_vec())
    }
}

impl Index<usize> for CostVector {
    type Output = u64;
    fn index(&self, i: usize) -> &u64 {
        &self.0[i]
    }
}

impl Add<&CostVector> for &CostVector {
    type Output = CostVector;
    fn add(self, rhs: &CostVector) -> CostVector {
        let mut out = self.clone();
        out.add_assign_slice(&rhs.0);
        out
    }
}

impl fmt::Debug for CostVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

fn check_dims(p: &[u64], q: &[u64]) -> Result<(), MosError> {
    if p.len() != q.len() {
        return Err(MosError::DimensionMismatch {
            expected: p.len(),
            found: q.len(),
        });
    }
    Ok(())
}

/// Pareto dominance: `p` is no worse anywhere and strictly better somewhere.
pub fn dominates(p: &CostVector, q: &CostVector) -> Result<bool, MosError> {
    check_dims(&p.0, &q.0)?;
    Ok(dominates_slice(&p.0, &q.0))
}

/// `p` ≤ `q` componentwise (dominated-or-equal).
#[inline]
pub fn weakly_dominates_slice(p: &[u64], q: &[u64]) -> bool {
    p.iter().zip(q).all(|(a, b)| a <= b)
}

#[inline]
pub fn dominates_slice(p: &[u64], q: &[u64]) -> bool {
    let mut strict = false;
    for (a, b) in p.iter().zip(q) {
        if a > b {
            return false;
        }
        strict |= a < b;
    }
    strict
}

/// Multiplicative ε-dominance: `p_i ≤ (1+ε_i)·q_i` for all `i`, strict for some `i`.
///
/// Evaluated exactly as `p_i·D_i ≤ N_i·q_i` with `1+ε_i = N_i/D_i`.
pub fn eps_dominates(p: &CostVector, q: &CostVector, eps: &Epsilon) -> Result<bool, MosError> {
    check_dims(&p.0, &q.0)?;
    if !eps.fits(p.dim()) {
        return Err(MosError::DimensionMismatch {
            expected: p.dim(),
            found: eps.dim(),
        });
    }
    Ok(eps_dominates_slice(&p.0, &q.0, eps))
}

#[inline]
pub fn eps_dominates_slice(p: &[u64], q: &[u64], eps: &Epsilon) -> bool {
    let mut strict = false;
    for (i, (&a, &b)) in p.iter().zip(q).enumerate() {
        match eps.component(i).cmp_scaled(a, b) {
            Ordering::Greater => return false,
            Ordering::Less => strict = true,
            Ordering::Equal => {}
        }
    }
    strict
}

/// `p` covers `q` under `eps` when it is equal to `q` or ε-dominates it.
///
/// This is the acceptance relation for approximate fronts: every exact
/// vector must be covered by some approximate one.
#[inline]
pub fn eps_covers_slice(p: &[u64], q: &[u64], eps: &Epsilon) -> bool {
    p == q || eps_dominates_slice(p, q, eps)
}

/// Returns the distinct non-dominated members of `costs`, sorted lexicographically.
pub fn pareto_filter(costs: &[CostVector]) -> Result<Vec<CostVector>, MosError> {
    if let Some(first) = costs.first() {
        for c in costs {
            check_dims(&first.0, &c.0)?;
        }
    }
    let mut sorted: Vec<&CostVector> = costs.iter().collect();
    sorted.sort_by(|a, b| a.lex_cmp(b));
    sorted.dedup();

    // In lexicographic order a vector can only be dominated by an earlier one.
    let mut kept: Vec<CostVector> = Vec::new();
    for c in sorted {
        if !kept.iter().any(|k| weakly_dominates_slice(&k.0, &c.0)) {
            kept.push(c.clone());
        }
    }
    Ok(kept)
}
