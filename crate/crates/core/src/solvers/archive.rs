//! Per-vertex sets of closed cost tails for dimensionality-reduced
//! dominance checks.
//!
//! Labels leave the open list in lexicographic order, so any closed label
//! at a vertex is already no worse in the first objective than a label
//! being tested there. Weak dominance then only needs the remaining
//! `d - 1` components, the "tail".

/// A set of mutually non-dominated tails.
pub(crate) trait TailArchive: Default {
    /// Whether some stored tail is componentwise `<= tail`.
    fn covers(&self, tail: &[u64]) -> bool;
    /// Adds `tail`, which must not be covered, dropping what it covers.
    fn insert(&mut self, tail: &[u64]);
}

/// `d = 1`: the empty tail; any closed label covers every later one.
#[derive(Default)]
pub(crate) struct AnyClosed(bool);

impl TailArchive for AnyClosed {
    #[inline]
    fn covers(&self, _tail: &[u64]) -> bool {
        self.0
    }

    #[inline]
    fn insert(&mut self, _tail: &[u64]) {
        self.0 = true;
    }
}

/// `d = 2`: the smallest second component seen.
pub(crate) struct MinScalar(u64);

impl Default for MinScalar {
    fn default() -> Self {
        MinScalar(u64::MAX)
    }
}

impl TailArchive for MinScalar {
    #[inline]
    fn covers(&self, tail: &[u64]) -> bool {
        self.0 <= tail[0]
    }

    #[inline]
    fn insert(&mut self, tail: &[u64]) {
        self.0 = self.0.min(tail[0]);
    }
}

/// `d = 3`: a two-dimensional staircase, first component ascending and
/// second strictly descending.
#[derive(Default)]
pub(crate) struct Staircase(Vec<(u64, u64)>);

impl TailArchive for Staircase {
    #[inline]
    fn covers(&self, tail: &[u64]) -> bool {
        let (a, b) = (tail[0], tail[1]);
        let idx = self.0.partition_point(|p| p.0 <= a);
        idx > 0 && self.0[idx - 1].1 <= b
    }

    fn insert(&mut self, tail: &[u64]) {
        let (a, b) = (tail[0], tail[1]);
        let start = self.0.partition_point(|p| p.0 < a);
        let mut end = start;
        while end < self.0.len() && self.0[end].1 >= b {
            end += 1;
        }
        self.0.splice(start..end, std::iter::once((a, b)));
    }
}

/// `d >= 4`: a flat list of tails scanned linearly.
#[derive(Default)]
pub(crate) struct TailList {
    width: usize,
    data: Vec<u64>,
}

impl TailArchive for TailList {
    fn covers(&self, tail: &[u64]) -> bool {
        if self.data.is_empty() {
            return false;
        }
        self.data
            .chunks_exact(self.width)
            .any(|t| t.iter().zip(tail).all(|(x, y)| x <= y))
    }

    fn insert(&mut self, tail: &[u64]) {
        if self.data.is_empty() {
            self.width = tail.len();
            self.data.extend_from_slice(tail);
            return;
        }
        let w = self.width;
        let mut kept = 0;
        for i in 0..self.data.len() / w {
            let dominated = self.data[i * w..(i + 1) * w]
                .iter()
                .zip(tail)
                .all(|(x, y)| y <= x);
            if !dominated {
                self.data.copy_within(i * w..(i + 1) * w, kept * w);
                kept += 1;
            }
        }
        self.data.truncate(kept * w);
        self.data.extend_from_slice(tail);
    }
}
