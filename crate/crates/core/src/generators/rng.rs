//! The generators' pseudo-random stream.
//!
//! splitmix64 with Lemire's bounded rejection sampling. Every family derives
//! independent substreams for structure, costs and queries by seeding a
//! fresh stream with the first output of `splitmix64(seed ^ tag)`. The
//! whole contract fits in a few lines, so instances regenerate identically
//! from any language.

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Substream tag for graph structure (permutations, degrees, neighbours).
pub const TAG_STRUCTURE: u64 = u64::from_be_bytes(*b"STRUCTUR");
/// Substream tag for edge costs.
pub const TAG_COSTS: u64 = u64::from_be_bytes(*b"COSTS\0\0\0");
/// Substream tag for query sampling.
pub const TAG_QUERIES: u64 = u64::from_be_bytes(*b"QUERIES\0");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// The substream for `tag` under `seed`.
    pub fn substream(seed: u64, tag: u64) -> Self {
        SplitMix64::new(SplitMix64::new(seed ^ tag).next_u64())
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `[0, n)`; `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        let mut m = self.next_u64() as u128 * n as u128;
        let mut low = m as u64;
        if low < n {
            let threshold = n.wrapping_neg() % n;
            while low < threshold {
                m = self.next_u64() as u128 * n as u128;
                low = m as u64;
            }
        }
        (m >> 64) as u64
    }

    /// Uniform integer in `[lo, hi]`.
    pub fn range_inclusive(&mut self, lo: u64, hi: u64) -> u64 {
        debug_assert!(lo <= hi);
        lo + self.below(hi - lo + 1)
    }

    /// In-place Fisher–Yates shuffle, swapping from the back.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }

    /// Moves a uniform `k`-subset of `items` (in draw order) to the front.
    pub fn partial_shuffle<T>(&mut self, items: &mut [T], k: usize) {
        let len = items.len();
        for i in 0..k.min(len) {
            let j = i + self.below((len - i) as u64) as usize;
            items.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_outputs() {
        // Published splitmix64 outputs for seed 1234567.
        let mut r = SplitMix64::new(1234567);
        let expected = [
            6457827717110365317u64,
            3203168211198807973,
            9817491932198370423,
            4593380528125082431,
            16408922859458223821,
        ];
        for e in expected {
            assert_eq!(r.next_u64(), e);
        }
    }

    #[test]
    fn bounded_is_in_range_and_covers() {
        let mut r = SplitMix64::new(7);
        let mut seen = [0u32; 10];
        for _ in 0..10_000 {
            let v = r.range_inclusive(1, 10);
            assert!((1..=10).contains(&v));
            seen[v as usize - 1] += 1;
        }
        assert!(seen.iter().all(|&c| c > 800));
    }

    #[test]
    fn substreams_differ() {
        let a = SplitMix64::substream(42, TAG_COSTS).next_u64();
        let b = SplitMix64::substream(42, TAG_STRUCTURE).next_u64();
        assert_ne!(a, b);
        assert_eq!(a, SplitMix64::substream(42, TAG_COSTS).next_u64());
    }
}
