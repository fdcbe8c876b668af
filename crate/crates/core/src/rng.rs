//! A 64-bit linear congruential generator with fixed constants, so that seeded
//! runs are reproducible in any language:
//!
//! `state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64)`,
//! output = the high 32 bits of the new state.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub const MULTIPLIER: u64 = 6364136223846793005;
    pub const INCREMENT: u64 = 1442695040888963407;

    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(Self::MULTIPLIER)
            .wrapping_add(Self::INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform-ish integer in `[0, n)` by multiply-shift; `n` must be positive
    /// and below 2^32.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0 && n <= u32::MAX as u64 + 1);
        (self.next_u32() as u64 * n) >> 32
    }

    /// Integer in `[lo, hi]`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len() as u64) as usize]
    }
}
