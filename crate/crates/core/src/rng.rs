//! Small deterministic generator for sampling in tests and verification runs.

/// SplitMix64. Deterministic for a fixed seed; good enough for sampling test
/// matrices, nowhere near cryptographic.
pub struct Rng(u64);

/// Default seed for all sampled verifications (documented in the CLI help).
pub const DEFAULT_SEED: u64 = 0x5EED_CAFE;

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Uniform-ish small integer in [-range, range].
    pub fn small_int(&mut self, range: u64) -> i64 {
        (self.below(2 * range + 1)) as i64 - range as i64
    }
}
