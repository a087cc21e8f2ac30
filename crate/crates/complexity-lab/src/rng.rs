//! Deterministic randomness for experiments.
//!
//! Everything stochastic in this crate draws from [`SplitMix64`], Steele,
//! Lea and Flood's 64-bit shift/multiply generator, pinned here by its
//! published constants (increment `0x9E3779B97F4A7C15`, mix multipliers
//! `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`). Results are therefore
//! bit-identical across platforms, thread counts and rebuilds.
//!
//! Per-trial streams are derived with [`SplitMix64::for_trial`], so trial
//! `t` is independent of whether trials `0..t-1` were ever generated.

const GOLDEN_GAMMA: u64 = 0x9E3779B97F4A7C15;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

#[inline]
fn mix(mut z: u64) -> u64 {
    z ^= z >> 30;
    z = z.wrapping_mul(0xBF58476D1CE4E5B9);
    z ^= z >> 27;
    z = z.wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Stream for trial `trial` of a seeded experiment. The seed and the
    /// trial index are hashed together so neighbouring trials share no
    /// state prefix.
    pub fn for_trial(seed: u64, trial: u64) -> Self {
        let s = mix(seed ^ trial.wrapping_mul(GOLDEN_GAMMA));
        Self { state: mix(s) }
    }

    /// Substream `lane` of this generator, used to give permutation-test
    /// workers independent streams.
    pub fn substream(&self, lane: u64) -> Self {
        Self {
            state: mix(self.state ^ lane.wrapping_mul(GOLDEN_GAMMA).wrapping_add(1)),
        }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix(self.state)
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..n` by 128-bit multiply-shift. The residual bias of
    /// `n / 2^64` is irrelevant at the scales used here.
    #[inline]
    pub fn below(&mut self, n: u64) -> u64 {
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    /// Standard normal via Box-Muller.
    pub fn next_normal(&mut self) -> f64 {
        let u1 = (self.next_u64() >> 11) as f64 + 0.5; // (0, 2^53)
        let u1 = u1 * (1.0 / (1u64 << 53) as f64);
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}
