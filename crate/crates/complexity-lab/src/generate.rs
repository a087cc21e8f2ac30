//! Dataset generators for the experiments.
//!
//! A [`GeneratorSpec`] is a pure function of `(kind, length, seed, trial)`:
//! identical specs always yield identical sequences, and trial `t` never
//! depends on earlier trials (each trial gets its own derived RNG stream,
//! see [`crate::rng`]).

use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use crate::seq::{Sequence, Symbol};

/// Base string whose characters are sampled for the fixed-length suites.
pub const ZBC_SOURCE: &str = "zbzbczbzbczbzbc";

/// Alphabet used by `UniformRandom` (letters, like the patterned kinds).
pub const UNIFORM_ALPHABET: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Each position drawn uniformly with replacement from the characters
    /// of [`ZBC_SOURCE`].
    ZbcPermutation,
    /// True shuffle of [`ZBC_SOURCE`] repeated cyclically to the target
    /// length (preserves exact symbol counts).
    ZbcShuffle,
    /// The ZBC morpheme repeated cyclically (deterministic).
    ZbcGrowing,
    /// A block such as "ABCDE" repeated cyclically and truncated.
    Pattern(String),
    /// I.i.d. uniform over a 26-letter alphabet.
    UniformRandom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub length: usize,
    pub seed: u64,
    pub trial: u64,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, length: usize, seed: u64, trial: u64) -> Self {
        Self {
            kind,
            length,
            seed,
            trial,
        }
    }

    /// Whether the kind ignores the RNG entirely.
    pub fn is_deterministic(&self) -> bool {
        matches!(
            self.kind,
            GeneratorKind::ZbcGrowing | GeneratorKind::Pattern(_)
        )
    }
}

fn zbc_symbols() -> (Vec<Symbol>, Vec<char>) {
    // z -> 0, b -> 1, c -> 2
    let chars = vec!['z', 'b', 'c'];
    let symbols = ZBC_SOURCE
        .chars()
        .map(|c| chars.iter().position(|&k| k == c).unwrap() as Symbol)
        .collect();
    (symbols, chars)
}

fn pattern_sequence(block: &str, length: usize) -> Result<Sequence> {
    if block.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let base = Sequence::from_text(block)?;
    let symbols: Vec<Symbol> = (0..length)
        .map(|i| base.symbols()[i % base.len()])
        .collect();
    Sequence::with_chars(symbols, base.chars().unwrap().to_vec())
}

pub fn generate(spec: &GeneratorSpec) -> Result<Sequence> {
    if spec.length == 0 {
        return Err(Error::EmptySequence);
    }
    let mut rng = SplitMix64::for_trial(spec.seed, spec.trial);
    match &spec.kind {
        GeneratorKind::ZbcPermutation => {
            let (source, chars) = zbc_symbols();
            let symbols = (0..spec.length)
                .map(|_| source[rng.below(source.len() as u64) as usize])
                .collect();
            Sequence::with_chars(symbols, chars)
        }
        GeneratorKind::ZbcShuffle => {
            let (source, chars) = zbc_symbols();
            let mut symbols: Vec<Symbol> =
                (0..spec.length).map(|i| source[i % source.len()]).collect();
            rng.shuffle(&mut symbols);
            Sequence::with_chars(symbols, chars)
        }
        GeneratorKind::ZbcGrowing => pattern_sequence(ZBC_SOURCE, spec.length),
        GeneratorKind::Pattern(block) => pattern_sequence(block, spec.length),
        GeneratorKind::UniformRandom => {
            let chars: Vec<char> = ('A'..='Z').collect();
            let symbols = (0..spec.length)
                .map(|_| rng.below(UNIFORM_ALPHABET as u64) as Symbol)
                .collect();
            Sequence::with_chars(symbols, chars)
        }
    }
}
