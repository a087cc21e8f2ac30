//! Shannon entropy, block entropy and the empirical entropy rate.
//!
//! Blocks are non-overlapping by default, matching the block-decomposition
//! partition semantics; the final short block is kept as its own block
//! type so the decomposition stays lossless. A sliding-window mode exists
//! for sensitivity checks. All logarithms are base 2.

use serde::Serialize;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::seq::{Sequence, Symbol};

/// Default cap on the window sizes scanned by [`entropy_rate`].
pub const ENTROPY_WINDOW_DEFAULT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BlockMode {
    NonOverlapping,
    Sliding,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntropyReport {
    pub block_size: usize,
    pub mode: BlockMode,
    /// Entropy of the symbol distribution (block size 1), bits/symbol.
    pub h_symbol: f64,
    /// Entropy of the block distribution at `block_size`, bits/block.
    pub h_block: f64,
    /// min over b <= window cap of h_block(b) / b, with its arg.
    pub entropy_rate: f64,
    pub entropy_rate_block: usize,
    pub entropy_rate_window: usize,
    /// Block string -> relative frequency.
    pub probabilities: Vec<(String, f64)>,
}

fn block_counts(x: &Sequence, b: usize, mode: BlockMode) -> BTreeMap<Vec<Symbol>, u64> {
    let mut counts: BTreeMap<Vec<Symbol>, u64> = BTreeMap::new();
    let symbols = x.symbols();
    match mode {
        BlockMode::NonOverlapping => {
            let mut i = 0;
            while i < symbols.len() {
                let end = (i + b).min(symbols.len());
                *counts.entry(symbols[i..end].to_vec()).or_insert(0) += 1;
                i = end;
            }
        }
        BlockMode::Sliding => {
            for w in symbols.windows(b) {
                *counts.entry(w.to_vec()).or_insert(0) += 1;
            }
        }
    }
    counts
}

fn entropy_of_counts(counts: &BTreeMap<Vec<Symbol>, u64>) -> f64 {
    let total: u64 = counts.values().sum();
    let total = total as f64;
    counts
        .values()
        .map(|&c| {
            let p = c as f64 / total;
            -p * p.log2()
        })
        .sum()
}

/// Block entropy in bits/block at block size `b`.
pub fn h_block(x: &Sequence, b: usize, mode: BlockMode) -> Result<f64> {
    if b == 0 || b > x.len() {
        return Err(Error::BlockTooLarge { block: b, len: x.len() });
    }
    Ok(entropy_of_counts(&block_counts(x, b, mode)))
}

/// Empirical distribution over b-blocks with the derived entropies.
pub fn shannon_entropy(x: &Sequence, b: usize) -> Result<EntropyReport> {
    shannon_entropy_with(x, b, BlockMode::NonOverlapping)
}

pub fn shannon_entropy_with(x: &Sequence, b: usize, mode: BlockMode) -> Result<EntropyReport> {
    if x.is_empty() {
        return Err(Error::EmptySequence);
    }
    if b == 0 || b > x.len() {
        return Err(Error::BlockTooLarge { block: b, len: x.len() });
    }
    let counts = block_counts(x, b, mode);
    let total: u64 = counts.values().sum();
    let h = entropy_of_counts(&counts);
    let h_symbol = entropy_of_counts(&block_counts(x, 1, mode));
    let window = ENTROPY_WINDOW_DEFAULT.min(x.len());
    let (rate, rate_block) = entropy_rate_with(x, window, mode)?;
    let probabilities = counts
        .iter()
        .map(|(block, &c)| (x.render_slice(block), c as f64 / total as f64))
        .collect();
    Ok(EntropyReport {
        block_size: b,
        mode,
        h_symbol,
        h_block: h,
        entropy_rate: rate,
        entropy_rate_block: rate_block,
        entropy_rate_window: window,
        probabilities,
    })
}

/// Bits per symbol: min over block sizes 1..=w of h_block(b)/b.
/// Returns the minimum and the block size attaining it.
pub fn entropy_rate(x: &Sequence, w: usize) -> Result<(f64, usize)> {
    entropy_rate_with(x, w, BlockMode::NonOverlapping)
}

pub fn entropy_rate_with(x: &Sequence, w: usize, mode: BlockMode) -> Result<(f64, usize)> {
    if x.is_empty() {
        return Err(Error::EmptySequence);
    }
    let w = w.max(1).min(x.len());
    let mut best = f64::INFINITY;
    let mut best_b = 1;
    for b in 1..=w {
        let rate = h_block(x, b, mode)? / b as f64;
        if rate < best {
            best = rate;
            best_b = b;
        }
    }
    Ok((best, best_b))
}
