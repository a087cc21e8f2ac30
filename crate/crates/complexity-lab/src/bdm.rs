//! Block decomposition: sum per-distinct-block complexity estimates plus
//! log multiplicities over a partition into contiguous blocks.
//!
//! `bdm(x, b, m) = sum over distinct blocks r_j of log2(n_j) + K_m(r_j)`,
//! where the partition takes non-overlapping b-blocks and keeps the final
//! short block as its own block type. With the partition that is the whole
//! object, the value collapses to the estimator itself, which ties the
//! block score to the CTM table exactly.
//!
//! Estimators for `K_m`:
//! - `Ctm`: lookup in a [`CtmTable`]; uncovered blocks are an error unless
//!   the fallback is enabled, in which case they are charged LZW bits.
//! - `LzwBits`: `compressed_bits` of the block's LZW parse.
//! - `EntropyBits`: block length times its symbol entropy.

use serde::Serialize;
use std::collections::HashMap;

use crate::assembly::{self, HeuristicMethod};
use crate::ctm::CtmTable;
use crate::entropy;
use crate::error::{Error, Result};
use crate::lz;
use crate::seq::{Sequence, Symbol};

/// Frozen slack for the finite-sample block-entropy bound
/// `bdm(x, b, entropy) <= N_i * H_i + C`. Calibrated once on 512 random
/// binary strings of length 64 plus all doubled strings up to 256 (block
/// size 8, seed 0xCA11B), where the largest observed slack was 39.3 bits;
/// frozen with headroom and never tuned per test.
pub const ENTROPY_BOUND_SLACK_BITS: f64 = 48.0;

/// Frozen slack for `bdm(x, b, entropy) <= k_ai_bits + C`, calibrated on
/// the same set (largest observed slack was -1.0 bits, i.e. the bound
/// held with margin everywhere).
pub const KAI_BOUND_SLACK_BITS: f64 = 16.0;

#[derive(Debug, Clone, Copy)]
pub enum Estimator<'a> {
    Ctm {
        table: &'a CtmTable,
        fallback: bool,
    },
    LzwBits,
    EntropyBits,
}

impl Estimator<'_> {
    pub fn name(&self) -> &'static str {
        match self {
            Estimator::Ctm { .. } => "ctm",
            Estimator::LzwBits => "lzw_bits",
            Estimator::EntropyBits => "entropy_bits",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BdmPartition {
    pub block_size: usize,
    /// Distinct blocks with multiplicities, sorted by block content.
    pub blocks: Vec<(Vec<Symbol>, u64)>,
    /// Total number of blocks including repeats.
    pub total_blocks: u64,
}

/// Decompose into non-overlapping b-blocks, final short block kept.
pub fn partition(x: &Sequence, block_size: usize) -> Result<BdmPartition> {
    if x.is_empty() {
        return Err(Error::EmptySequence);
    }
    if block_size == 0 {
        return Err(Error::BlockTooLarge {
            block: block_size,
            len: x.len(),
        });
    }
    let mut counts: HashMap<&[Symbol], u64> = HashMap::new();
    let symbols = x.symbols();
    let mut i = 0;
    let mut total = 0u64;
    while i < symbols.len() {
        let end = (i + block_size).min(symbols.len());
        *counts.entry(&symbols[i..end]).or_insert(0) += 1;
        total += 1;
        i = end;
    }
    let mut blocks: Vec<(Vec<Symbol>, u64)> = counts
        .into_iter()
        .map(|(b, c)| (b.to_vec(), c))
        .collect();
    blocks.sort();
    Ok(BdmPartition {
        block_size,
        blocks,
        total_blocks: total,
    })
}

/// Complexity charge for a single block under the chosen estimator.
pub fn block_complexity(block: &[Symbol], alphabet_size: usize, est: Estimator) -> Result<f64> {
    match est {
        Estimator::Ctm { table, fallback } => match table.k_ctm(block) {
            Some(k) => Ok(k),
            None if fallback => block_complexity(block, alphabet_size, Estimator::LzwBits),
            None => Err(Error::UncoveredBlock {
                block: block.to_vec(),
            }),
        },
        Estimator::LzwBits => {
            let seq = Sequence::new(block.to_vec(), alphabet_size)?;
            Ok(lz::lzw_encode(&seq)?.compressed_bits as f64)
        }
        Estimator::EntropyBits => {
            let seq = Sequence::new(block.to_vec(), alphabet_size)?;
            let h = entropy::shannon_entropy(&seq, 1)?.h_symbol;
            Ok(block.len() as f64 * h)
        }
    }
}

pub fn bdm_of_partition(p: &BdmPartition, alphabet_size: usize, est: Estimator) -> Result<f64> {
    let mut sum = 0.0;
    for (block, n_j) in &p.blocks {
        sum += (*n_j as f64).log2() + block_complexity(block, alphabet_size, est)?;
    }
    Ok(sum)
}

/// Block decomposition score in bits.
pub fn bdm(x: &Sequence, block_size: usize, est: Estimator) -> Result<f64> {
    let p = partition(x, block_size)?;
    bdm_of_partition(&p, x.alphabet_size(), est)
}

/// Total block entropy `N_i * H_i` of the partition, in bits.
pub fn total_block_entropy(p: &BdmPartition) -> f64 {
    let n = p.total_blocks as f64;
    let h: f64 = p
        .blocks
        .iter()
        .map(|(_, c)| {
            let q = *c as f64 / n;
            -q * q.log2()
        })
        .sum();
    n * h
}

#[derive(Debug, Clone, Serialize)]
pub struct InequalityCheck {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub passed: Option<bool>,
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HierarchyReport {
    pub length: usize,
    pub block_size: usize,
    pub values: Vec<(String, f64)>,
    pub checks: Vec<InequalityCheck>,
}

/// Evaluate every measure on one input and check the testable
/// inequalities that relate them, using the frozen slack constants.
pub fn verify_hierarchy(
    x: &Sequence,
    block_size: usize,
    table: Option<&CtmTable>,
) -> Result<HierarchyReport> {
    let p = partition(x, block_size)?;
    let n_h = total_block_entropy(&p);
    let bdm_entropy = bdm_of_partition(&p, x.alphabet_size(), Estimator::EntropyBits)?;
    let lzw = lz::lzw_encode(x)?;
    let ai = assembly::heuristic_index(x, HeuristicMethod::BestOf)?;
    let k_ai = ai.bits as f64;

    let mut values = vec![
        ("bdm_entropy_bits".to_string(), bdm_entropy),
        ("total_block_entropy_bits".to_string(), n_h),
        ("lzw_compressed_bits".to_string(), lzw.compressed_bits as f64),
        ("lzw_codeword_count".to_string(), lzw.codeword_count as f64),
        ("assembly_index".to_string(), ai.index as f64),
        ("k_ai_bits".to_string(), k_ai),
    ];

    let mut checks = vec![
        InequalityCheck {
            name: "bdm_entropy <= total_block_entropy + C".to_string(),
            lhs: bdm_entropy,
            rhs: n_h + ENTROPY_BOUND_SLACK_BITS,
            passed: Some(bdm_entropy <= n_h + ENTROPY_BOUND_SLACK_BITS),
            skipped: None,
        },
        InequalityCheck {
            name: "bdm_entropy <= k_ai_bits + C".to_string(),
            lhs: bdm_entropy,
            rhs: k_ai + KAI_BOUND_SLACK_BITS,
            passed: Some(bdm_entropy <= k_ai + KAI_BOUND_SLACK_BITS),
            skipped: None,
        },
    ];

    match table {
        Some(t) => {
            values.push((
                "k_ctm_bits".to_string(),
                t.k_ctm(x.symbols()).unwrap_or(f64::NAN),
            ));
            match t.k_ctm(x.symbols()) {
                Some(k) => {
                    // Whole-object partition: the score must equal the
                    // estimator exactly.
                    let whole = bdm(
                        x,
                        x.len(),
                        Estimator::Ctm {
                            table: t,
                            fallback: false,
                        },
                    )?;
                    checks.push(InequalityCheck {
                        name: "bdm(whole, ctm) == k_ctm".to_string(),
                        lhs: whole,
                        rhs: k,
                        passed: Some(whole == k),
                        skipped: None,
                    });
                }
                None => checks.push(InequalityCheck {
                    name: "bdm(whole, ctm) == k_ctm".to_string(),
                    lhs: f64::NAN,
                    rhs: f64::NAN,
                    passed: None,
                    skipped: Some("input not covered by the CTM table".to_string()),
                }),
            }
        }
        None => checks.push(InequalityCheck {
            name: "bdm(whole, ctm) == k_ctm".to_string(),
            lhs: f64::NAN,
            rhs: f64::NAN,
            passed: None,
            skipped: Some("no CTM table supplied".to_string()),
        }),
    }

    Ok(HierarchyReport {
        length: x.len(),
        block_size,
        values,
        checks,
    })
}
