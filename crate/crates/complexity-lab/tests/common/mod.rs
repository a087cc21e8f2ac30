//! Shared helpers for the integration tests: independent oracles that the
//! implementations are checked against, and frozen reference values.
//!
//! The oracles deliberately take the dumbest correct route (exhaustive
//! enumeration, dense scans) and share no code with the paths they check.

// Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

pub mod stats_reference;

use std::collections::HashSet;

use complexity_lab::seq::{Sequence, Symbol};
use complexity_lab::stats::{pinball_loss, PairedSamples};

/// Exact minimal join count by breadth-first search over sets of
/// constructed strings. Exponential; usable for lengths up to ~8.
pub fn assembly_index_bfs(x: &Sequence) -> usize {
    let target = x.symbols().to_vec();
    if target.len() == 1 {
        return 0;
    }
    let mut basis: Vec<Vec<Symbol>> = Vec::new();
    for &s in x.symbols() {
        if !basis.contains(&vec![s]) {
            basis.push(vec![s]);
        }
    }
    // Frontier of constructed-string sets, deduplicated by sorted contents.
    let canon = |set: &Vec<Vec<Symbol>>| -> Vec<Vec<Symbol>> {
        let mut c = set.clone();
        c.sort();
        c
    };
    let mut frontier: Vec<Vec<Vec<Symbol>>> = vec![Vec::new()];
    let mut seen: HashSet<Vec<Vec<Symbol>>> = HashSet::new();
    for depth in 1..=target.len() {
        let mut next: Vec<Vec<Vec<Symbol>>> = Vec::new();
        for state in &frontier {
            let mut available: Vec<&Vec<Symbol>> = basis.iter().collect();
            available.extend(state.iter());
            for a in &available {
                for b in &available {
                    let mut joined = (*a).clone();
                    joined.extend_from_slice(b);
                    if joined.len() > target.len() {
                        continue;
                    }
                    if joined == target {
                        return depth;
                    }
                    // Only substrings of the target can matter.
                    if !target
                        .windows(joined.len())
                        .any(|w| w == joined.as_slice())
                    {
                        continue;
                    }
                    if state.contains(&joined) {
                        continue;
                    }
                    let mut new_state = state.clone();
                    new_state.push(joined);
                    let key = canon(&new_state);
                    if seen.insert(key.clone()) {
                        next.push(key);
                    }
                }
            }
        }
        frontier = next;
    }
    target.len() - 1
}

/// Exact quantile-regression oracle: for each candidate slope (all
/// pairwise slopes), the optimal intercept is a weighted tau-quantile of
/// the residuals, computed directly; the minimum over slopes is exact
/// because the profiled loss is piecewise linear with breakpoints at the
/// pairwise slopes.
pub fn quantile_regression_oracle(p: &PairedSamples, tau: f64) -> (f64, f64, f64) {
    let n = p.len();
    let mut best: Option<(f64, f64, f64)> = None;
    for i in 0..n {
        for j in 0..n {
            if i == j || p.xs[i] == p.xs[j] {
                continue;
            }
            let slope = (p.ys[j] - p.ys[i]) / (p.xs[j] - p.xs[i]);
            // Optimal intercept for this slope: the tau-quantile of the
            // residuals (left endpoint of the optimal interval).
            let mut residuals: Vec<f64> = p
                .xs
                .iter()
                .zip(&p.ys)
                .map(|(x, y)| y - slope * x)
                .collect();
            residuals.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let k = ((tau * n as f64).ceil() as usize).clamp(1, n) - 1;
            for intercept in [residuals[k], residuals[k.saturating_sub(1)]] {
                let loss = pinball_loss(p, tau, intercept, slope);
                if best.is_none() || loss < best.unwrap().0 {
                    best = Some((loss, intercept, slope));
                }
            }
        }
    }
    let (loss, a, b) = best.expect("at least two distinct x");
    (loss, a, b)
}
