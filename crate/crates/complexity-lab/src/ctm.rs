//! Coding-theorem-method tables from exhaustive small-machine enumeration.
//!
//! The machine formalism is pinned so that the output frequency table is
//! reproducible bit for bit:
//!
//! - deterministic one-tape machines with `s` working states and `k` tape
//!   symbols, blank = symbol 0, started in state 0 on an all-blank tape;
//! - each `(state, symbol)` entry is one of: a regular transition
//!   `(write, move L/R, next state)` (`2*k*s` choices), a halting write
//!   (`k` choices: write the symbol, stop), or a bare halt (stop without
//!   writing). That is `2*k*s + k + 1` options per entry and
//!   `(2*k*s + k + 1)^(s*k)` machines in the space.
//! - a machine that halts within the step cutoff contributes its output:
//!   the tape contents between the leftmost and rightmost cell it wrote.
//!   Machines that halt before writing anything contribute the empty
//!   string.
//!
//! `k_ctm(x) = -log2(Q(x)/Q)` where `Q(x)` counts machines that output `x`
//! and `Q` counts all halting machines. Enumeration parallelizes over
//! machine indices; counts are merged additively, so the table is
//! independent of thread count.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::par;
use crate::seq::Symbol;

/// Hard cap on the machine-space size accepted for enumeration.
pub const ENUMERATION_LIMIT: u128 = 200_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Action {
    Step { write: u8, right: bool, next: u8 },
    HaltWrite { write: u8 },
    Halt,
}

#[inline]
fn decode_entry(code: u32, states: u8, symbols: u8) -> Action {
    let regular = 2 * symbols as u32 * states as u32;
    if code < regular {
        Action::Step {
            write: (code % symbols as u32) as u8,
            right: (code / symbols as u32) % 2 == 1,
            next: (code / (2 * symbols as u32)) as u8,
        }
    } else if code < regular + symbols as u32 {
        Action::HaltWrite {
            write: (code - regular) as u8,
        }
    } else {
        Action::Halt
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CtmTable {
    pub states: u8,
    pub symbols: u8,
    pub cutoff: u32,
    /// Count of machines that halted within the cutoff.
    pub total_halting: u64,
    counts: BTreeMap<Vec<u8>, u64>,
}

impl CtmTable {
    /// Machines in the space for a given (states, symbols) descriptor.
    pub fn space_size(states: u8, symbols: u8) -> u128 {
        let options = (2 * symbols as u32 * states as u32 + symbols as u32 + 1) as u128;
        let entries = states as u32 * symbols as u32;
        options.pow(entries)
    }

    pub fn output_count(&self, output: &[Symbol]) -> u64 {
        if output.iter().any(|&s| s >= self.symbols as u16) {
            return 0;
        }
        let key: Vec<u8> = output.iter().map(|&s| s as u8).collect();
        self.counts.get(&key).copied().unwrap_or(0)
    }

    /// `-log2(Q(x)/Q)`, defined exactly for covered outputs.
    pub fn k_ctm(&self, output: &[Symbol]) -> Option<f64> {
        let c = self.output_count(output);
        if c == 0 {
            None
        } else {
            Some(-((c as f64 / self.total_halting as f64).log2()))
        }
    }

    pub fn covers(&self, output: &[Symbol]) -> bool {
        self.output_count(output) > 0
    }

    /// True if every string of the given length over the table alphabet is
    /// covered.
    pub fn covers_all_of_length(&self, len: usize) -> bool {
        let k = self.symbols as u64;
        let expected = k.pow(len as u32);
        let have = self.counts.keys().filter(|o| o.len() == len).count() as u64;
        have == expected
    }

    /// Outputs with counts, sorted by (length, content).
    pub fn entries(&self) -> Vec<(&[u8], u64)> {
        let mut rows: Vec<(&[u8], u64)> = self
            .counts
            .iter()
            .map(|(k, &v)| (k.as_slice(), v))
            .collect();
        rows.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then(a.0.cmp(b.0)));
        rows
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "#states\t{}", self.states);
        let _ = writeln!(out, "#symbols\t{}", self.symbols);
        let _ = writeln!(out, "#cutoff\t{}", self.cutoff);
        let _ = writeln!(out, "#total_halting\t{}", self.total_halting);
        for (output, count) in self.entries() {
            let key: String = output.iter().map(|&d| (b'0' + d) as char).collect();
            let _ = writeln!(out, "{key}\t{count}");
        }
        out
    }

    pub fn write_tsv(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_tsv())?;
        Ok(())
    }

    pub fn read_tsv(path: &Path) -> Result<CtmTable> {
        Self::from_tsv(&std::fs::read_to_string(path)?)
    }

    pub fn from_tsv(text: &str) -> Result<CtmTable> {
        let mut states = None;
        let mut symbols = None;
        let mut cutoff = None;
        let mut total = None;
        let mut counts = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let bad = |msg: &str| Error::MalformedTable(format!("line {}: {msg}", lineno + 1));
            let (field, value) = line
                .split_once('\t')
                .ok_or_else(|| bad("expected a tab-separated pair"))?;
            match field {
                "#states" => states = Some(value.parse::<u8>().map_err(|_| bad("bad states"))?),
                "#symbols" => symbols = Some(value.parse::<u8>().map_err(|_| bad("bad symbols"))?),
                "#cutoff" => cutoff = Some(value.parse::<u32>().map_err(|_| bad("bad cutoff"))?),
                "#total_halting" => {
                    total = Some(value.parse::<u64>().map_err(|_| bad("bad total"))?)
                }
                output => {
                    let key: Vec<u8> = output
                        .chars()
                        .map(|c| {
                            c.to_digit(10)
                                .map(|d| d as u8)
                                .ok_or_else(|| bad("bad output symbol"))
                        })
                        .collect::<Result<_>>()?;
                    let count = value.parse::<u64>().map_err(|_| bad("bad count"))?;
                    counts.insert(key, count);
                }
            }
        }
        let table = CtmTable {
            states: states.ok_or_else(|| Error::MalformedTable("missing #states".into()))?,
            symbols: symbols.ok_or_else(|| Error::MalformedTable("missing #symbols".into()))?,
            cutoff: cutoff.ok_or_else(|| Error::MalformedTable("missing #cutoff".into()))?,
            total_halting: total
                .ok_or_else(|| Error::MalformedTable("missing #total_halting".into()))?,
            counts,
        };
        let sum: u64 = table.counts.values().sum();
        if sum != table.total_halting {
            return Err(Error::MalformedTable(format!(
                "counts sum to {sum}, header says {}",
                table.total_halting
            )));
        }
        Ok(table)
    }
}

/// Run one machine from a blank tape; `Some(output)` if it halts in time.
/// Written cells are contiguous (the head moves one cell per step), so the
/// tape is restored to blank by zeroing the written span before returning.
fn run_machine(entries: &[Action], symbols: u8, cutoff: u32, tape: &mut [u8]) -> Option<Vec<u8>> {
    let origin = tape.len() / 2;
    let mut head = origin as isize;
    let mut state = 0u8;
    let mut min_written = origin;
    let mut max_written = origin;
    let mut wrote = false;
    let finish = |tape: &mut [u8], min: usize, max: usize, wrote: bool| -> Vec<u8> {
        if !wrote {
            return Vec::new();
        }
        let out = tape[min..=max].to_vec();
        for c in tape.iter_mut().take(max + 1).skip(min) {
            *c = 0;
        }
        out
    };
    for _ in 0..cutoff {
        let pos = head as usize;
        let read = tape[pos];
        let entry = entries[(state as usize) * symbols as usize + read as usize];
        match entry {
            Action::Halt => {
                return Some(finish(tape, min_written, max_written, wrote));
            }
            Action::HaltWrite { write } => {
                tape[pos] = write;
                min_written = min_written.min(pos);
                max_written = max_written.max(pos);
                return Some(finish(tape, min_written, max_written, true));
            }
            Action::Step { write, right, next } => {
                tape[pos] = write;
                wrote = true;
                min_written = min_written.min(pos);
                max_written = max_written.max(pos);
                head += if right { 1 } else { -1 };
                state = next;
            }
        }
    }
    let _ = finish(tape, min_written, max_written, wrote);
    None
}

/// Enumerate the whole machine space and tabulate halting outputs.
pub fn ctm_build(states: u8, symbols: u8, cutoff: u32) -> Result<CtmTable> {
    if states == 0 || symbols == 0 || cutoff == 0 {
        return Err(Error::Degenerate("states, symbols and cutoff must be positive".into()));
    }
    let space = CtmTable::space_size(states, symbols);
    if space > ENUMERATION_LIMIT {
        return Err(Error::MachineSpaceTooLarge {
            machines: space,
            limit: ENUMERATION_LIMIT,
        });
    }
    let space = space as u64;
    let options = (2 * symbols as u32 * states as u32 + symbols as u32 + 1) as u64;
    let entry_count = states as usize * symbols as usize;

    // Pre-decode the option table once; machines are base-`options` numbers.
    let decoded: Vec<Action> = (0..options as u32)
        .map(|c| decode_entry(c, states, symbols))
        .collect();

    let chunk = 1u64 << 14;
    let chunks = space.div_ceil(chunk);
    let partials = par::map_range(chunks as usize, |ci| {
        let lo = ci as u64 * chunk;
        let hi = (lo + chunk).min(space);
        let mut tape = vec![0u8; 2 * cutoff as usize + 3];
        let mut entries = vec![Action::Halt; entry_count];
        let mut counts: BTreeMap<Vec<u8>, u64> = BTreeMap::new();
        let mut halting = 0u64;
        for machine in lo..hi {
            let mut m = machine;
            for e in entries.iter_mut() {
                *e = decoded[(m % options) as usize];
                m /= options;
            }
            if let Some(output) = run_machine(&entries, symbols, cutoff, &mut tape) {
                halting += 1;
                *counts.entry(output).or_insert(0) += 1;
            }
        }
        (counts, halting)
    });

    let mut counts: BTreeMap<Vec<u8>, u64> = BTreeMap::new();
    let mut total_halting = 0u64;
    for (partial, halting) in partials {
        total_halting += halting;
        for (k, v) in partial {
            *counts.entry(k).or_insert(0) += v;
        }
    }
    Ok(CtmTable {
        states,
        symbols,
        cutoff,
        total_halting,
        counts,
    })
}
