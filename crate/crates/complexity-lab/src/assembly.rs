//! Assembly index: the minimum number of join steps needed to build a
//! string, starting from single symbols, where every intermediate string is
//! reusable.
//!
//! [`exact_index`] proves minimality by iterative deepening over the
//! substring lattice: a minimal join program only ever constructs
//! substrings of the target (anything else could be dropped), so states
//! are sets of constructed substrings, canonicalized as bitmasks and
//! memoized. Search depth is bracketed from below by a doubling argument
//! (`ceil(log2 n)`, since a join at most doubles the longest available
//! string) and a symbol-count argument, and from above by the best
//! heuristic certificate; the exact index is either found earlier or the
//! bracket closes on the heuristic value with an exhaustion proof.
//!
//! [`heuristic_index`] returns replayable upper bounds:
//! - `LzPrefix` folds the factors of [`crate::lz::lz_prefix_parse`]
//!   together left to right, constructing any factor that is not yet
//!   available by extending its longest constructed prefix.
//! - `GreedyRepeat` repeatedly replaces the longest repeated token
//!   substring (ties: leftmost) with a fresh dictionary id until no repeat
//!   of length two remains, then counts the joins of the resulting grammar.
//! - `BestOf` takes the smaller of the two; it is the pinned estimator
//!   used by every experiment in this crate.
//!
//! Every result carries its construction dictionary as a certificate, and
//! [`replay`] rebuilds the target from it.

use serde::Serialize;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lz;
use crate::seq::{Sequence, Symbol};

pub const EXACT_LIMIT_DEFAULT: usize = 20;
pub const NODE_BUDGET_DEFAULT: u64 = 200_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    Exact,
    LzPrefix,
    GreedyRepeat,
    BestOf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeuristicMethod {
    LzPrefix,
    GreedyRepeat,
    BestOf,
}

/// How one dictionary entry is built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Construction {
    Basis { symbol: Symbol },
    Join { left: u32, right: u32 },
}

#[derive(Debug, Clone, Serialize)]
pub struct AssemblyResult {
    /// The assembly index: number of join entries.
    pub index: usize,
    /// Basis entries first, then joins in construction order; the last
    /// entry always reproduces the target.
    pub dictionary: Vec<Construction>,
    /// Entry that reproduces the target.
    pub target_id: u32,
    /// Bit size of the self-delimiting dictionary encoding.
    pub bits: u64,
    pub method: Method,
    alphabet_size: usize,
}

impl AssemblyResult {
    fn from_parts(
        alphabet_size: usize,
        dictionary: Vec<Construction>,
        target_id: u32,
        method: Method,
    ) -> Self {
        let index = dictionary
            .iter()
            .filter(|c| matches!(c, Construction::Join { .. }))
            .count();
        let mut r = Self {
            index,
            dictionary,
            target_id,
            bits: 0,
            method,
            alphabet_size,
        };
        r.bits = encode_dictionary(&r);
        r
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }
}

/// Replay a certificate back into the symbols it constructs.
pub fn replay(r: &AssemblyResult) -> Result<Vec<Symbol>> {
    let mut phrases: Vec<Vec<Symbol>> = Vec::with_capacity(r.dictionary.len());
    for c in &r.dictionary {
        match c {
            Construction::Basis { symbol } => phrases.push(vec![*symbol]),
            Construction::Join { left, right } => {
                let l = phrases
                    .get(*left as usize)
                    .ok_or(Error::CorruptParse { id: *left })?;
                let rt = phrases
                    .get(*right as usize)
                    .ok_or(Error::CorruptParse { id: *right })?;
                let mut joined = l.clone();
                joined.extend_from_slice(rt);
                phrases.push(joined);
            }
        }
    }
    phrases
        .into_iter()
        .nth(r.target_id as usize)
        .ok_or(Error::CorruptParse { id: r.target_id })
}

/// Bit size of the dictionary under the pinned self-delimiting encoding:
/// each basis entry is a symbol tag of `ceil(log2(alphabet size))` bits;
/// join `j` encodes two entry ids at `ceil(log2(entries before it))` bits
/// each.
pub fn encode_dictionary(r: &AssemblyResult) -> u64 {
    let sym_bits = ceil_log2(r.alphabet_size.max(1) as u64);
    let mut bits = 0u64;
    let mut entries = 0u64;
    for c in &r.dictionary {
        match c {
            Construction::Basis { .. } => bits += sym_bits,
            Construction::Join { .. } => bits += 2 * ceil_log2(entries),
        }
        entries += 1;
    }
    bits
}

#[inline]
fn ceil_log2(n: u64) -> u64 {
    if n <= 1 {
        0
    } else {
        (64 - (n - 1).leading_zeros()) as u64
    }
}

// ---------------------------------------------------------------------------
// Certificate builder shared by the heuristics.
// ---------------------------------------------------------------------------

/// Incrementally constructed dictionary with lookup by phrase.
struct Builder {
    dictionary: Vec<Construction>,
    phrases: Vec<Vec<Symbol>>,
    by_phrase: HashMap<Vec<Symbol>, u32>,
}

impl Builder {
    fn new(x: &Sequence) -> Self {
        let mut b = Self {
            dictionary: Vec::new(),
            phrases: Vec::new(),
            by_phrase: HashMap::new(),
        };
        let mut seen = Vec::new();
        for &s in x.symbols() {
            if !seen.contains(&s) {
                seen.push(s);
                let id = b.dictionary.len() as u32;
                b.dictionary.push(Construction::Basis { symbol: s });
                b.phrases.push(vec![s]);
                b.by_phrase.insert(vec![s], id);
            }
        }
        b
    }

    fn id_of(&self, phrase: &[Symbol]) -> Option<u32> {
        self.by_phrase.get(phrase).copied()
    }

    fn join(&mut self, left: u32, right: u32) -> u32 {
        let mut phrase = self.phrases[left as usize].clone();
        phrase.extend_from_slice(&self.phrases[right as usize]);
        let id = self.dictionary.len() as u32;
        self.dictionary.push(Construction::Join { left, right });
        self.phrases.push(phrase.clone());
        self.by_phrase.entry(phrase).or_insert(id);
        id
    }

    /// Ensure `phrase` is available, building it if necessary from its
    /// longest available prefix plus the (recursively ensured) remainder.
    /// Returns its id.
    fn ensure(&mut self, phrase: &[Symbol]) -> u32 {
        if let Some(id) = self.id_of(phrase) {
            return id;
        }
        let mut best_len = 1;
        for l in (1..phrase.len()).rev() {
            if self.id_of(&phrase[..l]).is_some() {
                best_len = l;
                break;
            }
        }
        let head = self.id_of(&phrase[..best_len]).expect("basis present");
        let tail = self.ensure(&phrase[best_len..]);
        self.join(head, tail)
    }
}

// ---------------------------------------------------------------------------
// Heuristics
// ---------------------------------------------------------------------------

fn lz_prefix_result(x: &Sequence) -> Result<AssemblyResult> {
    let parse = lz::lz_prefix_parse(x)?;
    let mut b = Builder::new(x);
    let mut acc: Option<u32> = None;
    for &cw in &parse.codewords {
        let phrase = parse.dictionary[cw as usize].phrase.clone();
        let part = b.ensure(&phrase);
        acc = Some(match acc {
            None => part,
            Some(prev) => b.join(prev, part),
        });
    }
    let target = acc.expect("non-empty parse");
    Ok(AssemblyResult::from_parts(
        x.alphabet_size(),
        b.dictionary,
        target,
        Method::LzPrefix,
    ))
}

/// Longest token substring with at least two non-overlapping occurrences
/// across the sequences (within one sequence a pair must be at least the
/// pattern length apart; occurrences in different sequences always
/// qualify). Returns (sequence, start, length) of the earliest occurrence
/// in scan order.
fn longest_repeat(seqs: &[Vec<u32>], max_hint: usize) -> Option<(usize, usize, usize)> {
    const MULT: u64 = 0x9E3779B97F4A7C15;
    let has_repeat = |len: usize| -> Option<(usize, usize)> {
        let mut seen: HashMap<u64, Vec<(usize, usize)>> = HashMap::new();
        let mut best: Option<(usize, usize)> = None;
        for (si, tokens) in seqs.iter().enumerate() {
            if tokens.len() < len {
                continue;
            }
            let mut pow = 1u64;
            for _ in 0..len - 1 {
                pow = pow.wrapping_mul(MULT);
            }
            let mut h = 0u64;
            for &t in &tokens[..len] {
                h = h.wrapping_mul(MULT).wrapping_add(t as u64 + 1);
            }
            for start in 0..=tokens.len() - len {
                if start > 0 {
                    h = h
                        .wrapping_sub(pow.wrapping_mul(tokens[start - 1] as u64 + 1))
                        .wrapping_mul(MULT)
                        .wrapping_add(tokens[start + len - 1] as u64 + 1);
                }
                if let Some(positions) = seen.get(&h) {
                    for &(ps, pp) in positions {
                        let disjoint = ps != si || start >= pp + len;
                        if disjoint && seqs[ps][pp..pp + len] == tokens[start..start + len] {
                            best = Some(match best {
                                None => (ps, pp),
                                Some(b) => b.min((ps, pp)),
                            });
                            break;
                        }
                    }
                }
                seen.entry(h).or_default().push((si, start));
            }
        }
        best
    };
    let longest_seq = seqs.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut lo = 2usize;
    let mut hi = longest_seq.min(max_hint).max(2);
    if has_repeat(lo).is_none() {
        return None;
    }
    // Largest len with a qualifying repeat (monotone in len).
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        if has_repeat(mid).is_some() {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    has_repeat(lo).map(|(s, p)| (s, p, lo))
}

fn replace_all(tokens: &[u32], pattern: &[u32], rule_id: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(tokens.len());
    let mut i = 0;
    while i < tokens.len() {
        if i + pattern.len() <= tokens.len() && tokens[i..i + pattern.len()] == *pattern {
            out.push(rule_id);
            i += pattern.len();
        } else {
            out.push(tokens[i]);
            i += 1;
        }
    }
    out
}

fn greedy_repeat_result(x: &Sequence) -> Result<AssemblyResult> {
    if x.is_empty() {
        return Err(Error::EmptySequence);
    }
    let alphabet = x.alphabet_size() as u32;
    // seqs[0] is the top-level token list; seqs[k+1] is the body of rule
    // k (token id alphabet + k). Replacements apply to rule bodies too,
    // so nested repetition keeps compressing.
    let mut seqs: Vec<Vec<u32>> = vec![x.symbols().iter().map(|&s| s as u32).collect()];
    let mut hint = seqs[0].len();
    while let Some((si, start, len)) = longest_repeat(&seqs, hint) {
        hint = len;
        let pattern: Vec<u32> = seqs[si][start..start + len].to_vec();
        let rule_id = alphabet + (seqs.len() - 1) as u32;
        for s in seqs.iter_mut() {
            *s = replace_all(s, &pattern, rule_id);
        }
        seqs.push(pattern);
    }

    // Expand the grammar into joins. Rule bodies may reference rules
    // created later (a pattern can be replaced inside an older body), so
    // resolve in dependency order; the reference graph is acyclic.
    let mut b = Builder::new(x);
    let mut token_entry: HashMap<u32, u32> = HashMap::new();
    for s in 0..alphabet {
        if let Some(id) = b.id_of(&[s as Symbol]) {
            token_entry.insert(s, id);
        }
    }
    let fold = |b: &mut Builder, parts: &[u32], token_entry: &HashMap<u32, u32>| -> u32 {
        let mut acc: Option<u32> = None;
        for &t in parts {
            let part = token_entry[&t];
            acc = Some(match acc {
                None => part,
                Some(prev) => b.join(prev, part),
            });
        }
        acc.expect("non-empty rule")
    };
    let rule_count = seqs.len() - 1;
    let mut resolved = vec![false; rule_count];
    let mut remaining = rule_count;
    while remaining > 0 {
        let mut progress = false;
        for k in 0..rule_count {
            if resolved[k] {
                continue;
            }
            let body = &seqs[k + 1];
            if body.iter().all(|t| token_entry.contains_key(t)) {
                let entry = fold(&mut b, body, &token_entry);
                token_entry.insert(alphabet + k as u32, entry);
                resolved[k] = true;
                remaining -= 1;
                progress = true;
            }
        }
        assert!(progress, "rule reference graph must be acyclic");
    }
    let target = fold(&mut b, &seqs[0], &token_entry);
    Ok(AssemblyResult::from_parts(
        x.alphabet_size(),
        b.dictionary,
        target,
        Method::GreedyRepeat,
    ))
}

/// Heuristic upper bound on the assembly index; always replayable.
pub fn heuristic_index(x: &Sequence, method: HeuristicMethod) -> Result<AssemblyResult> {
    if x.is_empty() {
        return Err(Error::EmptySequence);
    }
    if x.len() == 1 {
        let label = match method {
            HeuristicMethod::LzPrefix => Method::LzPrefix,
            HeuristicMethod::GreedyRepeat => Method::GreedyRepeat,
            HeuristicMethod::BestOf => Method::BestOf,
        };
        return Ok(single_symbol_result(x, label));
    }
    match method {
        HeuristicMethod::LzPrefix => lz_prefix_result(x),
        HeuristicMethod::GreedyRepeat => greedy_repeat_result(x),
        HeuristicMethod::BestOf => {
            let a = lz_prefix_result(x)?;
            let g = greedy_repeat_result(x)?;
            let mut best = if g.index < a.index { g } else { a };
            best.method = Method::BestOf;
            best.bits = encode_dictionary(&best);
            Ok(best)
        }
    }
}

fn single_symbol_result(x: &Sequence, method: Method) -> AssemblyResult {
    AssemblyResult::from_parts(
        x.alphabet_size(),
        vec![Construction::Basis {
            symbol: x.symbols()[0],
        }],
        0,
        method,
    )
}

// ---------------------------------------------------------------------------
// Exact search
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct ExactConfig {
    /// Lengths above this are rejected (the search is worst-case
    /// exponential).
    pub max_len: usize,
    /// Upper bound on search nodes before giving up.
    pub node_budget: u64,
}

impl Default for ExactConfig {
    fn default() -> Self {
        Self {
            max_len: EXACT_LIMIT_DEFAULT,
            node_budget: NODE_BUDGET_DEFAULT,
        }
    }
}

type Mask = [u64; 4];

#[inline]
fn mask_set(m: &mut Mask, bit: usize) {
    m[bit / 64] |= 1 << (bit % 64);
}

#[inline]
fn mask_clear(m: &mut Mask, bit: usize) {
    m[bit / 64] &= !(1 << (bit % 64));
}

#[inline]
fn mask_get(m: &Mask, bit: usize) -> bool {
    m[bit / 64] >> (bit % 64) & 1 == 1
}

struct Space {
    /// id -> substring content, sorted by (len, content).
    subs: Vec<Vec<Symbol>>,
    /// Split decompositions for each id of length >= 2.
    splits: Vec<Vec<(u16, u16)>>,
    target: u16,
    n: usize,
    /// Number of single-symbol (always available) ids.
    basis_count: usize,
}

impl Space {
    fn build(x: &Sequence) -> Self {
        let symbols = x.symbols();
        let n = symbols.len();
        let mut set: Vec<Vec<Symbol>> = Vec::new();
        let mut seen: HashMap<&[Symbol], ()> = HashMap::new();
        for len in 1..=n {
            for start in 0..=n - len {
                let s = &symbols[start..start + len];
                if seen.insert(s, ()).is_none() {
                    set.push(s.to_vec());
                }
            }
        }
        set.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        let id_of: HashMap<&[Symbol], u16> = set
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i as u16))
            .collect();
        let basis_count = set.iter().take_while(|s| s.len() == 1).count();
        let splits = set
            .iter()
            .map(|s| {
                if s.len() < 2 {
                    return Vec::new();
                }
                let mut out = Vec::with_capacity(s.len() - 1);
                for cut in 1..s.len() {
                    if let (Some(&l), Some(&r)) = (id_of.get(&s[..cut]), id_of.get(&s[cut..])) {
                        out.push((l, r));
                    }
                }
                out
            })
            .collect();
        let target = id_of[symbols];
        Space {
            subs: set,
            splits,
            target,
            n,
            basis_count,
        }
    }

    #[inline]
    fn available(&self, state: &Mask, id: u16) -> bool {
        (id as usize) < self.basis_count || mask_get(state, id as usize)
    }

    fn constructible(&self, state: &Mask, id: u16) -> bool {
        self.splits[id as usize]
            .iter()
            .any(|&(l, r)| self.available(state, l) && self.available(state, r))
    }
}

struct Search<'a> {
    space: &'a Space,
    memo: HashMap<Mask, u8>,
    nodes: u64,
    node_budget: u64,
    exhausted: bool,
}

impl<'a> Search<'a> {
    /// True iff the target becomes constructed within `depth_left` joins.
    /// On success `chain` holds the constructed ids in order.
    fn dfs(&mut self, state: &mut Mask, depth_left: u8, max_len: usize, chain: &mut Vec<u16>) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.node_budget {
            self.exhausted = true;
            return false;
        }
        if self.space.constructible(state, self.space.target) {
            chain.push(self.space.target);
            return true;
        }
        if depth_left <= 1 {
            return false;
        }
        // A join at most doubles the longest available string.
        if max_len << depth_left < self.space.n {
            return false;
        }
        if let Some(&d) = self.memo.get(state) {
            if depth_left <= d {
                return false;
            }
        }
        // Try longer constructions first.
        for id in (self.space.basis_count..self.space.subs.len() - 1).rev() {
            if mask_get(state, id) {
                continue;
            }
            if !self.space.constructible(state, id as u16) {
                continue;
            }
            mask_set(state, id);
            chain.push(id as u16);
            let len = self.space.subs[id].len();
            if self.dfs(state, depth_left - 1, max_len.max(len), chain) {
                return true;
            }
            chain.pop();
            mask_clear(state, id);
        }
        let entry = self.memo.entry(*state).or_insert(0);
        *entry = (*entry).max(depth_left);
        false
    }
}

/// Provably minimal assembly index for short strings.
pub fn exact_index(x: &Sequence, config: &ExactConfig) -> Result<AssemblyResult> {
    if x.is_empty() {
        return Err(Error::EmptySequence);
    }
    if x.len() > config.max_len {
        return Err(Error::ExactLimitExceeded {
            len: x.len(),
            limit: config.max_len,
        });
    }
    if x.len() == 1 {
        return Ok(single_symbol_result(x, Method::Exact));
    }

    let upper = heuristic_index(x, HeuristicMethod::BestOf)?;
    let distinct = {
        let mut seen = Vec::new();
        for &s in x.symbols() {
            if !seen.contains(&s) {
                seen.push(s);
            }
        }
        seen.len()
    };
    let lower = (ceil_log2(x.len() as u64) as usize).max(distinct - 1).max(1);
    if upper.index <= lower {
        let mut r = upper;
        r.method = Method::Exact;
        r.bits = encode_dictionary(&r);
        return Ok(r);
    }

    let space = Space::build(x);
    let mut search = Search {
        space: &space,
        memo: HashMap::new(),
        nodes: 0,
        node_budget: config.node_budget,
        exhausted: false,
    };
    for budget in lower..upper.index {
        search.memo.clear();
        let mut state: Mask = [0; 4];
        let mut chain = Vec::new();
        if search.dfs(&mut state, budget as u8, 1, &mut chain) {
            return Ok(result_from_chain(x, &space, &chain));
        }
        if search.exhausted {
            return Err(Error::BudgetExhausted {
                budget: config.node_budget,
            });
        }
    }
    // Every smaller budget was exhausted: the heuristic certificate is
    // minimal.
    let mut r = upper;
    r.method = Method::Exact;
    r.bits = encode_dictionary(&r);
    Ok(r)
}

fn result_from_chain(x: &Sequence, space: &Space, chain: &[u16]) -> AssemblyResult {
    let mut b = Builder::new(x);
    let mut entry_of: HashMap<u16, u32> = HashMap::new();
    for id in 0..space.basis_count {
        let sym = space.subs[id][0];
        entry_of.insert(id as u16, b.id_of(&[sym]).expect("basis"));
    }
    let mut constructed: Mask = [0; 4];
    let mut last = 0u32;
    for &id in chain {
        let (l, r) = space.splits[id as usize]
            .iter()
            .copied()
            .find(|&(l, r)| space.available(&constructed, l) && space.available(&constructed, r))
            .expect("chain order is valid");
        let le = entry_of[&l];
        let re = entry_of[&r];
        last = b.join(le, re);
        entry_of.insert(id, last);
        mask_set(&mut constructed, id as usize);
    }
    debug_assert_eq!(b.phrases[last as usize], x.symbols());
    AssemblyResult::from_parts(x.alphabet_size(), b.dictionary, last, Method::Exact)
}
