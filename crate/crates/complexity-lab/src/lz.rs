//! LZW coder and LZ-prefix parser with their size metrics.
//!
//! Both coders report the dictionary size and the codeword-list length; the
//! codeword-list length is the complexity value used throughout the
//! experiments. `compressed_bits` uses a variable-width schedule (the width
//! of a codeword is `ceil(log2(dictionary size at emission time))`), which
//! matters only for the bit-level comparisons, never for the counts.
//!
//! The LZ-prefix parser factors the input left to right; each factor is the
//! longest candidate among previously emitted factors and prefixes of the
//! already-parsed portion that prefixes the remainder, else a single
//! symbol. Restricting candidates to already-constructed objects makes the
//! factor count a valid join-program length: folding the factors together
//! left to right replays the input, so `factor count - 1` upper-bounds the
//! assembly index.

use serde::Serialize;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::seq::{Sequence, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Scheme {
    Lzw,
    LzPrefix,
}

/// One dictionary entry: a codeword id and the phrase it stands for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DictEntry {
    pub id: u32,
    pub phrase: Vec<Symbol>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParseResult {
    pub scheme: Scheme,
    /// Ordered (id, phrase) pairs; ids are positions in this list.
    pub dictionary: Vec<DictEntry>,
    /// Emitted codewords, in order.
    pub codewords: Vec<u32>,
    /// Dictionary size.
    pub dictionary_size: usize,
    /// Codeword-list length; the complexity value of the coder.
    pub codeword_count: usize,
    pub compressed_bits: u64,
    alphabet_size: usize,
    chars: Option<Vec<char>>,
}

impl ParseResult {
    /// Phrases of the emitted codewords, rendered as text.
    pub fn rendered_factors(&self) -> Vec<String> {
        self.codewords
            .iter()
            .map(|&id| {
                let phrase = &self.dictionary[id as usize].phrase;
                match &self.chars {
                    Some(chars) => phrase.iter().map(|&s| chars[s as usize]).collect(),
                    None => phrase
                        .iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>()
                        .join(""),
                }
            })
            .collect()
    }
}

#[inline]
fn width_for(dict_len: usize) -> u64 {
    (usize::BITS - (dict_len.max(1) - 1).leading_zeros()) as u64
}

/// Standard LZW. The dictionary is seeded with the input's own alphabet in
/// first-occurrence order, then grows by one phrase per emission.
pub fn lzw_encode(x: &Sequence) -> Result<ParseResult> {
    if x.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut dictionary: Vec<DictEntry> = Vec::new();
    let mut index: HashMap<Vec<Symbol>, u32> = HashMap::new();
    let mut seed_order: Vec<Symbol> = Vec::new();
    for &s in x.symbols() {
        if !seed_order.contains(&s) {
            seed_order.push(s);
        }
    }
    for &s in &seed_order {
        let id = dictionary.len() as u32;
        dictionary.push(DictEntry {
            id,
            phrase: vec![s],
        });
        index.insert(vec![s], id);
    }

    let mut codewords = Vec::new();
    let mut compressed_bits = 0u64;
    let mut current = vec![x.symbols()[0]];
    for &c in &x.symbols()[1..] {
        let mut extended = current.clone();
        extended.push(c);
        if index.contains_key(&extended) {
            current = extended;
        } else {
            let id = index[&current];
            compressed_bits += width_for(dictionary.len());
            codewords.push(id);
            let new_id = dictionary.len() as u32;
            index.insert(extended.clone(), new_id);
            dictionary.push(DictEntry {
                id: new_id,
                phrase: extended,
            });
            current = vec![c];
        }
    }
    compressed_bits += width_for(dictionary.len());
    codewords.push(index[&current]);

    Ok(ParseResult {
        scheme: Scheme::Lzw,
        dictionary_size: dictionary.len(),
        codeword_count: codewords.len(),
        dictionary,
        codewords,
        compressed_bits,
        alphabet_size: x.alphabet_size(),
        chars: x.chars().map(|c| c.to_vec()),
    })
}

/// Codeword count of the LZW parse of every prefix, in one pass.
///
/// `result[t]` is the codeword count for `x[..=t]`. While scanning, the
/// pending phrase is always a dictionary member, so the prefix ending
/// mid-phrase costs exactly one extra codeword.
pub fn lzw_counts_per_prefix(x: &Sequence) -> Vec<u32> {
    let n = x.len();
    let mut out = vec![0u32; n];
    if n == 0 {
        return out;
    }
    let mut index: HashMap<Vec<Symbol>, u32> = HashMap::new();
    let mut next_id = 0u32;
    for &s in x.symbols() {
        if !index.contains_key(&vec![s][..].to_vec()) {
            index.insert(vec![s], next_id);
            next_id += 1;
        }
    }
    let mut emitted = 0u32;
    let mut current: Vec<Symbol> = vec![x.symbols()[0]];
    out[0] = 1;
    for (t, &c) in x.symbols().iter().enumerate().skip(1) {
        let mut extended = current.clone();
        extended.push(c);
        if index.contains_key(&extended) {
            current = extended;
        } else {
            index.insert(extended, next_id);
            next_id += 1;
            emitted += 1;
            current = vec![c];
        }
        out[t] = emitted + 1;
    }
    out
}

/// Longest common prefix of `x` and each suffix of `x` (Z-array).
fn z_array(x: &[Symbol]) -> Vec<usize> {
    let n = x.len();
    let mut z = vec![0usize; n];
    z[0] = n;
    let (mut l, mut r) = (0usize, 0usize);
    for i in 1..n {
        if i < r {
            z[i] = z[i - l].min(r - i);
        }
        while i + z[i] < n && x[z[i]] == x[i + z[i]] {
            z[i] += 1;
        }
        if i + z[i] > r {
            l = i;
            r = i + z[i];
        }
    }
    z
}

struct FactorTrie {
    // node -> symbol -> node; node 0 is the root.
    children: Vec<HashMap<Symbol, u32>>,
    terminal: Vec<bool>,
}

impl FactorTrie {
    fn new() -> Self {
        Self {
            children: vec![HashMap::new()],
            terminal: vec![false],
        }
    }

    fn insert(&mut self, phrase: &[Symbol]) {
        let mut node = 0u32;
        for &s in phrase {
            let next = match self.children[node as usize].get(&s) {
                Some(&n) => n,
                None => {
                    let n = self.children.len() as u32;
                    self.children.push(HashMap::new());
                    self.terminal.push(false);
                    self.children[node as usize].insert(s, n);
                    n
                }
            };
            node = next;
        }
        self.terminal[node as usize] = true;
    }

    /// Longest inserted phrase that prefixes `rest`.
    fn longest_match(&self, rest: &[Symbol]) -> usize {
        let mut node = 0u32;
        let mut best = 0usize;
        for (i, &s) in rest.iter().enumerate() {
            match self.children[node as usize].get(&s) {
                Some(&n) => {
                    node = n;
                    if self.terminal[node as usize] {
                        best = i + 1;
                    }
                }
                None => break,
            }
        }
        best
    }
}

/// LZ-prefix factorization (see module docs).
pub fn lz_prefix_parse(x: &Sequence) -> Result<ParseResult> {
    if x.is_empty() {
        return Err(Error::EmptySequence);
    }
    let symbols = x.symbols();
    let n = symbols.len();
    let z = z_array(symbols);

    let mut dictionary: Vec<DictEntry> = Vec::new();
    let mut index: HashMap<Vec<Symbol>, u32> = HashMap::new();
    let mut seed_order: Vec<Symbol> = Vec::new();
    for &s in symbols {
        if !seed_order.contains(&s) {
            seed_order.push(s);
        }
    }
    for &s in &seed_order {
        let id = dictionary.len() as u32;
        dictionary.push(DictEntry {
            id,
            phrase: vec![s],
        });
        index.insert(vec![s], id);
    }

    let mut trie = FactorTrie::new();
    let mut codewords = Vec::new();
    let mut compressed_bits = 0u64;
    let mut pos = 0usize;
    while pos < n {
        let rest = &symbols[pos..];
        // Longest previously emitted factor prefixing the remainder.
        let by_factor = trie.longest_match(rest);
        // Longest prefix of the parsed portion prefixing the remainder.
        let by_prefix = if pos == 0 {
            0
        } else {
            z[pos].min(pos).min(n - pos)
        };
        let len = by_factor.max(by_prefix).max(1);
        let phrase = rest[..len].to_vec();
        compressed_bits += width_for(dictionary.len());
        let id = match index.get(&phrase) {
            Some(&id) => id,
            None => {
                let id = dictionary.len() as u32;
                index.insert(phrase.clone(), id);
                dictionary.push(DictEntry {
                    id,
                    phrase: phrase.clone(),
                });
                id
            }
        };
        codewords.push(id);
        trie.insert(&phrase);
        pos += len;
    }

    Ok(ParseResult {
        scheme: Scheme::LzPrefix,
        dictionary_size: dictionary.len(),
        codeword_count: codewords.len(),
        dictionary,
        codewords,
        compressed_bits,
        alphabet_size: x.alphabet_size(),
        chars: x.chars().map(|c| c.to_vec()),
    })
}

/// Factor count of the LZ-prefix parse, without materializing the result.
pub fn lz_prefix_factor_count(x: &Sequence) -> usize {
    lz_prefix_parse(x).map(|p| p.codeword_count).unwrap_or(0)
}

/// Concatenate the phrases behind the codeword list.
pub fn decode(p: &ParseResult) -> Result<Sequence> {
    let mut symbols = Vec::new();
    for &id in &p.codewords {
        let entry = p
            .dictionary
            .get(id as usize)
            .ok_or(Error::CorruptParse { id })?;
        symbols.extend_from_slice(&entry.phrase);
    }
    let mut seq = Sequence::new(symbols, p.alphabet_size)?;
    if let Some(chars) = &p.chars {
        seq = Sequence::with_chars(seq.symbols().to_vec(), chars.clone())?;
    }
    Ok(seq)
}
