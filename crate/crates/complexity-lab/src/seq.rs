//! Finite symbol strings over an explicit alphabet.
//!
//! A [`Sequence`] is the universal input object: symbols are small
//! non-negative integers below `alphabet_size`. Sequences built from text
//! remember the character that each symbol index stands for, which keeps
//! parse dictionaries and assembly certificates readable.

use serde::Serialize;

use crate::error::{Error, Result};

pub type Symbol = u16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sequence {
    symbols: Vec<Symbol>,
    alphabet_size: usize,
    /// Character for each symbol index, when the sequence came from text.
    chars: Option<Vec<char>>,
}

impl Sequence {
    pub fn new(symbols: Vec<Symbol>, alphabet_size: usize) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptySequence);
        }
        for &s in &symbols {
            if s as usize >= alphabet_size {
                return Err(Error::SymbolOutOfRange {
                    symbol: s,
                    alphabet_size,
                });
            }
        }
        Ok(Self {
            symbols,
            alphabet_size,
            chars: None,
        })
    }

    pub fn with_chars(symbols: Vec<Symbol>, chars: Vec<char>) -> Result<Self> {
        let mut seq = Self::new(symbols, chars.len())?;
        seq.chars = Some(chars);
        Ok(seq)
    }

    /// Alphabet from distinct characters in first-occurrence order.
    pub fn from_text(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptySequence);
        }
        let mut chars: Vec<char> = Vec::new();
        let mut symbols = Vec::with_capacity(text.len());
        for c in text.chars() {
            let idx = match chars.iter().position(|&k| k == c) {
                Some(i) => i,
                None => {
                    chars.push(c);
                    chars.len() - 1
                }
            };
            symbols.push(idx as Symbol);
        }
        Self::with_chars(symbols, chars)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn chars(&self) -> Option<&[char]> {
        self.chars.as_deref()
    }

    /// First `n` symbols as a new sequence (alphabet unchanged).
    pub fn prefix(&self, n: usize) -> Sequence {
        Sequence {
            symbols: self.symbols[..n.min(self.symbols.len())].to_vec(),
            alphabet_size: self.alphabet_size,
            chars: self.chars.clone(),
        }
    }

    /// Sequence over the same alphabet from raw symbols.
    pub fn sibling(&self, symbols: Vec<Symbol>) -> Result<Sequence> {
        let mut s = Sequence::new(symbols, self.alphabet_size)?;
        s.chars = self.chars.clone();
        Ok(s)
    }

    /// Render symbols back to text; indices without a known character are
    /// shown as their decimal value.
    pub fn render(&self) -> String {
        self.render_slice(&self.symbols)
    }

    pub fn render_slice(&self, slice: &[Symbol]) -> String {
        match &self.chars {
            Some(chars) => slice.iter().map(|&s| chars[s as usize]).collect(),
            None => slice
                .iter()
                .map(|&s| s.to_string())
                .collect::<Vec<_>>()
                .join(""),
        }
    }
}
