//! Finite words over the alphabet `{1, ..., m}`.
//!
//! Symbols are stored zero-based; the textual form is one-based, written as
//! plain digits (`"132"`) when every symbol is below 10 and dot-separated
//! (`"1.12.3"`) otherwise.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest alphabet a [`Word`] can index.
pub const MAX_ALPHABET: usize = u8::MAX as usize + 1;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(SmallVec<[u8; 16]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    /// Builds a word from zero-based symbol indices.
    pub fn from_indices(indices: &[u8]) -> Self {
        Word(SmallVec::from_slice(indices))
    }

    /// Builds a word from one-based symbols, as they appear in the literature.
    pub fn from_symbols(symbols: &[usize]) -> Result<Self> {
        symbols
            .iter()
            .map(|&s| {
                if s == 0 || s > MAX_ALPHABET {
                    Err(Error::InvalidWord { symbol: s, alphabet: MAX_ALPHABET })
                } else {
                    Ok((s - 1) as u8)
                }
            })
            .collect::<Result<SmallVec<_>>>()
            .map(Word)
    }

    pub fn single(index: u8) -> Self {
        Word(SmallVec::from_slice(&[index]))
    }

    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    /// One-based symbols.
    pub fn symbols(&self) -> Vec<usize> {
        self.0.iter().map(|&s| s as usize + 1).collect()
    }

    pub fn push(&mut self, index: u8) {
        self.0.push(index);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn repeat(&self, times: usize) -> Word {
        let mut out = SmallVec::with_capacity(self.len() * times);
        for _ in 0..times {
            out.extend_from_slice(&self.0);
        }
        Word(out)
    }

    /// Checks every symbol against an alphabet of size `m`.
    pub fn validate(&self, m: usize) -> Result<()> {
        match self.0.iter().find(|&&s| s as usize >= m) {
            Some(&s) => Err(Error::InvalidWord { symbol: s as usize + 1, alphabet: m }),
            None => Ok(()),
        }
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }
}

impl Deref for Word {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl FromIterator<u8> for Word {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dotted = self.0.iter().any(|&s| s >= 9);
        for (k, s) in self.0.iter().enumerate() {
            if dotted && k > 0 {
                f.write_str(".")?;
            }
            write!(f, "{}", *s as usize + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let parse = |tok: &str| {
            tok.parse::<usize>().map_err(|_| Error::precondition(format!("bad symbol {tok:?} in word {s:?}")))
        };
        let symbols = if s.contains('.') {
            s.split('.').map(parse).collect::<Result<Vec<_>>>()?
        } else {
            s.chars().map(|c| parse(&c.to_string())).collect::<Result<Vec<_>>>()?
        };
        Word::from_symbols(&symbols)
    }
}
