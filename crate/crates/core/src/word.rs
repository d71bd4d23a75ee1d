//! Words over a symmetrized generator alphabet.
//!
//! A [`Word`] is a plain sequence of [`GenSymbol`]s and knows nothing about
//! the group it will be evaluated in. Text conversion goes through an
//! [`Alphabet`], which maps generator indices to letters: lowercase for a
//! generator, uppercase for its inverse, and the lowercase letter alone for
//! generators of order two.

use std::fmt;

use crate::error::{Error, Result};

/// A generator `s ∈ A ∪ A⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSymbol {
    pub base: u8,
    pub inverted: bool,
}

impl GenSymbol {
    pub const fn new(base: u8, inverted: bool) -> Self {
        Self { base, inverted }
    }

    pub const fn positive(base: u8) -> Self {
        Self::new(base, false)
    }

    pub const fn negative(base: u8) -> Self {
        Self::new(base, true)
    }

    pub const fn inverse(self) -> Self {
        Self::new(self.base, !self.inverted)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<GenSymbol>);

impl Word {
    pub const fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<GenSymbol>) -> Self {
        Self(symbols)
    }

    /// `s^count`, or `(s⁻¹)^|count|` for negative `count`.
    pub fn power(s: GenSymbol, count: i64) -> Self {
        let s = if count < 0 { s.inverse() } else { s };
        Self(vec![s; count.unsigned_abs() as usize])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[GenSymbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<GenSymbol> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GenSymbol> {
        self.0.iter()
    }

    pub fn get(&self, index: usize) -> Option<GenSymbol> {
        self.0.get(index).copied()
    }

    pub fn push(&mut self, s: GenSymbol) {
        self.0.push(s);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    /// `w(t)`: the length-`t` prefix, or the whole word when `t > |w|`.
    pub fn prefix(&self, t: usize) -> Word {
        Word(self.0[..t.min(self.len())].to_vec())
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// The formal inverse: reversed, with every symbol inverted.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|s| s.inverse()).collect())
    }

    /// Cancels adjacent `s s⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<GenSymbol> = Vec::with_capacity(self.len());
        for &s in &self.0 {
            if stack.last() == Some(&s.inverse()) {
                stack.pop();
            } else {
                stack.push(s);
            }
        }
        Word(stack)
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }
}

impl FromIterator<GenSymbol> for Word {
    fn from_iter<I: IntoIterator<Item = GenSymbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a GenSymbol;
    type IntoIter = std::slice::Iter<'a, GenSymbol>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

pub fn free_reduce(w: &Word) -> Word {
    w.free_reduce()
}

pub fn word_prefix(w: &Word, t: usize) -> Word {
    w.prefix(t)
}

pub fn invert_word(w: &Word) -> Word {
    w.inverse()
}

/// Letters for the generators of one group model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<char>,
    involutions: Vec<bool>,
}

impl Alphabet {
    /// `letters` must be distinct lowercase ASCII letters.
    pub fn new(letters: &[char], involutions: &[bool]) -> Self {
        assert_eq!(letters.len(), involutions.len());
        assert!(letters.iter().all(|c| c.is_ascii_lowercase()));
        Self {
            letters: letters.to_vec(),
            involutions: involutions.to_vec(),
        }
    }

    /// Number of generators `m = |A|`.
    pub fn rank(&self) -> usize {
        self.letters.len()
    }

    pub fn letter(&self, base: u8) -> char {
        self.letters[base as usize]
    }

    pub fn is_involution(&self, base: u8) -> bool {
        self.involutions[base as usize]
    }

    pub fn contains(&self, s: GenSymbol) -> bool {
        (s.base as usize) < self.rank()
    }

    pub fn symbol(&self, letter: char) -> Option<GenSymbol> {
        let lower = letter.to_ascii_lowercase();
        let base = self.letters.iter().position(|&c| c == lower)? as u8;
        let inverted = letter.is_ascii_uppercase() && !self.involutions[base as usize];
        Some(GenSymbol::new(base, inverted))
    }

    /// The positive generators `A`, in index order.
    pub fn positive(&self) -> Vec<GenSymbol> {
        (0..self.rank() as u8).map(GenSymbol::positive).collect()
    }

    /// All distinct directions of the Cayley graph in the order
    /// `a, a⁻¹, b, b⁻¹, …`; involutions contribute a single direction.
    pub fn directions(&self) -> Vec<GenSymbol> {
        let mut out = Vec::with_capacity(2 * self.rank());
        for base in 0..self.rank() as u8 {
            out.push(GenSymbol::positive(base));
            if !self.is_involution(base) {
                out.push(GenSymbol::negative(base));
            }
        }
        out
    }

    /// Parses the letter format. Whitespace and `ε` are ignored.
    pub fn parse(&self, text: &str) -> Result<Word> {
        let mut out = Vec::new();
        for (position, ch) in text.chars().enumerate() {
            if ch.is_whitespace() || ch == 'ε' {
                continue;
            }
            match self.symbol(ch) {
                Some(s) => out.push(s),
                None => {
                    return Err(Error::MalformedWord {
                        position,
                        reason: format!("letter `{ch}` is not in the alphabet {self}"),
                    })
                }
            }
        }
        Ok(Word(out))
    }

    pub fn format(&self, w: &Word) -> String {
        w.iter().map(|&s| self.format_symbol(s)).collect()
    }

    pub fn format_symbol(&self, s: GenSymbol) -> char {
        let c = self.letter(s.base);
        if s.inverted && !self.is_involution(s.base) {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }

    /// Checks every symbol of `w` against the alphabet.
    pub fn check(&self, w: &Word) -> Result<()> {
        match w.iter().position(|&s| !self.contains(s)) {
            None => Ok(()),
            Some(position) => Err(Error::MalformedWord {
                position,
                reason: format!("generator index {} out of range", w.0[position].base),
            }),
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.letters.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}
