use std::fmt;

use crate::error::{Error, Result};

/// Largest supported number of generators.
pub const MAX_ARITY: usize = 255;

/// A monomial `x_{i_1} ... x_{i_r}` stored as its 0-based letter indices.
///
/// Words of a fixed length are ordered lexicographically by letter index;
/// the same order is used for pivots and for enumerating a basis of `V^{⊗m}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    /// Builds a word, checking every letter is `< n`.
    pub fn checked(letters: &[usize], n: usize) -> Result<Self> {
        let mut out = Vec::with_capacity(letters.len());
        for &l in letters {
            if l >= n || l > MAX_ARITY {
                return Err(Error::LetterOutOfRange { index: l, n });
            }
            out.push(l as u8);
        }
        Ok(Word(out))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `x_i^len`
    pub fn power(letter: u8, len: usize) -> Self {
        Word(vec![letter; len])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The factor of length `len` starting at 0-based position `start`.
    pub fn factor(&self, start: usize, len: usize) -> Word {
        Word(self.0[start..start + len].to_vec())
    }

    /// Position of the first occurrence of `pat` as a factor.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.0.is_empty() {
            return Some(0);
        }
        if pat.0.len() > self.0.len() {
            return None;
        }
        self.0.windows(pat.0.len()).position(|w| w == pat.0.as_slice())
    }

    pub fn max_letter(&self) -> Option<u8> {
        self.0.iter().copied().max()
    }

    /// Rank of the word among all words of the same length over `n` letters.
    pub fn index(&self, n: usize) -> u64 {
        self.0
            .iter()
            .fold(0u64, |acc, &l| acc * n as u64 + u64::from(l))
    }

    /// Inverse of [`Word::index`].
    pub fn from_index(mut idx: u64, n: usize, degree: usize) -> Word {
        let mut v = vec![0u8; degree];
        for slot in v.iter_mut().rev() {
            *slot = (idx % n as u64) as u8;
            idx /= n as u64;
        }
        Word(v)
    }

    /// All words of length `degree` over `n` letters, in increasing order.
    pub fn all(n: usize, degree: usize) -> Result<impl Iterator<Item = Word>> {
        let total = ambient_dim(n, degree)?;
        Ok((0..total).map(move |i| Word::from_index(i, n, degree)))
    }
}

impl From<&[u8]> for Word {
    fn from(v: &[u8]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "x{l}")?;
        }
        Ok(())
    }
}

/// `n^m`, the dimension of `V^{⊗m}`, or a resource error if it overflows.
pub fn ambient_dim(n: usize, m: usize) -> Result<u64> {
    (n as u64)
        .checked_pow(m as u32)
        .filter(|&d| d < u64::MAX / 4)
        .ok_or(Error::Resource {
            cap: "ambient-dimension",
            limit: u128::from(u64::MAX / 4),
            requested: (n as u128).saturating_pow(m as u32),
        })
}
