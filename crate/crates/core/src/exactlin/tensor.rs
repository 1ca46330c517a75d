use std::collections::BTreeMap;
use std::fmt;

use super::field::Field;
use super::word::{ambient_dim, Word};
use crate::error::{Error, Result};

/// A homogeneous element of `V^{⊗degree}` with `dim V = arity`.
///
/// Terms are keyed by the word's lexicographic rank and kept sorted in
/// decreasing order, so the first term is the leading one. Stored
/// coefficients are never zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor<F> {
    arity: usize,
    degree: usize,
    terms: Vec<(u64, F)>,
}

impl<F: Field> Tensor<F> {
    pub fn zero(arity: usize, degree: usize) -> Self {
        Tensor {
            arity,
            degree,
            terms: Vec::new(),
        }
    }

    /// A scalar, i.e. a degree-0 tensor.
    pub fn scalar(arity: usize, c: F) -> Self {
        let mut t = Tensor::zero(arity, 0);
        if !c.is_zero() {
            t.terms.push((0, c));
        }
        t
    }

    pub fn monomial(arity: usize, word: &Word, coeff: F) -> Result<Self> {
        Tensor::from_terms(arity, word.degree(), [(word.clone(), coeff)])
    }

    /// The word itself with coefficient 1.
    pub fn word(arity: usize, word: &Word) -> Result<Self> {
        Tensor::monomial(arity, word, F::one())
    }

    /// Collects `(word, coeff)` pairs, summing repeated words and dropping zeros.
    pub fn from_terms<I>(arity: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, F)>,
    {
        ambient_dim(arity, degree)?;
        let mut acc: BTreeMap<u64, F> = BTreeMap::new();
        for (w, c) in terms {
            if w.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: w.degree(),
                });
            }
            if let Some(l) = w.max_letter() {
                if l as usize >= arity {
                    return Err(Error::LetterOutOfRange {
                        index: l as usize,
                        n: arity,
                    });
                }
            }
            let slot = acc.entry(w.index(arity)).or_insert_with(F::zero);
            *slot = slot.add(&c);
        }
        Ok(Tensor::from_map(arity, degree, acc))
    }

    pub(crate) fn from_map(arity: usize, degree: usize, acc: BTreeMap<u64, F>) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Tensor {
            arity,
            degree,
            terms,
        }
    }

    /// Terms must already be strictly decreasing by index and nonzero.
    pub(crate) fn from_sorted(arity: usize, degree: usize, terms: Vec<(u64, F)>) -> Self {
        debug_assert!(terms.windows(2).all(|p| p[0].0 > p[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Tensor {
            arity,
            degree,
            terms,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn raw(&self) -> &[(u64, F)] {
        &self.terms
    }

    /// Terms in decreasing word order.
    pub fn terms(&self) -> impl Iterator<Item = (Word, &F)> + '_ {
        self.terms
            .iter()
            .map(move |(i, c)| (Word::from_index(*i, self.arity, self.degree), c))
    }

    /// The largest word with a nonzero coefficient.
    pub fn leading(&self) -> Option<(Word, &F)> {
        self.terms
            .first()
            .map(|(i, c)| (Word::from_index(*i, self.arity, self.degree), c))
    }

    pub(crate) fn leading_index(&self) -> Option<u64> {
        self.terms.first().map(|(i, _)| *i)
    }

    pub(crate) fn coeff_at(&self, idx: u64) -> Option<&F> {
        self.terms
            .binary_search_by(|(i, _)| idx.cmp(i))
            .ok()
            .map(|p| &self.terms[p].1)
    }

    pub fn coeff(&self, word: &Word) -> F {
        if word.degree() != self.degree || word.max_letter().is_some_and(|l| l as usize >= self.arity) {
            return F::zero();
        }
        self.coeff_at(word.index(self.arity))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Tensor::zero(self.arity, self.degree);
        }
        Tensor {
            arity: self.arity,
            degree: self.degree,
            terms: self.terms.iter().map(|(i, a)| (*i, a.mul(c))).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().neg())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: &F, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.axpy_unchecked(c, other))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.add_scaled(&F::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add_scaled(&F::one().neg(), other)
    }

    /// Sorted merge; both sides must share arity and degree.
    pub(crate) fn axpy_unchecked(&self, c: &F, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, ca)), Some((ib, cb))) => {
                    if ia > ib {
                        out.push((*ia, ca.clone()));
                        a.next();
                    } else if ib > ia {
                        out.push((*ib, cb.mul(c)));
                        b.next();
                    } else {
                        let mut v = ca.clone();
                        v.sub_mul_assign(&c.neg(), cb);
                        if !v.is_zero() {
                            out.push((*ia, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ia, ca)), None) => {
                    out.push((*ia, ca.clone()));
                    a.next();
                }
                (None, Some((ib, cb))) => {
                    out.push((*ib, cb.mul(c)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        Tensor {
            arity: self.arity,
            degree: self.degree,
            terms: out,
        }
    }

    /// Tensor product `self ⊗ other` (concatenation of words).
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        let degree = self.degree + other.degree;
        let shift = ambient_dim(self.arity, other.degree)?;
        ambient_dim(self.arity, degree)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        // both sides decreasing, so the product list is decreasing as well
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                terms.push((i * shift + j, a.mul(b)));
            }
        }
        Ok(Tensor {
            arity: self.arity,
            degree,
            terms,
        })
    }

    /// `left ⊗ self ⊗ right` for words `left`, `right`.
    pub fn wrap(&self, left: &Word, right: &Word) -> Result<Self> {
        let l = Tensor::word(self.arity, left)?;
        let r = Tensor::word(self.arity, right)?;
        l.tensor(self)?.tensor(&r)
    }

    /// Swaps the letters at positions `k` and `k + 1` in every word.
    pub fn swap_positions(&self, k: usize) -> Self {
        assert!(k + 1 < self.degree, "position out of range");
        let acc: BTreeMap<u64, F> = self
            .terms()
            .map(|(w, c)| {
                let mut l = w.letters().to_vec();
                l.swap(k, k + 1);
                (Word::new(l).index(self.arity), c.clone())
            })
            .collect();
        Tensor::from_map(self.arity, self.degree, acc)
    }

    /// Re-embeds into `new_arity` generators, adding `shift` to every letter.
    pub fn relabel(&self, shift: usize, new_arity: usize) -> Result<Self> {
        let terms: Vec<(Word, F)> = self
            .terms()
            .map(|(w, c)| {
                let letters: Vec<usize> = w.letters().iter().map(|&l| l as usize + shift).collect();
                Word::checked(&letters, new_arity).map(|w| (w, c.clone()))
            })
            .collect::<Result<_>>()?;
        Tensor::from_terms(new_arity, self.degree, terms)
    }

    /// Splits every word after its first `k` letters, grouping by the prefix:
    /// returns `(prefix, suffix part)` pairs so that `self = Σ prefix ⊗ part`.
    pub(crate) fn split_prefix(&self, k: usize) -> Vec<(u64, Tensor<F>)> {
        let rest = self.degree - k;
        let div = (self.arity as u64).pow(rest as u32);
        let mut groups: BTreeMap<u64, Vec<(u64, F)>> = BTreeMap::new();
        for (i, c) in &self.terms {
            groups.entry(i / div).or_default().push((i % div, c.clone()));
        }
        groups
            .into_iter()
            .rev()
            .map(|(p, ts)| (p, Tensor::from_sorted(self.arity, rest, ts)))
            .collect()
    }
}

impl<F: Field> fmt::Debug for Tensor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> fmt::Display for Tensor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::field::Q;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    fn w(l: &[u8]) -> Word {
        Word::new(l.to_vec())
    }

    #[test]
    fn from_terms_combines_and_sorts() {
        let t = Tensor::from_terms(
            2,
            2,
            [(w(&[0, 1]), q(1)), (w(&[1, 0]), q(2)), (w(&[0, 1]), q(-1))],
        )
        .unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.leading().unwrap().0, w(&[1, 0]));
        assert!(Tensor::<Q>::from_terms(2, 2, [(w(&[0]), q(1))]).is_err());
        assert!(Tensor::<Q>::from_terms(2, 1, [(w(&[2]), q(1))]).is_err());
    }

    #[test]
    fn tensor_product_and_wrap() {
        let f = Tensor::from_terms(2, 2, [(w(&[0, 1]), q(1)), (w(&[1, 0]), q(-1))]).unwrap();
        let g = f.wrap(&w(&[1]), &w(&[0])).unwrap();
        assert_eq!(g.degree(), 4);
        assert_eq!(g.coeff(&w(&[1, 0, 1, 0])), q(1));
        assert_eq!(g.coeff(&w(&[1, 1, 0, 0])), q(-1));
        assert!(g.raw().windows(2).all(|p| p[0].0 > p[1].0));
    }

    #[test]
    fn axpy_cancels() {
        let f = Tensor::from_terms(2, 2, [(w(&[0, 1]), q(1)), (w(&[1, 0]), q(-1))]).unwrap();
        assert!(f.sub(&f).unwrap().is_zero());
        let g = Tensor::word(2, &w(&[0, 1])).unwrap();
        let h = f.add_scaled(&q(-1), &g).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h.coeff(&w(&[1, 0])), q(-1));
    }

    #[test]
    fn splitting_reassembles() {
        let f = Tensor::from_terms(
            2,
            3,
            [(w(&[0, 1, 1]), q(3)), (w(&[1, 0, 1]), q(-1)), (w(&[0, 0, 1]), q(2))],
        )
        .unwrap();
        let mut back = Tensor::zero(2, 3);
        for (p, part) in f.split_prefix(1) {
            let pre = Tensor::word(2, &Word::from_index(p, 2, 1)).unwrap();
            back = back.add(&pre.tensor(&part).unwrap()).unwrap();
        }
        assert_eq!(back, f);
    }
}
