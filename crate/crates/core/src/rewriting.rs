//! Rewriting with a single rule `lead ↦ tail`.
//!
//! Words are compared degree first, then letterwise by a rank permutation of
//! the generators. This order is compatible with concatenation, so every
//! rewriting step strictly decreases the word and reduction terminates even
//! when the tail has lower-degree terms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Tensor, Word};
use crate::monomial;

/// Degree-lexicographic order with letters compared by rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordOrder {
    ranks: Vec<u8>,
    letters: Vec<u8>,
}

impl WordOrder {
    /// Letters compared by index.
    pub fn identity(n: usize) -> Self {
        let ranks: Vec<u8> = (0..n).map(|i| i as u8).collect();
        WordOrder {
            letters: ranks.clone(),
            ranks,
        }
    }

    /// `ranks[i]` is the position of letter `i`; must be a permutation.
    pub fn from_ranks(ranks: Vec<u8>) -> Result<Self> {
        let mut letters = vec![u8::MAX; ranks.len()];
        for (i, &r) in ranks.iter().enumerate() {
            let slot = letters
                .get_mut(r as usize)
                .filter(|s| **s == u8::MAX)
                .ok_or_else(|| Error::precondition(format!("ranks {ranks:?} are not a permutation")))?;
            *slot = i as u8;
        }
        Ok(WordOrder { ranks, letters })
    }

    pub fn generators(&self) -> usize {
        self.ranks.len()
    }

    fn key(&self, w: &Word) -> Key {
        Key(w.letters().iter().map(|&l| self.ranks[l as usize]).collect())
    }

    fn word(&self, k: &Key) -> Word {
        Word::new(k.0.iter().map(|&r| self.letters[r as usize]).collect())
    }

    pub fn cmp(&self, a: &Word, b: &Word) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

/// Ranked letters; ordered by length, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Key(Vec<u8>);

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `lead ↦ tail`, every tail word strictly below `lead`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule<F: Field> {
    order: WordOrder,
    lead: Word,
    tail: Vec<(Word, F)>,
}

impl<F: Field> RewriteRule<F> {
    pub fn lead(&self) -> &Word {
        &self.lead
    }

    /// Tail terms, largest first.
    pub fn tail(&self) -> &[(Word, F)] {
        &self.tail
    }

    pub fn order(&self) -> &WordOrder {
        &self.order
    }

    pub fn generators(&self) -> usize {
        self.order.generators()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.tail.iter().all(|(w, _)| w.degree() == self.lead.degree())
    }

    /// The tail as a homogeneous tensor.
    pub fn tail_tensor(&self) -> Result<Tensor<F>> {
        if !self.is_homogeneous() {
            return Err(Error::precondition("tail has terms of lower degree"));
        }
        Tensor::from_terms(self.generators(), self.lead.degree(), self.tail.iter().cloned())
    }
}

impl<F: Field> fmt::Display for RewriteRule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> ", self.lead)?;
        if self.tail.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.tail.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){w}")?;
        }
        Ok(())
    }
}

/// Rule from a homogeneous relation: the largest word becomes `lead`, the
/// rest divided by minus its coefficient becomes `tail`.
pub fn make_rule<F: Field>(f: &Tensor<F>, order: &WordOrder) -> Result<RewriteRule<F>> {
    if f.is_zero() {
        return Err(Error::ZeroRelation);
    }
    check_arity(order, f.arity())?;
    make_inhomogeneous_rule(f.terms().map(|(w, c)| (w, c.clone())).collect(), order)
}

/// Rule from a relation whose terms may have different degrees.
pub fn make_inhomogeneous_rule<F: Field>(terms: Vec<(Word, F)>, order: &WordOrder) -> Result<RewriteRule<F>> {
    let n = order.generators();
    let mut acc: BTreeMap<Key, F> = BTreeMap::new();
    for (w, c) in terms {
        if let Some(l) = w.max_letter().filter(|&l| l as usize >= n) {
            return Err(Error::LetterOutOfRange { index: l as usize, n });
        }
        add_term(&mut acc, order.key(&w), &c);
    }
    let (lead_key, lead_coeff) = acc.pop_last().ok_or(Error::ZeroRelation)?;
    let scale = lead_coeff.inv().expect("nonzero").neg();
    let tail = acc
        .into_iter()
        .rev()
        .map(|(k, c)| (order.word(&k), c.mul(&scale)))
        .collect();
    Ok(RewriteRule {
        order: order.clone(),
        lead: order.word(&lead_key),
        tail,
    })
}

fn check_arity(order: &WordOrder, n: usize) -> Result<()> {
    if order.generators() != n {
        return Err(Error::ArityMismatch {
            expected: order.generators(),
            found: n,
        });
    }
    Ok(())
}

fn add_term<F: Field>(acc: &mut BTreeMap<Key, F>, k: Key, c: &F) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&k) {
        Some(slot) => {
            *slot = slot.add(c);
            if slot.is_zero() {
                acc.remove(&k);
            }
        }
        None => {
            acc.insert(k, c.clone());
        }
    }
}

/// Normal form of a linear combination of words of any degrees, largest
/// term first.
pub fn normal_form_terms<F: Field>(rule: &RewriteRule<F>, terms: &[(Word, F)]) -> Vec<(Word, F)> {
    let order = &rule.order;
    let mut work: BTreeMap<Key, F> = BTreeMap::new();
    for (w, c) in terms {
        add_term(&mut work, order.key(w), c);
    }
    let mut done = Vec::new();
    while let Some((k, c)) = work.pop_last() {
        let w = order.word(&k);
        match w.find(&rule.lead) {
            None => done.push((w, c)),
            Some(at) => rewrite_at(rule, &w, at, &c, &mut work),
        }
    }
    done
}

/// Replaces the occurrence of `lead` at `at` in `c·w` and adds the result
/// to `work`.
fn rewrite_at<F: Field>(rule: &RewriteRule<F>, w: &Word, at: usize, c: &F, work: &mut BTreeMap<Key, F>) {
    let l = w.letters();
    let (pre, post) = (&l[..at], &l[at + rule.lead.degree()..]);
    for (t, tc) in &rule.tail {
        let mut letters = pre.to_vec();
        letters.extend_from_slice(t.letters());
        letters.extend_from_slice(post);
        add_term(work, rule.order.key(&Word::new(letters)), &c.mul(tc));
    }
}

/// Normal form of a homogeneous tensor; no word of the result contains `lead`.
pub fn normal_form<F: Field>(rule: &RewriteRule<F>, t: &Tensor<F>) -> Result<Tensor<F>> {
    check_arity(&rule.order, t.arity())?;
    if !rule.is_homogeneous() {
        return Err(Error::precondition(
            "homogeneous normal form needs a homogeneous rule; use normal_form_terms",
        ));
    }
    let terms: Vec<(Word, F)> = t.terms().map(|(w, c)| (w, c.clone())).collect();
    Tensor::from_terms(t.arity(), t.degree(), normal_form_terms(rule, &terms))
}

/// A self-overlap of `lead` and the normal forms of its two reductions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambiguity<F: Field> {
    pub word: Word,
    /// Start of the second occurrence of `lead`.
    pub shift: usize,
    pub via_left: Vec<(Word, F)>,
    pub via_right: Vec<(Word, F)>,
    pub resolved: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceReport<F: Field> {
    pub ambiguities: Vec<Ambiguity<F>>,
}

impl<F: Field> ConfluenceReport<F> {
    pub fn is_confluent(&self) -> bool {
        self.ambiguities.iter().all(|a| a.resolved)
    }
}

/// Words `lead · lead[N-s..]` for each shift `s` in `1..N` where `lead`
/// overlaps itself, i.e. degrees `N + 1 ..= 2N - 1`.
pub fn self_overlaps(lead: &Word) -> Vec<(usize, Word)> {
    let l = lead.letters();
    let big_n = l.len();
    (1..big_n)
        .filter(|&s| l[s..] == l[..big_n - s])
        .map(|s| (s, lead.concat(&Word::new(l[big_n - s..].to_vec()))))
        .collect()
}

/// With one rule the only critical pairs are self-overlaps of `lead`; each
/// is reduced at both occurrences and the normal forms compared.
pub fn confluence_check<F: Field>(rule: &RewriteRule<F>) -> ConfluenceReport<F> {
    let ambiguities = self_overlaps(&rule.lead)
        .into_iter()
        .map(|(shift, word)| {
            let reduce_at = |at: usize| {
                let mut work = BTreeMap::new();
                rewrite_at(rule, &word, at, &F::one(), &mut work);
                let terms: Vec<(Word, F)> = work.into_iter().map(|(k, c)| (rule.order.word(&k), c)).collect();
                normal_form_terms(rule, &terms)
            };
            let via_left = reduce_at(0);
            let via_right = reduce_at(shift);
            Ambiguity {
                resolved: via_left == via_right,
                word,
                shift,
                via_left,
                via_right,
            }
        })
        .collect();
    ConfluenceReport { ambiguities }
}

/// Number of degree-`d` words over `n` letters without `lead` as a factor.
pub fn irreducible_count<F: Field>(rule: &RewriteRule<F>, n: usize, d: usize) -> Result<u128> {
    monomial::avoid_count(&rule.lead, n, d)
}

/// Irreducible words of degree at most `d`.
pub fn irreducible_count_upto<F: Field>(rule: &RewriteRule<F>, n: usize, d: usize) -> Result<u128> {
    Ok(monomial::avoid_counts(&rule.lead, n, d)?.into_iter().sum())
}
