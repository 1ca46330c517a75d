//! Monomial relations: Koszulity by overlap enumeration, the single-word
//! period test, monomial W-spaces, word counting and the Koszul census.
//!
//! Words of degree `N` are handled as base-`n` indices here, so an overlap
//! `u = s·t`, `v = t·r` is a pair of modular comparisons.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exactlin::{ambient_dim, Field, Subspace, Tensor, Word};
use crate::exec::Exec;
use crate::hilbert::{self, GkDimension, RationalSeries};
use crate::koszul::GlobalDimension;

/// Default upper bound on the number of subsets `C(n^N, p)` a census may
/// enumerate.
pub const DEFAULT_CENSUS_CAP: u128 = 50_000_000;

/// A set `C` of degree-`N` words over `n` letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialSet {
    n: usize,
    degree: usize,
    words: BTreeSet<Word>,
}

impl MonomialSet {
    pub fn new(n: usize, degree: usize, words: impl IntoIterator<Item = Word>) -> Result<Self> {
        if degree < 2 {
            return Err(Error::InvalidPresentation(format!("relation degree {degree} < 2")));
        }
        let mut set = BTreeSet::new();
        for w in words {
            if w.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: w.degree(),
                });
            }
            if let Some(l) = w.max_letter().filter(|&l| l as usize >= n) {
                return Err(Error::LetterOutOfRange { index: l as usize, n });
            }
            set.insert(w);
        }
        Ok(MonomialSet { n, degree, words: set })
    }

    pub fn singleton(n: usize, f: &Word) -> Result<Self> {
        Self::new(n, f.degree(), [f.clone()])
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetVerdict {
    pub is_koszul: bool,
    /// Overlap length parameter `m` of the first failure.
    pub failing_m: Option<usize>,
    /// A word of degree `N + m` whose first and last degree-`N` factors are
    /// in `C` but whose factor at position `m - 1` is not.
    pub counterexample: Option<Word>,
}

/// Shape of a degree-`N` word space in index form.
#[derive(Clone, Copy)]
struct Shape {
    n: u64,
    big_n: usize,
    total: u64,
}

impl Shape {
    fn new(n: usize, big_n: usize) -> Result<Self> {
        Ok(Shape {
            n: n as u64,
            big_n,
            total: ambient_dim(n, big_n)?,
        })
    }

    fn pow(self, k: usize) -> u64 {
        self.n.pow(k as u32)
    }

    /// `Some(middle)` when `u` and `v` overlap in `N - m` letters; `middle`
    /// is the degree-`N` factor of the glued word at position `m - 1`.
    fn overlap(self, u: u64, v: u64, m: usize) -> Option<(u64, u64)> {
        let tail = self.pow(self.big_n - m);
        let shift = self.pow(m);
        if u % tail != v / shift {
            return None;
        }
        let glued = u * shift + v % shift;
        Some(((glued / self.n) % self.total, glued))
    }
}

/// Overlap criterion over pairs of words of `C`.
pub fn is_koszul_set(c: &MonomialSet) -> SetVerdict {
    let shape = Shape::new(c.n, c.degree).expect("words exist, so n^N fits");
    let idx: Vec<u64> = c.words.iter().map(|w| w.index(c.n)).collect();
    let members: BTreeSet<u64> = idx.iter().copied().collect();
    for m in 2..c.degree {
        for &u in &idx {
            for &v in &idx {
                if let Some((mid, glued)) = shape.overlap(u, v, m) {
                    if !members.contains(&mid) {
                        return SetVerdict {
                            is_koszul: false,
                            failing_m: Some(m),
                            counterexample: Some(Word::from_index(glued, c.n, c.degree + m)),
                        };
                    }
                }
            }
        }
    }
    SetVerdict {
        is_koszul: true,
        failing_m: None,
        counterexample: None,
    }
}

/// Border lengths of `w` (proper prefixes that are also suffixes), longest
/// first, from the prefix function.
pub fn borders(w: &[u8]) -> Vec<usize> {
    let pi = prefix_function(w);
    let mut out = Vec::new();
    let mut b = pi.last().copied().unwrap_or(0);
    while b > 0 {
        out.push(b);
        b = pi[b - 1];
    }
    out
}

fn prefix_function(w: &[u8]) -> Vec<usize> {
    let mut pi = vec![0usize; w.len()];
    for i in 1..w.len() {
        let mut k = pi[i - 1];
        while k > 0 && w[i] != w[k] {
            k = pi[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        pi[i] = k;
    }
    pi
}

/// A single word is Koszul unless it has a period `m` with `2 ≤ m ≤ N - 1`
/// whose block is not a constant letter. A constant block would make the
/// whole word a power of one letter, which is Koszul.
pub fn is_koszul_single(f: &Word) -> bool {
    let l = f.letters();
    let big_n = l.len();
    if l.windows(2).all(|p| p[0] == p[1]) {
        return true;
    }
    !borders(l)
        .into_iter()
        .map(|b| big_n - b)
        .any(|m| (2..big_n).contains(&m))
}

/// `W_m` for the monomial relation `f`, `m ≥ N + 1`: the line through
/// `x_i^m` when `f = x_i^N`, zero otherwise.
pub fn monomial_w_space<F: Field>(f: &Word, n: usize, m: usize) -> Result<Subspace<F>> {
    if m <= f.degree() {
        return Err(Error::precondition(format!(
            "closed form covers m >= N + 1 = {}, got {m}",
            f.degree() + 1
        )));
    }
    match power_letter(f) {
        Some(i) => Subspace::span(n, m, &[Tensor::word(n, &Word::power(i, m))?]),
        None => Ok(Subspace::zero(n, m)),
    }
}

fn power_letter(f: &Word) -> Option<u8> {
    let l = f.letters();
    (!l.is_empty() && l.iter().all(|&x| x == l[0])).then(|| l[0])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialProfile {
    pub koszul: bool,
    pub global_dimension: GlobalDimension,
    /// `D(t)` with `H_A(t) = 1 / D(t)`.
    pub hilbert_denominator: RationalSeries,
    pub gk_dimension: GkDimension,
    pub as_gorenstein: bool,
}

impl MonomialProfile {
    pub fn hilbert_series(&self) -> RationalSeries {
        self.hilbert_denominator
            .reciprocal()
            .expect("denominator numerator has constant term 1")
    }
}

/// Homological profile of the algebra with the single monomial relation `f`.
pub fn monomial_profile(f: &Word, n: usize) -> Result<MonomialProfile> {
    MonomialSet::singleton(n, f)?;
    if !is_koszul_single(f) {
        return Err(Error::precondition(format!("{f} is not a Koszul monomial")));
    }
    let big_n = f.degree();
    Ok(if power_letter(f).is_some() {
        MonomialProfile {
            koszul: true,
            global_dimension: GlobalDimension::Infinite,
            hilbert_denominator: hilbert::infinite_gldim_denominator(n, big_n),
            gk_dimension: if n == 1 {
                GkDimension::Finite(0)
            } else {
                GkDimension::Infinite
            },
            as_gorenstein: false,
        }
    } else {
        MonomialProfile {
            koszul: true,
            global_dimension: GlobalDimension::Two,
            hilbert_denominator: RationalSeries::koszul_family(n, big_n)
                .reciprocal()
                .expect("constant term 1"),
            gk_dimension: if n == 2 && big_n == 2 {
                GkDimension::Finite(2)
            } else {
                GkDimension::Infinite
            },
            as_gorenstein: false,
        }
    })
}

/// Number of degree-`d` words over `n` letters with no factor equal to `f`,
/// by dynamic programming over the pattern automaton.
pub fn avoid_count(f: &Word, n: usize, d: usize) -> Result<u128> {
    Ok(*avoid_counts(f, n, d)?.last().expect("d + 1 entries"))
}

/// [`avoid_count`] for every degree `0..=d`.
pub fn avoid_counts(f: &Word, n: usize, d: usize) -> Result<Vec<u128>> {
    if let Some(l) = f.max_letter().filter(|&l| l as usize >= n) {
        return Err(Error::LetterOutOfRange { index: l as usize, n });
    }
    let pat = f.letters();
    let k = pat.len();
    if k == 0 {
        return Err(Error::precondition("pattern must be nonempty"));
    }
    let pi = prefix_function(pat);
    // delta[s][x]: matched length after reading x in state s (s < k)
    let mut delta = vec![vec![0usize; n]; k];
    #[allow(clippy::needless_range_loop)]
    for s in 0..k {
        for x in 0..n {
            delta[s][x] = if pat[s] as usize == x {
                s + 1
            } else if s == 0 {
                0
            } else {
                delta[pi[s - 1]][x]
            };
        }
    }
    let mut counts = vec![0u128; k];
    counts[0] = 1;
    let mut out = vec![1u128];
    for step in 1..=d {
        let mut next = vec![0u128; k];
        for (s, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for t in &delta[s] {
                if *t < k {
                    next[*t] = next[*t].checked_add(c).ok_or(Error::Resource {
                        cap: "u128 word count",
                        limit: u128::MAX,
                        requested: step as u128,
                    })?;
                }
            }
        }
        counts = next;
        out.push(counts.iter().try_fold(0u128, |a, &b| a.checked_add(b)).ok_or(Error::Resource {
            cap: "u128 word count",
            limit: u128::MAX,
            requested: step as u128,
        })?);
    }
    Ok(out)
}

/// `C(a, b)`, or `None` on overflow.
pub fn binomial(a: u128, b: u128) -> Option<u128> {
    if b > a {
        return Some(0);
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc.checked_mul(a - i)? / (i + 1);
    }
    Some(acc)
}

/// Number of `p`-element sets of degree-`N` words over `n` letters that
/// satisfy the overlap criterion.
///
/// Subsets are streamed in lexicographic order of their word indices. A
/// branch is cut as soon as an overlap requires a middle factor that lies
/// below the next candidate, since that factor can no longer be added.
pub fn koszul_census(n: usize, big_n: usize, p: usize, cap: u128, exec: Exec) -> Result<u128> {
    if n == 0 || big_n < 2 {
        return Err(Error::precondition("census needs n >= 1 and N >= 2"));
    }
    let shape = Shape::new(n, big_n)?;
    let total = shape.total as u128;
    if p as u128 > total {
        return Err(Error::precondition(format!("p = {p} exceeds n^N = {total}")));
    }
    let subsets = binomial(total, p as u128).unwrap_or(u128::MAX);
    if subsets > cap {
        return Err(Error::Resource {
            cap: "census subsets",
            limit: cap,
            requested: subsets,
        });
    }
    if p == 0 {
        return Ok(1);
    }
    let firsts: Vec<u64> = (0..shape.total).collect();
    let counts = exec.map(&firsts, |&w| {
        let mut search = Census {
            shape,
            p,
            chosen: Vec::with_capacity(p),
            member: vec![false; shape.total as usize],
            pending: Vec::new(),
        };
        search.push(w).map_or(0, |mark| {
            let c = search.descend(w + 1);
            search.pop(mark);
            c
        })
    });
    Ok(counts.into_iter().sum())
}

struct Census {
    shape: Shape,
    p: usize,
    chosen: Vec<u64>,
    member: Vec<bool>,
    /// Middle factors the current set still has to contain.
    pending: Vec<u64>,
}

impl Census {
    /// Adds `w`; returns the `pending` length to roll back to, or `None` if
    /// the set can no longer be completed.
    fn push(&mut self, w: u64) -> Option<usize> {
        let mark = self.pending.len();
        self.chosen.push(w);
        self.member[w as usize] = true;
        for m in 2..self.shape.big_n {
            for i in 0..self.chosen.len() {
                let u = self.chosen[i];
                for (a, b) in [(u, w), (w, u)] {
                    if let Some((mid, _)) = self.shape.overlap(a, b, m) {
                        if !self.member[mid as usize] {
                            if mid < w {
                                self.pop(mark);
                                return None;
                            }
                            self.pending.push(mid);
                        }
                    }
                }
            }
        }
        Some(mark)
    }

    fn pop(&mut self, mark: usize) {
        let w = self.chosen.pop().expect("nonempty");
        self.member[w as usize] = false;
        self.pending.truncate(mark);
    }

    /// Completions of the current set using words `>= next`.
    fn descend(&mut self, next: u64) -> u128 {
        if self.pending.iter().any(|&q| q < next && !self.member[q as usize]) {
            return 0;
        }
        if self.chosen.len() == self.p {
            return u128::from(self.pending.iter().all(|&q| self.member[q as usize]));
        }
        let need = (self.p - self.chosen.len()) as u64;
        let mut count = 0;
        let mut w = next;
        while w + need <= self.shape.total {
            if let Some(mark) = self.push(w) {
                count += self.descend(w + 1);
                self.pop(mark);
            }
            w += 1;
        }
        count
    }
}
