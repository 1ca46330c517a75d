//! Koszulity of algebras with a one-dimensional relation space.
//!
//! With `dim R = 1` the algebra is distributive, so Koszulity reduces to the
//! overlap condition `(R ⊗ V^{⊗m}) ∩ (V^{⊗m} ⊗ R) ⊆ V^{⊗(m-1)} ⊗ R ⊗ V` for
//! `2 ≤ m ≤ N - 1`. [`homology_oracle`] checks the same thing the slow way,
//! by computing the homology of the Koszul complex `K_i = A ⊗ W_{ν(i)}` slice
//! by slice.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::exactlin::{Echelon, Field, Subspace, Tensor, Word};
use crate::exec::Exec;
use crate::presentation::{Presentation, Quotient};

/// Default number of homological steps probed by [`global_dimension`].
pub const DEFAULT_PROBE_LIMIT: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulVerdict<F: Field> {
    pub is_koszul: bool,
    /// Least `m` at which the condition fails.
    pub failing_m: Option<usize>,
    /// An element of `(R ⊗ V^{⊗m}) ∩ (V^{⊗m} ⊗ R)` violating the condition.
    pub witness: Option<Tensor<F>>,
}

impl<F: Field> KoszulVerdict<F> {
    fn koszul() -> Self {
        KoszulVerdict {
            is_koszul: true,
            failing_m: None,
            witness: None,
        }
    }
}

/// `(R ⊗ V^{⊗m}) ∩ (V^{⊗m} ⊗ R)`.
pub fn overlap_space<F: Field>(p: &Presentation<F>, m: usize) -> Result<Subspace<F>> {
    p.check_degree(p.relation_degree() + m)?;
    let r = p.relation_space();
    r.extend(0, m)?.intersect_extension(r, m, 0)
}

/// Inclusion form: the overlap space must sit inside `V^{⊗(m-1)} ⊗ R ⊗ V`.
pub fn criterion_check<F: Field>(p: &Presentation<F>) -> Result<KoszulVerdict<F>> {
    p.require_single()?;
    let r = p.relation_space();
    for m in 2..p.relation_degree() {
        let inter = overlap_space(p, m)?;
        for v in inter.basis() {
            if !r.extension_contains(m - 1, 1, v)? {
                return Ok(KoszulVerdict {
                    is_koszul: false,
                    failing_m: Some(m),
                    witness: Some(v.clone()),
                });
            }
        }
    }
    Ok(KoszulVerdict::koszul())
}

/// Equality form: the overlap space must equal `W_{N+m}`.
pub fn criterion_check_equalform<F: Field>(p: &Presentation<F>) -> Result<KoszulVerdict<F>> {
    p.require_single()?;
    let big_n = p.relation_degree();
    if big_n <= 2 {
        return Ok(KoszulVerdict::koszul());
    }
    let ws = p.w_spaces(2 * big_n - 1)?;
    for m in 2..big_n {
        let inter = overlap_space(p, m)?;
        let w = &ws[big_n + m];
        if inter != *w {
            // W_{N+m} always lies inside the overlap space, so some basis
            // vector of the latter escapes it
            let witness = inter
                .basis()
                .iter()
                .find(|v| !w.contains_vector(v).unwrap_or(false))
                .cloned();
            return Ok(KoszulVerdict {
                is_koszul: false,
                failing_m: Some(m),
                witness,
            });
        }
    }
    Ok(KoszulVerdict::koszul())
}

/// Re-checks a non-Koszul witness: it must lie in both `R ⊗ V^{⊗m}` and
/// `V^{⊗m} ⊗ R` but not in `V^{⊗(m-1)} ⊗ R ⊗ V`.
pub fn verify_witness<F: Field>(p: &Presentation<F>, m: usize, w: &Tensor<F>) -> Result<bool> {
    let r = p.relation_space();
    Ok(!w.is_zero()
        && r.extension_contains(0, m, w)?
        && r.extension_contains(m, 0, w)?
        && !r.extension_contains(m - 1, 1, w)?)
}

/// Dimensions of `H_i(K(A))_d`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyReport {
    pub entries: BTreeMap<(usize, usize), u64>,
}

impl HomologyReport {
    pub fn get(&self, i: usize, d: usize) -> u64 {
        self.entries.get(&(i, d)).copied().unwrap_or(0)
    }

    /// Nonzero entries with homological index at least `min_i`.
    pub fn nonzero_from(&self, min_i: usize) -> Vec<((usize, usize), u64)> {
        self.entries
            .iter()
            .filter(|((i, _), v)| *i >= min_i && **v > 0)
            .map(|(k, v)| (*k, *v))
            .collect()
    }

    /// `H_0 = k` concentrated in degree 0 and `H_i = 0` for `i ≥ 1`.
    pub fn is_exact_in_window(&self) -> bool {
        self.entries.iter().all(|(&(i, d), &v)| match (i, d) {
            (0, 0) => v == 1,
            _ => v == 0,
        })
    }
}

/// Homology of the Koszul complex for `i ≤ max_i` and internal degree `≤ max_degree`.
///
/// Each slice `A_{d-ν(i)} ⊗ W_{ν(i)} → A_{d-ν(i-1)} ⊗ W_{ν(i-1)}` is handled
/// in quotient coordinates: a standard word `p` times a basis tensor `w` of
/// `W_{ν(i)}` maps to the normal form of `p` times the first `ν(i) - ν(i-1)`
/// letters of `w`, tensored with the rest.
pub fn homology_oracle<F: Field>(
    p: &Presentation<F>,
    max_i: usize,
    max_degree: usize,
    exec: Exec,
) -> Result<HomologyReport> {
    let quotient = Quotient::new(p, max_degree)?;
    let ws = p.w_spaces(max_degree)?;
    let nu = p.nu();

    let rank_of = |i: usize, d: usize| -> u64 {
        if i == 0 || nu.eval(i) > d {
            return 0;
        }
        differential_rank(&quotient, &ws, nu.eval(i), nu.eval(i - 1), d)
    };

    let degrees: Vec<usize> = (0..=max_degree).collect();
    let slices = exec.map(&degrees, |&d| {
        let ranks: Vec<u64> = (0..=max_i + 1).map(|i| rank_of(i, d)).collect();
        (0..=max_i)
            .map(|i| {
                let a = nu.eval(i);
                let dim_k = if a > d {
                    0
                } else {
                    quotient.dim(d - a) * ws[a].dim() as u64
                };
                ((i, d), dim_k - ranks[i] - ranks[i + 1])
            })
            .collect::<Vec<_>>()
    });
    Ok(HomologyReport {
        entries: slices.into_iter().flatten().collect(),
    })
}

fn differential_rank<F: Field>(
    quotient: &Quotient<F>,
    ws: &[Subspace<F>],
    a: usize,
    b: usize,
    d: usize,
) -> u64 {
    let n = quotient.n as u64;
    let k = a - b;
    let e = d - a;
    let tail = n.pow(b as u32);
    let mut nf_cache: HashMap<u64, Vec<(u64, F)>> = HashMap::new();
    let mut image = Echelon::new();
    for p in quotient.standard_words(e) {
        for w in ws[a].basis() {
            let mut acc: BTreeMap<u64, F> = BTreeMap::new();
            for (prefix, part) in w.split_prefix(k) {
                let head = p * n.pow(k as u32) + prefix;
                let nf = nf_cache
                    .entry(head)
                    .or_insert_with(|| quotient.reduce(e + k, &[(head, F::one())]));
                for (s, c) in nf.iter() {
                    for (t, c2) in part.raw() {
                        let slot = acc.entry(s * tail + t).or_insert_with(F::zero);
                        *slot = slot.add(&c.mul(c2));
                    }
                }
            }
            let v: Vec<(u64, F)> = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
            if !v.is_empty() {
                image.insert(&v);
            }
        }
    }
    image.rank() as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlobalDimension {
    Two,
    Infinite,
    /// At least this value; the probe found `W_{ν(i)} ≠ 0` up to here.
    AtLeast(usize),
}

/// Global dimension of a Koszul algebra with one relation, read off the
/// Koszul resolution.
pub fn global_dimension<F: Field>(p: &Presentation<F>, probe_limit: usize) -> Result<GlobalDimension> {
    let f = p.require_single()?.clone();
    if !criterion_check(p)?.is_koszul {
        return Err(Error::precondition(
            "global dimension via W-spaces needs a Koszul algebra",
        ));
    }
    let big_n = p.relation_degree();
    let ws = p.w_spaces(big_n + 1)?;
    if ws[big_n + 1].is_zero() {
        return Ok(GlobalDimension::Two);
    }
    if is_pure_power(&f) || (big_n == 2 && is_symmetric_rank_one(&f)) {
        return Ok(GlobalDimension::Infinite);
    }
    let nu = p.nu();
    let top = nu.eval(probe_limit).min(p.degree_cap());
    let ws = p.w_spaces(top)?;
    let best = (0..=probe_limit)
        .filter(|&i| nu.eval(i) <= top && !ws[nu.eval(i)].is_zero())
        .max()
        .unwrap_or(0);
    Ok(GlobalDimension::AtLeast(best))
}

/// `f = c · x_i^N` for a single letter `i`.
pub fn is_pure_power<F: Field>(f: &Tensor<F>) -> bool {
    f.len() == 1
        && f
            .leading()
            .map(|(w, _)| w.letters().windows(2).all(|p| p[0] == p[1]))
            .unwrap_or(false)
}

fn is_symmetric_rank_one<F: Field>(f: &Tensor<F>) -> bool {
    crate::classification::coefficient_matrix(f)
        .map(|m| m.is_symmetric() && m.rank() == 1)
        .unwrap_or(false)
}

/// The literal power `x_i^N` as a word, if `f` is a multiple of one.
pub fn power_letter<F: Field>(f: &Tensor<F>) -> Option<u8> {
    is_pure_power(f).then(|| f.leading().expect("nonzero").0.letters()[0])
}

/// Convenience for tests and callers: `x_i^len` as a word.
pub fn power_word(letter: u8, len: usize) -> Word {
    Word::power(letter, len)
}
