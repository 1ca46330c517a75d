use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::echelon::{Echelon, Reduced, Row};
use super::field::Field;
use super::tensor::Tensor;
use super::word::{ambient_dim, Word};
use crate::error::{Error, Result};

/// A linear subspace of `V^{⊗degree}` in canonical form.
///
/// The basis is the reduced row-echelon form with respect to the
/// lexicographic word order: each row's pivot is its largest word, pivots
/// have coefficient 1, no pivot word appears in another row, and rows are
/// listed by decreasing pivot. Equal subspaces therefore compare equal
/// structurally, which is what lets the lattice code deduplicate by hashing.
#[derive(Clone)]
pub struct Subspace<F> {
    arity: usize,
    degree: usize,
    rows: Vec<Tensor<F>>,
    pivots: HashMap<u64, usize>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.degree == other.degree && self.rows == other.rows
    }
}

impl<F: Field> Eq for Subspace<F> {}

impl<F: Field> Hash for Subspace<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.arity.hash(state);
        self.degree.hash(state);
        self.rows.hash(state);
    }
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(n={}, m={}, dim={})[", self.arity, self.degree, self.dim())?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Subspace<F> {
    fn from_sorted_rows(arity: usize, degree: usize, rows: Vec<Row<F>>) -> Self {
        let rows: Vec<Tensor<F>> = rows
            .into_iter()
            .map(|r| Tensor::from_sorted(arity, degree, r))
            .collect();
        let pivots = rows
            .iter()
            .enumerate()
            .map(|(i, r)| (r.leading_index().expect("nonzero row"), i))
            .collect();
        Subspace {
            arity,
            degree,
            rows,
            pivots,
        }
    }

    pub(crate) fn from_echelon(arity: usize, degree: usize, e: Echelon<F>) -> Self {
        Subspace::from_sorted_rows(arity, degree, e.into_reduced())
    }

    pub fn zero(arity: usize, degree: usize) -> Self {
        Subspace::from_sorted_rows(arity, degree, Vec::new())
    }

    /// The whole of `V^{⊗degree}`.
    pub fn full(arity: usize, degree: usize) -> Result<Self> {
        let total = ambient_dim(arity, degree)?;
        let rows = (0..total).rev().map(|i| vec![(i, F::one())]).collect();
        Ok(Subspace::from_sorted_rows(arity, degree, rows))
    }

    /// Canonical basis of the linear span of `vectors`, all of degree `degree`.
    pub fn span(arity: usize, degree: usize, vectors: &[Tensor<F>]) -> Result<Self> {
        ambient_dim(arity, degree)?;
        let mut red = Reduced::new();
        for v in vectors {
            if v.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: v.degree(),
                });
            }
            if v.arity() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: v.arity(),
                });
            }
            red.insert(v.raw());
        }
        Ok(Subspace::from_sorted_rows(arity, degree, red.into_sorted_rows()))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn ambient_dim(&self) -> u64 {
        (self.arity as u64).pow(self.degree as u32)
    }

    pub fn is_full(&self) -> bool {
        self.dim() as u64 == self.ambient_dim()
    }

    /// Basis rows, by decreasing pivot word.
    pub fn basis(&self) -> &[Tensor<F>] {
        &self.rows
    }

    pub fn pivot_words(&self) -> impl Iterator<Item = Word> + '_ {
        self.rows.iter().map(|r| r.leading().expect("nonzero row").0)
    }

    fn check(&self, other: &Self) -> Result<()> {
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

    fn reduced(&self) -> Reduced<F> {
        Reduced {
            rows: self.rows.iter().map(|r| r.raw().to_vec()).collect(),
            pivots: self.pivots.clone(),
        }
    }

    fn reduce_raw(&self, v: &[(u64, F)]) -> Row<F> {
        if !v.iter().any(|(w, _)| self.pivots.contains_key(w)) {
            return v.to_vec();
        }
        let mut acc: std::collections::BTreeMap<u64, F> = v.iter().cloned().collect();
        for (w, c) in v {
            if let Some(&r) = self.pivots.get(w) {
                for (x, a) in self.rows[r].raw() {
                    let e = acc.entry(*x).or_insert_with(F::zero);
                    e.sub_mul_assign(c, a);
                    if e.is_zero() {
                        acc.remove(x);
                    }
                }
            }
        }
        acc.into_iter().rev().collect()
    }

    /// Remainder of `v` modulo this subspace, supported on non-pivot words.
    pub fn reduce(&self, v: &Tensor<F>) -> Result<Tensor<F>> {
        if v.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: v.degree(),
            });
        }
        Ok(Tensor::from_sorted(self.arity, self.degree, self.reduce_raw(v.raw())))
    }

    pub fn contains_vector(&self, v: &Tensor<F>) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// `other ⊆ self`
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        if other.dim() > self.dim() {
            return Ok(false);
        }
        Ok(other.rows.iter().all(|r| self.reduce_raw(r.raw()).is_empty()))
    }

    /// Lattice supremum `self + other`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (big, small) = if self.dim() >= other.dim() {
            (self, other)
        } else {
            (other, self)
        };
        if small.is_zero() {
            return Ok(big.clone());
        }
        let mut red = big.reduced();
        let mut grew = false;
        for r in &small.rows {
            grew |= red.insert(r.raw());
        }
        if !grew {
            return Ok(big.clone());
        }
        Ok(Subspace::from_sorted_rows(self.arity, self.degree, red.into_sorted_rows()))
    }

    /// Lattice infimum `self ∩ other`.
    ///
    /// Reduces the smaller basis modulo the larger subspace and reads the
    /// intersection off the kernel of the residue map.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (big, small) = if self.dim() >= other.dim() {
            (self, other)
        } else {
            (other, self)
        };
        if small.is_zero() || big.is_full() {
            return Ok(small.clone());
        }
        Ok(small.kernel_of_residues(|v| big.reduce_raw(v)))
    }

    /// `self ∩ (V^{⊗left} ⊗ core ⊗ V^{⊗right})`, without materialising the
    /// extended subspace.
    pub fn intersect_extension(&self, core: &Self, left: usize, right: usize) -> Result<Self> {
        self.check_extension(core, left, right)?;
        if self.is_zero() {
            return Ok(self.clone());
        }
        Ok(self.kernel_of_residues(|v| core.reduce_extension_raw(right, v)))
    }

    /// Is `v` in `V^{⊗left} ⊗ self ⊗ V^{⊗right}`?
    pub fn extension_contains(&self, left: usize, right: usize, v: &Tensor<F>) -> Result<bool> {
        if v.degree() != self.degree + left + right {
            return Err(Error::DegreeMismatch {
                expected: self.degree + left + right,
                found: v.degree(),
            });
        }
        Ok(self.reduce_extension_raw(right, v.raw()).is_empty())
    }

    fn check_extension(&self, core: &Self, left: usize, right: usize) -> Result<()> {
        if self.arity != core.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: core.arity,
            });
        }
        if self.degree != core.degree + left + right {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: core.degree + left + right,
            });
        }
        Ok(())
    }

    /// Reduction modulo `V^{⊗*} ⊗ self ⊗ V^{⊗right}`: the extended basis is
    /// reduced and block diagonal, so each `(u, v)` block reduces on its own.
    fn reduce_extension_raw(&self, right: usize, v: &[(u64, F)]) -> Row<F> {
        let mid = self.ambient_dim();
        let nr = (self.arity as u64).pow(right as u32);
        let mut blocks: std::collections::BTreeMap<(u64, u64), Vec<(u64, F)>> =
            std::collections::BTreeMap::new();
        for (i, c) in v {
            let vv = i % nr;
            let rest = i / nr;
            blocks
                .entry((rest / mid, vv))
                .or_default()
                .push((rest % mid, c.clone()));
        }
        let mut out = Vec::new();
        for ((u, vv), mut terms) in blocks {
            terms.sort_by_key(|a| std::cmp::Reverse(a.0));
            for (w, c) in self.reduce_raw(&terms) {
                out.push(((u * mid + w) * nr + vv, c));
            }
        }
        out.sort_by_key(|a| std::cmp::Reverse(a.0));
        out
    }

    /// Span of the combinations of this basis whose residues cancel.
    fn kernel_of_residues<R>(&self, residue: R) -> Self
    where
        R: Fn(&[(u64, F)]) -> Row<F>,
    {
        let k = self.dim();
        // echelon on residues, each row tracking its combination of the basis
        let mut pivots: HashMap<u64, usize> = HashMap::new();
        let mut stored: Vec<(Row<F>, Vec<F>)> = Vec::new();
        let mut kernel: Vec<Vec<F>> = Vec::new();
        for (i, s) in self.rows.iter().enumerate() {
            let mut res: std::collections::BTreeMap<u64, F> = residue(s.raw()).into_iter().collect();
            let mut combo = vec![F::zero(); k];
            combo[i] = F::one();
            loop {
                let hit = res
                    .iter()
                    .rev()
                    .find(|(w, _)| pivots.contains_key(w))
                    .map(|(w, c)| (*w, c.clone()));
                let Some((w, c)) = hit else { break };
                let (row, rc) = &stored[pivots[&w]];
                for (x, a) in row {
                    let e = res.entry(*x).or_insert_with(F::zero);
                    e.sub_mul_assign(&c, a);
                    if e.is_zero() {
                        res.remove(x);
                    }
                }
                for (slot, a) in combo.iter_mut().zip(rc) {
                    if !a.is_zero() {
                        slot.sub_mul_assign(&c, a);
                    }
                }
            }
            if res.is_empty() {
                kernel.push(combo);
            } else {
                let row: Row<F> = res.into_iter().rev().collect();
                let inv = row[0].1.inv().expect("nonzero");
                let row: Row<F> = row.into_iter().map(|(w, c)| (w, c.mul(&inv))).collect();
                let combo = combo.into_iter().map(|c| c.mul(&inv)).collect();
                pivots.insert(row[0].0, stored.len());
                stored.push((row, combo));
            }
        }
        let vectors: Vec<Tensor<F>> = kernel
            .into_iter()
            .map(|combo| {
                let mut acc = Tensor::zero(self.arity, self.degree);
                for (c, s) in combo.iter().zip(&self.rows) {
                    if !c.is_zero() {
                        acc = acc.axpy_unchecked(c, s);
                    }
                }
                acc
            })
            .collect();
        Subspace::span(self.arity, self.degree, &vectors).expect("same degree")
    }

    /// `V^{⊗left} ⊗ self ⊗ V^{⊗right}`.
    ///
    /// Wrapping every basis row with every pair of words keeps the basis
    /// reduced, so no elimination is needed.
    pub fn extend(&self, left: usize, right: usize) -> Result<Self> {
        let degree = self.degree + left + right;
        ambient_dim(self.arity, degree)?;
        let nl = ambient_dim(self.arity, left)?;
        let nr = ambient_dim(self.arity, right)?;
        let mid = self.ambient_dim();
        let mut rows = Vec::with_capacity((nl * nr) as usize * self.dim());
        for u in (0..nl).rev() {
            for r in &self.rows {
                for v in (0..nr).rev() {
                    rows.push(
                        r.raw()
                            .iter()
                            .map(|(w, c)| ((u * mid + w) * nr + v, c.clone()))
                            .collect(),
                    );
                }
            }
        }
        Ok(Subspace::from_sorted_rows(self.arity, degree, rows))
    }
}
