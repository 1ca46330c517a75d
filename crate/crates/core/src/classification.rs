//! Closed-form classification of antisymmetric relations and of single
//! quadratic relations, read off the coefficient matrix.
//!
//! Only characteristic zero is supported; prime-field inputs are rejected.

use crate::error::{Error, Result};
use crate::exactlin::{substitute, Echelon, Field, Matrix, Tensor, Word};
use crate::exec::Exec;
use crate::koszul::{self, GlobalDimension};
use crate::presentation::{Presentation, Quotient};

fn require_char_zero<F: Field>() -> Result<()> {
    match F::CHARACTERISTIC {
        0 => Ok(()),
        p => Err(Error::Characteristic(p)),
    }
}

/// `M_{ij}` = coefficient of `x_i x_j` in a quadratic tensor.
pub fn coefficient_matrix<F: Field>(f: &Tensor<F>) -> Result<Matrix<F>> {
    if f.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: f.degree(),
        });
    }
    let n = f.arity();
    let mut m = Matrix::zeros(n, n);
    for (w, c) in f.terms() {
        let l = w.letters();
        m.set(l[0] as usize, l[1] as usize, c.clone());
    }
    Ok(m)
}

/// Inverse of [`coefficient_matrix`].
pub fn tensor_from_matrix<F: Field>(m: &Matrix<F>) -> Result<Tensor<F>> {
    let n = m.nrows();
    let mut terms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            terms.push((Word::new(vec![i as u8, j as u8]), m.get(i, j).clone()));
        }
    }
    Tensor::from_terms(n, 2, terms)
}

/// `f` changes sign under every adjacent transposition of tensor factors.
pub fn is_antisymmetric<F: Field>(f: &Tensor<F>) -> bool {
    let minus = f.neg();
    (0..f.degree().saturating_sub(1)).all(|k| f.swap_positions(k) == minus)
}

/// `Σ_σ sgn(σ) x_{σ(1)} ... x_{σ(m)}` over the given distinct generators.
pub fn antisymmetriser<F: Field>(n: usize, indices: &[usize]) -> Result<Tensor<F>> {
    for (k, &i) in indices.iter().enumerate() {
        if i >= n {
            return Err(Error::LetterOutOfRange { index: i, n });
        }
        if indices[..k].contains(&i) {
            return Err(Error::precondition(format!(
                "repeated index {i}: the antisymmetriser would vanish"
            )));
        }
    }
    let mut terms = Vec::new();
    let mut perm: Vec<usize> = (0..indices.len()).collect();
    permutations(&mut perm, 0, &mut |p| {
        let word = Word::new(p.iter().map(|&k| indices[k] as u8).collect());
        let c = if inversions(p).is_multiple_of(2) { F::one() } else { F::one().neg() };
        terms.push((word, c));
    });
    Tensor::from_terms(n, indices.len(), terms)
}

fn permutations(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, visit);
        p.swap(k, i);
    }
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntisymProfile {
    pub n: usize,
    pub big_n: usize,
    pub is_antisymmetric: bool,
    pub koszul: bool,
    pub global_dimension: GlobalDimension,
    pub as_gorenstein: bool,
    pub calabi_yau: bool,
    /// `(m, (R ⊗ V^{⊗m}) ∩ (V^{⊗m} ⊗ R) = 0)` for `m = 1..N-1`.
    pub overlap_vanishing: Vec<(usize, bool)>,
}

/// Profile of `A = T(V)/(f)` with `f` antisymmetric, `2 ≤ N ≤ n`.
pub fn classify_antisymmetric<F: Field>(p: &Presentation<F>) -> Result<AntisymProfile> {
    require_char_zero::<F>()?;
    let f = p.require_single()?;
    let (n, big_n) = (p.generators(), p.relation_degree());
    if !is_antisymmetric(f) {
        return Err(Error::precondition("relation is not antisymmetric"));
    }
    if big_n > n {
        return Err(Error::precondition(format!("need N <= n, got N = {big_n}, n = {n}")));
    }
    let overlap_vanishing = (1..big_n)
        .map(|m| Ok((m, koszul::overlap_space(p, m)?.is_zero())))
        .collect::<Result<Vec<_>>>()?;
    let koszul = koszul::criterion_check(p)?.is_koszul;
    let as_gorenstein = big_n == 2 && coefficient_matrix(f)?.rank() == n;
    Ok(AntisymProfile {
        n,
        big_n,
        is_antisymmetric: true,
        koszul,
        global_dimension: GlobalDimension::Two,
        as_gorenstein,
        calabi_yau: as_gorenstein,
        overlap_vanishing,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticProfile {
    pub rank: usize,
    pub symmetric: bool,
    pub antisymmetric: bool,
    pub nondegenerate: bool,
    /// Rank one: some basis leaves a single nonzero column.
    pub p1: bool,
    /// Symmetric of rank one: the relation is a square `y^2` in some basis.
    pub p2: bool,
    pub koszul: bool,
    pub global_dimension: GlobalDimension,
    pub as_gorenstein: bool,
    pub calabi_yau: bool,
}

/// Profile from the coefficient matrix alone.
///
/// A quadratic algebra with one relation is Koszul. Its global dimension is
/// infinite exactly for a square, and 2 otherwise. It is AS-Gorenstein when
/// `M` is invertible and the global dimension is finite, and 2-Calabi-Yau
/// when `M` is moreover antisymmetric.
pub fn profile_from_matrix<F: Field>(m: &Matrix<F>) -> Result<QuadraticProfile> {
    require_char_zero::<F>()?;
    if m.is_zero() {
        return Err(Error::ZeroRelation);
    }
    let rank = m.rank();
    let symmetric = m.is_symmetric();
    let antisymmetric = m.is_antisymmetric();
    let nondegenerate = rank == m.nrows();
    let p1 = rank == 1;
    let p2 = p1 && symmetric;
    Ok(QuadraticProfile {
        rank,
        symmetric,
        antisymmetric,
        nondegenerate,
        p1,
        p2,
        koszul: true,
        global_dimension: if p2 {
            GlobalDimension::Infinite
        } else {
            GlobalDimension::Two
        },
        as_gorenstein: nondegenerate && !p2,
        calabi_yau: antisymmetric && nondegenerate,
    })
}

pub fn classify_quadratic<F: Field>(p: &Presentation<F>) -> Result<QuadraticProfile> {
    require_char_zero::<F>()?;
    if p.relation_degree() != 2 {
        return Err(Error::precondition(format!(
            "quadratic classification needs N = 2, got N = {}",
            p.relation_degree()
        )));
    }
    profile_from_matrix(&coefficient_matrix(p.require_single()?)?)
}

/// `Pᵀ M P`, the coefficient matrix after the substitution `x = P y`.
pub fn congruent<F: Field>(m: &Matrix<F>, p: &Matrix<F>) -> Result<Matrix<F>> {
    p.transpose().mul(m)?.mul(p)
}

/// A basis `y = T x` in which a rank-one quadratic relation only involves
/// words ending in `y_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedBasis<F: Field> {
    /// `T`, rows are the new generators in terms of the old.
    pub change: Matrix<F>,
    /// `T^{-1}`: `x_i = Σ_j sub[i][j] y_j`.
    pub substitution: Matrix<F>,
    /// The relation rewritten in the `y` variables.
    pub relation: Tensor<F>,
}

/// For `f = ℓ_a ℓ_b` of rank one, takes `y_0 = ℓ_b` and completes it with
/// standard basis vectors.
pub fn rank_one_adapted_basis<F: Field>(f: &Tensor<F>) -> Result<AdaptedBasis<F>> {
    require_char_zero::<F>()?;
    let m = coefficient_matrix(f)?;
    if m.rank() != 1 {
        return Err(Error::precondition("adapted basis needs a rank-one relation"));
    }
    let n = m.nrows();
    let b: Vec<F> = (0..n)
        .map(|i| m.row(i).to_vec())
        .find(|r| r.iter().any(|c| !c.is_zero()))
        .expect("rank one");
    let pivot = b.iter().position(|c| !c.is_zero()).expect("nonzero row");
    let mut rows = vec![b];
    for k in (0..n).filter(|&k| k != pivot) {
        let mut e = vec![F::zero(); n];
        e[k] = F::one();
        rows.push(e);
    }
    let change = Matrix::from_rows(rows)?;
    let substitution = change.inverse().expect("pivot column makes T invertible");
    let relation = substitute(f, &substitution)?;
    Ok(AdaptedBasis {
        change,
        substitution,
        relation,
    })
}

/// Checks that `a ↦ a·v` and `a ↦ v·a` are injective `A_d → A_{d+1}` for
/// every `d ≤ d_max`, in quotient coordinates.
pub fn zerodivisor_probe<F: Field>(p: &Presentation<F>, v: &Tensor<F>, d_max: usize, exec: Exec) -> Result<bool> {
    require_char_zero::<F>()?;
    let f = p.require_single()?;
    if p.relation_degree() != 2 || coefficient_matrix(f)?.rank() < 2 {
        return Err(Error::precondition("probe needs a quadratic relation of rank > 1"));
    }
    if v.degree() != 1 || v.is_zero() || v.arity() != p.generators() {
        return Err(Error::precondition("v must be a nonzero element of V"));
    }
    let quotient = Quotient::new(p, d_max + 1)?;
    let n = p.generators() as u64;
    let degrees: Vec<usize> = (0..=d_max).collect();
    let ok = exec.map(&degrees, |&d| {
        let basis = quotient.standard_words(d);
        let shift = n.pow(d as u32);
        [false, true].iter().all(|&left| {
            let mut image = Echelon::new();
            for &a in &basis {
                let mut prod: Vec<(u64, F)> = v
                    .raw()
                    .iter()
                    .map(|(x, c)| (if left { x * shift + a } else { a * n + x }, c.clone()))
                    .collect();
                prod.sort_by_key(|x| std::cmp::Reverse(x.0));
                let r = quotient.reduce(d + 1, &prod);
                if r.is_empty() || !image.insert(&r) {
                    return false;
                }
            }
            true
        })
    });
    Ok(ok.into_iter().all(|b| b))
}
