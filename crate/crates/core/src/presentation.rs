//! Presentations `A(V, R)`, the spaces `W_m`, and graded dimensions of `A`.

use crate::error::{Error, Result};
use crate::exactlin::{ambient_dim, Echelon, Field, Subspace, Tensor, Word, Q};

/// Default bound on the tensor degree any computation may reach.
pub const DEFAULT_DEGREE_CAP: usize = 12;

/// The jump map `ν_N(2i) = N i`, `ν_N(2i + 1) = N i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Nu {
    pub relation_degree: usize,
}

impl Nu {
    pub fn new(relation_degree: usize) -> Self {
        Nu { relation_degree }
    }

    pub fn eval(self, i: usize) -> usize {
        self.relation_degree * (i / 2) + i % 2
    }

    /// Largest homological index `i` with `ν(i) ≤ degree`.
    pub fn max_index_within(self, degree: usize) -> usize {
        let mut i = 0;
        while self.eval(i + 1) <= degree {
            i += 1;
        }
        i
    }
}

/// `A = T(V)/(R)` with `dim V = n` and `R ⊆ V^{⊗N}` spanned by `relations`.
#[derive(Clone)]
pub struct Presentation<F = Q> {
    n: usize,
    degree: usize,
    relations: Vec<Tensor<F>>,
    relation_space: Subspace<F>,
    degree_cap: usize,
}

impl<F: Field> PartialEq for Presentation<F> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.degree == other.degree && self.relations == other.relations
    }
}

impl<F: Field> Eq for Presentation<F> {}

impl<F: Field> std::fmt::Debug for Presentation<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Presentation")
            .field("n", &self.n)
            .field("N", &self.degree)
            .field("relations", &self.relations)
            .finish()
    }
}

/// Dimensions `a_0, a_1, ...` of the graded pieces of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims(pub Vec<u64>);

impl<F: Field> Presentation<F> {
    /// `n` may be 0 only for the empty presentation used as the neutral
    /// element of free products.
    pub fn new(n: usize, degree: usize, relations: Vec<Tensor<F>>) -> Result<Self> {
        if degree < 2 {
            return Err(Error::InvalidPresentation(format!(
                "relation degree N = {degree} must be at least 2"
            )));
        }
        if n == 0 && !relations.is_empty() {
            return Err(Error::InvalidPresentation(
                "a presentation without generators cannot have relations".into(),
            ));
        }
        for r in &relations {
            if r.arity() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: r.arity(),
                });
            }
            if r.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: r.degree(),
                });
            }
            if r.is_zero() {
                return Err(Error::ZeroRelation);
            }
        }
        let relation_space = Subspace::span(n, degree, &relations)?;
        Ok(Presentation {
            n,
            degree,
            relations,
            relation_space,
            degree_cap: DEFAULT_DEGREE_CAP,
        })
    }

    /// One relation `f`.
    pub fn single(n: usize, f: Tensor<F>) -> Result<Self> {
        let d = f.degree();
        Presentation::new(n, d, vec![f])
    }

    /// Relations given by monomials.
    pub fn monomial(n: usize, degree: usize, words: &[Word]) -> Result<Self> {
        let rels = words
            .iter()
            .map(|w| Tensor::word(n, w))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(n, degree, rels)
    }

    pub fn with_degree_cap(mut self, cap: usize) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    /// The relation degree `N`.
    pub fn relation_degree(&self) -> usize {
        self.degree
    }

    pub fn relations(&self) -> &[Tensor<F>] {
        &self.relations
    }

    pub fn relation_space(&self) -> &Subspace<F> {
        &self.relation_space
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn nu(&self) -> Nu {
        Nu::new(self.degree)
    }

    /// The relation when `dim R = 1`; the first listed relation spans `R`.
    pub fn single_relation(&self) -> Option<&Tensor<F>> {
        (self.relation_space.dim() == 1).then(|| &self.relations[0])
    }

    pub(crate) fn require_single(&self) -> Result<&Tensor<F>> {
        self.single_relation().ok_or_else(|| {
            Error::precondition(format!(
                "expected a one-dimensional relation space, found dim R = {}",
                self.relation_space.dim()
            ))
        })
    }

    /// If every relation is a single word, those words.
    pub fn monomial_words(&self) -> Option<Vec<Word>> {
        self.relations
            .iter()
            .map(|r| (r.len() == 1).then(|| r.leading().expect("nonzero").0))
            .collect()
    }

    pub(crate) fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.degree_cap {
            return Err(Error::Resource {
                cap: "max-degree",
                limit: self.degree_cap as u128,
                requested: d as u128,
            });
        }
        ambient_dim(self.n, d)?;
        Ok(())
    }

    /// `W_0, ..., W_{max_m}`, built as `W_m = (W_{m-1} ⊗ V) ∩ (V^{⊗(m-N)} ⊗ R)`.
    pub fn w_spaces(&self, max_m: usize) -> Result<Vec<Subspace<F>>> {
        self.check_degree(max_m)?;
        let n_deg = self.degree;
        let mut out: Vec<Subspace<F>> = Vec::with_capacity(max_m + 1);
        for m in 0..=max_m {
            let w = if m < n_deg {
                Subspace::full(self.n, m)?
            } else if m == n_deg {
                self.relation_space.clone()
            } else {
                let prev = &out[m - 1];
                if prev.is_zero() {
                    Subspace::zero(self.n, m)
                } else {
                    prev.extend(0, 1)?
                        .intersect_extension(&self.relation_space, m - n_deg, 0)?
                }
            };
            out.push(w);
        }
        Ok(out)
    }

    /// `W_m = ⋂_{i+N+j=m} V^{⊗i} ⊗ R ⊗ V^{⊗j}`.
    pub fn w_space(&self, m: usize) -> Result<Subspace<F>> {
        Ok(self.w_spaces(m)?.pop().expect("nonempty"))
    }

    /// The degree-`d` component `I_d = Σ V^{⊗i} ⊗ R ⊗ V^{⊗j}` of the ideal.
    pub fn ideal_component(&self, d: usize) -> Result<Subspace<F>> {
        let q = Quotient::new(self, d)?;
        Ok(Subspace::from_echelon(self.n, d, q.ideal[d].clone()))
    }

    /// `dim A_d = n^d - dim I_d`, by exact quotient linear algebra.
    pub fn graded_dim(&self, d: usize) -> Result<u64> {
        Ok(Quotient::new(self, d)?.dim(d))
    }

    pub fn graded_dims(&self, max_d: usize) -> Result<GradedDims> {
        let q = Quotient::new(self, max_d)?;
        Ok(GradedDims((0..=max_d).map(|d| q.dim(d)).collect()))
    }
}

/// Free product: generators of `p` then those of `q`, relations of both.
pub fn free_product<F: Field>(p: &Presentation<F>, q: &Presentation<F>) -> Result<Presentation<F>> {
    if p.degree != q.degree {
        return Err(Error::precondition(format!(
            "free product needs equal relation degrees, got {} and {}",
            p.degree, q.degree
        )));
    }
    let n = p.n + q.n;
    let mut rels = Vec::with_capacity(p.relations.len() + q.relations.len());
    for r in &p.relations {
        rels.push(r.relabel(0, n)?);
    }
    for r in &q.relations {
        rels.push(r.relabel(p.n, n)?);
    }
    Ok(Presentation::new(n, p.degree, rels)?.with_degree_cap(p.degree_cap.max(q.degree_cap)))
}

/// Graded pieces of `A` up to a fixed degree, as quotients of tensor powers.
///
/// `I_d` is kept in echelon form; its non-pivot words index a basis of
/// `A_d` and reduction modulo `I_d` gives coordinates in that basis. This is
/// independent of any rewriting system, so it is correct whether or not the
/// relation is confluent for some order.
#[derive(Clone)]
pub(crate) struct Quotient<F> {
    pub n: usize,
    pub ideal: Vec<Echelon<F>>,
}

impl<F: Field> Quotient<F> {
    pub fn new(p: &Presentation<F>, max_d: usize) -> Result<Self> {
        p.check_degree(max_d)?;
        let n = p.n;
        let big_n = p.degree;
        let mut ideal: Vec<Echelon<F>> = Vec::with_capacity(max_d + 1);
        for d in 0..=max_d {
            let mut e = Echelon::new();
            if d >= big_n {
                if d > big_n {
                    // I_{d-1} ⊗ V keeps distinct leading words
                    for row in ideal[d - 1].rows() {
                        for x in 0..n as u64 {
                            e.push_unchecked(
                                row.iter().map(|(w, c)| (w * n as u64 + x, c.clone())).collect(),
                            );
                        }
                    }
                }
                let shift = ambient_dim(n, big_n)?;
                let prefixes = ambient_dim(n, d - big_n)?;
                for u in 0..prefixes {
                    for r in p.relation_space.basis() {
                        let v: Vec<(u64, F)> =
                            r.raw().iter().map(|(w, c)| (u * shift + w, c.clone())).collect();
                        e.insert(&v);
                    }
                }
            }
            ideal.push(e);
        }
        Ok(Quotient { n, ideal })
    }

    pub fn dim(&self, d: usize) -> u64 {
        (self.n as u64).pow(d as u32) - self.ideal[d].rank() as u64
    }

    /// Words of degree `d` that are not leading words of `I_d`.
    pub fn standard_words(&self, d: usize) -> Vec<u64> {
        let total = (self.n as u64).pow(d as u32);
        (0..total).filter(|w| !self.ideal[d].is_pivot(*w)).collect()
    }

    /// Normal form of a degree-`d` vector modulo `I_d`.
    pub fn reduce(&self, d: usize, v: &[(u64, F)]) -> Vec<(u64, F)> {
        self.ideal[d].reduce(v)
    }
}
