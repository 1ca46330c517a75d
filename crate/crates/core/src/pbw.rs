//! PBW deformations `U = T(V) / (f - φ_{N-1}(f) - ... - φ_0(f))` of an
//! N-Koszul algebra with one relation `f`.
//!
//! Every element `w` of `W_{N+1} = (R ⊗ V) ∩ (V ⊗ R)` is written both as
//! `Σ c_k f ⊗ x_k` and as `Σ d_k x_k ⊗ f`. With
//! `D_j(w) = Σ c_k φ_j(f) ⊗ x_k - Σ d_k x_k ⊗ φ_j(f)` the conditions read:
//!
//! * J1: `D_{N-1}(w) = μ f` for a scalar `μ`;
//! * J2(j), `1 ≤ j ≤ N-1`: `μ φ_j(f) + D_{j-1}(w) = 0`;
//! * J3: `μ φ_0(f) = 0`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Tensor, Word};
use crate::koszul;
use crate::presentation::Presentation;
use crate::rewriting::{self, RewriteRule, WordOrder};

/// Images `φ_j(f)` of the relation, `j = 0..N-1`; `φ_0(f)` is a scalar
/// stored as a degree-0 tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMap<F: Field> {
    components: Vec<Tensor<F>>,
}

impl<F: Field> PhiMap<F> {
    pub fn new(n: usize, big_n: usize, components: Vec<Tensor<F>>) -> Result<Self> {
        if components.len() != big_n {
            return Err(Error::precondition(format!(
                "expected {big_n} components phi_0..phi_{}, got {}",
                big_n - 1,
                components.len()
            )));
        }
        for (j, c) in components.iter().enumerate() {
            if c.degree() != j {
                return Err(Error::DegreeMismatch {
                    expected: j,
                    found: c.degree(),
                });
            }
            if c.arity() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: c.arity(),
                });
            }
        }
        Ok(PhiMap { components })
    }

    pub fn zero(n: usize, big_n: usize) -> Self {
        PhiMap {
            components: (0..big_n).map(|j| Tensor::zero(n, j)).collect(),
        }
    }

    /// Sets `φ_j(f)`.
    pub fn with(mut self, t: Tensor<F>) -> Result<Self> {
        let j = t.degree();
        let slot = self
            .components
            .get_mut(j)
            .ok_or_else(|| Error::precondition(format!("no component of degree {j}")))?;
        if t.arity() != slot.arity() {
            return Err(Error::ArityMismatch {
                expected: slot.arity(),
                found: t.arity(),
            });
        }
        *slot = t;
        Ok(self)
    }

    pub fn component(&self, j: usize) -> &Tensor<F> {
        &self.components[j]
    }

    pub fn components(&self) -> &[Tensor<F>] {
        &self.components
    }

    pub fn relation_degree(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Tensor::is_zero)
    }

    /// Only `φ_0` may be nonzero.
    pub fn constants_only(&self) -> bool {
        self.components[1..].iter().all(Tensor::is_zero)
    }

    /// `φ_0(f)` as a scalar.
    pub fn constant(&self) -> F {
        self.components[0].coeff(&Word::empty())
    }

    /// The deformed relation `f - Σ φ_j(f)` as terms of mixed degree.
    pub fn deformed_relation(&self, f: &Tensor<F>) -> Vec<(Word, F)> {
        let mut terms: Vec<(Word, F)> = f.terms().map(|(w, c)| (w, c.clone())).collect();
        for c in &self.components {
            terms.extend(c.terms().map(|(w, c)| (w, c.neg())));
        }
        terms
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PbwCondition {
    J1,
    J2(usize),
    J3,
}

impl fmt::Display for PbwCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PbwCondition::J1 => f.write_str("J1"),
            PbwCondition::J2(j) => write!(f, "J2({j})"),
            PbwCondition::J3 => f.write_str("J3"),
        }
    }
}

/// An element of `W_{N+1}` and the nonzero quantity it produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwWitness<F: Field> {
    pub w: Tensor<F>,
    /// For J1 the residue of `D_{N-1}(w)` modulo `R`; for J2(j) the
    /// tensor `μ φ_j(f) + D_{j-1}(w)`; for J3 the scalar `μ φ_0(f)`.
    pub offending: Tensor<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwVerdict<F: Field> {
    pub is_pbw: bool,
    pub failed_condition: Option<PbwCondition>,
    pub witness: Option<PbwWitness<F>>,
}

impl<F: Field> PbwVerdict<F> {
    fn pass() -> Self {
        PbwVerdict {
            is_pbw: true,
            failed_condition: None,
            witness: None,
        }
    }
}

/// `(c_k)` and `(d_k)` with `w = Σ c_k f ⊗ x_k = Σ d_k x_k ⊗ f`.
fn split_coefficients<F: Field>(f: &Tensor<F>, w: &Tensor<F>) -> (Vec<F>, Vec<F>) {
    let n = f.arity();
    let (lead, lc) = f.leading().expect("nonzero relation");
    let inv = lc.inv().expect("nonzero");
    let c = (0..n as u8)
        .map(|k| w.coeff(&lead.concat(&Word::new(vec![k]))).mul(&inv))
        .collect();
    let d = (0..n as u8)
        .map(|k| w.coeff(&Word::new(vec![k]).concat(&lead)).mul(&inv))
        .collect();
    (c, d)
}

/// `D_j(w)` for the given splitting.
fn d_map<F: Field>(phi_j: &Tensor<F>, c: &[F], d: &[F]) -> Result<Tensor<F>> {
    let n = phi_j.arity();
    let mut acc = Tensor::zero(n, phi_j.degree() + 1);
    for k in 0..n {
        let x = Tensor::word(n, &Word::new(vec![k as u8]))?;
        if !c[k].is_zero() {
            acc = acc.add_scaled(&c[k], &phi_j.tensor(&x)?)?;
        }
        if !d[k].is_zero() {
            acc = acc.add_scaled(&d[k].neg(), &x.tensor(phi_j)?)?;
        }
    }
    Ok(acc)
}

/// Checks J1-J3 on a basis of `W_{N+1}`; vacuous when `W_{N+1} = 0`.
pub fn pbw_check<F: Field>(p: &Presentation<F>, phi: &PhiMap<F>) -> Result<PbwVerdict<F>> {
    let f = p.require_single()?.clone();
    let big_n = p.relation_degree();
    if phi.relation_degree() != big_n || phi.component(0).arity() != p.generators() {
        return Err(Error::precondition("deformation map does not match the presentation"));
    }
    if !koszul::criterion_check(p)?.is_koszul {
        return Err(Error::precondition("PBW conditions need an N-Koszul algebra"));
    }
    let w_space = p.w_space(big_n + 1)?;
    let r = p.relation_space();
    let (lead, lc) = f.leading().map(|(w, c)| (w, c.clone())).expect("nonzero");

    struct Eval<F: Field> {
        w: Tensor<F>,
        c: Vec<F>,
        d: Vec<F>,
        mu: F,
    }
    let mut evals = Vec::new();
    for w in w_space.basis() {
        let (c, d) = split_coefficients(&f, w);
        let top = d_map(phi.component(big_n - 1), &c, &d)?;
        let residue = r.reduce(&top)?;
        if !residue.is_zero() {
            return Ok(PbwVerdict {
                is_pbw: false,
                failed_condition: Some(PbwCondition::J1),
                witness: Some(PbwWitness {
                    w: w.clone(),
                    offending: residue,
                }),
            });
        }
        let mu = top.coeff(&lead).div(&lc).expect("nonzero");
        evals.push(Eval { w: w.clone(), c, d, mu });
    }
    for j in 1..big_n {
        for e in &evals {
            let lower = d_map(phi.component(j - 1), &e.c, &e.d)?;
            let value = lower.add_scaled(&e.mu, phi.component(j))?;
            if !value.is_zero() {
                return Ok(PbwVerdict {
                    is_pbw: false,
                    failed_condition: Some(PbwCondition::J2(j)),
                    witness: Some(PbwWitness {
                        w: e.w.clone(),
                        offending: value,
                    }),
                });
            }
        }
    }
    for e in &evals {
        let value = phi.component(0).scale(&e.mu);
        if !value.is_zero() {
            return Ok(PbwVerdict {
                is_pbw: false,
                failed_condition: Some(PbwCondition::J3),
                witness: Some(PbwWitness {
                    w: e.w.clone(),
                    offending: value,
                }),
            });
        }
    }
    Ok(PbwVerdict::pass())
}

/// For `f = c · x_i^N`: the deformation is PBW iff every `φ_j(f)` is a
/// multiple of `x_i^j`.
pub fn pbw_power_closed_form<F: Field>(p: &Presentation<F>, phi: &PhiMap<F>) -> Result<bool> {
    let f = p.require_single()?;
    let letter = koszul::power_letter(f)
        .ok_or_else(|| Error::precondition("relation is not a power of one generator"))?;
    Ok(phi.components().iter().enumerate().all(|(j, t)| {
        t.is_zero() || (t.len() == 1 && t.leading().expect("nonzero").0 == Word::power(letter, j))
    }))
}

/// `Σ_{i < n/2} (x_i x_{i+n/2} - x_{i+n/2} x_i)`.
pub fn symplectic_relation<F: Field>(n: usize) -> Result<Tensor<F>> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::precondition(format!("symplectic form needs even n >= 2, got {n}")));
    }
    let h = n / 2;
    let mut terms = Vec::with_capacity(n);
    for i in 0..h {
        terms.push((Word::new(vec![i as u8, (i + h) as u8]), F::one()));
        terms.push((Word::new(vec![(i + h) as u8, i as u8]), F::one().neg()));
    }
    Tensor::from_terms(n, 2, terms)
}

pub const SYMPLECTIC_HOCHSCHILD_NOTE: &str =
    "HH^i(U, U ⊗ U) = 0 for i != 2 (certified by theory, not computed)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticDeformation {
    pub koszul_filtered: bool,
    pub calabi_yau: bool,
    pub hochschild_note: &'static str,
}

/// The deformation `Σ [x_i, x_{i+n/2}] = v + λ`: always Koszul as a filtered
/// algebra, 2-Calabi-Yau exactly when `v = 0`.
pub fn classify_symplectic_deformation<F: Field>(n: usize, v: &Tensor<F>, lambda: &F) -> Result<SymplecticDeformation> {
    symplectic_relation::<F>(n)?;
    if v.degree() != 1 || v.arity() != n {
        return Err(Error::precondition("v must be an element of V"));
    }
    let _ = lambda;
    Ok(SymplecticDeformation {
        koszul_filtered: true,
        calabi_yau: v.is_zero(),
        hochschild_note: SYMPLECTIC_HOCHSCHILD_NOTE,
    })
}

/// The PhiMap of the symplectic deformation by `v + λ`.
pub fn symplectic_phi<F: Field>(n: usize, v: &Tensor<F>, lambda: &F) -> Result<PhiMap<F>> {
    PhiMap::zero(n, 2).with(v.clone())?.with(Tensor::scalar(n, lambda.clone()))
}

/// A deformation by constants of a `d`-Calabi-Yau algebra is again
/// `d`-Calabi-Yau. The Calabi-Yau property of `A` is the caller's
/// certificate; this only checks the shape of `φ` and the PBW conditions.
pub fn constants_only_cy<F: Field>(p: &Presentation<F>, base_cy_dimension: usize, phi: &PhiMap<F>) -> Result<bool> {
    if base_cy_dimension < 2 {
        return Err(Error::precondition("Calabi-Yau dimension must be at least 2"));
    }
    if !phi.constants_only() {
        return Err(Error::precondition("only phi_0 may be nonzero"));
    }
    if !pbw_check(p, phi)?.is_pbw {
        return Err(Error::precondition("deformation is not PBW"));
    }
    Ok(true)
}

/// Rewriting view of the deformation: the rule `lead(f) ↦ ...` built from
/// `f - Σ φ_j(f)`, its confluence, and irreducible words of degree `≤ d`
/// next to `Σ_{i ≤ d} dim A_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredReport<F: Field> {
    pub rule: RewriteRule<F>,
    pub confluent: bool,
    pub irreducible_upto: Vec<u128>,
    pub graded_upto: Vec<u128>,
}

impl<F: Field> FilteredReport<F> {
    pub fn dimensions_agree(&self) -> bool {
        self.irreducible_upto == self.graded_upto
    }
}

pub fn filtered_dimension_oracle<F: Field>(
    p: &Presentation<F>,
    phi: &PhiMap<F>,
    order: &WordOrder,
    d_max: usize,
) -> Result<FilteredReport<F>> {
    let f = p.require_single()?;
    let rule = rewriting::make_inhomogeneous_rule(phi.deformed_relation(f), order)?;
    let confluent = rewriting::confluence_check(&rule).is_confluent();
    let n = p.generators();
    let dims = p.graded_dims(d_max)?;
    let mut graded_upto = Vec::with_capacity(d_max + 1);
    let mut irreducible_upto = Vec::with_capacity(d_max + 1);
    let (mut g, mut r) = (0u128, 0u128);
    for d in 0..=d_max {
        g += u128::from(dims.0[d]);
        r += rewriting::irreducible_count(&rule, n, d)?;
        graded_upto.push(g);
        irreducible_upto.push(r);
    }
    Ok(FilteredReport {
        rule,
        confluent,
        irreducible_upto,
        graded_upto,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Q;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    fn t(n: usize, terms: &[(&[u8], i64)]) -> Tensor<Q> {
        Tensor::from_terms(n, terms[0].0.len(), terms.iter().map(|(l, c)| (Word::new(l.to_vec()), q(*c)))).unwrap()
    }

    fn cube() -> Presentation<Q> {
        Presentation::single(2, t(2, &[(&[0, 0, 0], 1)])).unwrap()
    }

    #[test]
    fn gldim_two_is_always_pbw() {
        let p = Presentation::single(2, symplectic_relation::<Q>(2).unwrap()).unwrap();
        let phi = PhiMap::zero(2, 2).with(t(2, &[(&[0], 3), (&[1], -1)])).unwrap().with(Tensor::scalar(2, q(7))).unwrap();
        assert!(pbw_check(&p, &phi).unwrap().is_pbw);
    }

    #[test]
    fn power_relation_examples() {
        let p = cube();
        let bad = PhiMap::zero(2, 3).with(t(2, &[(&[1], 1)])).unwrap();
        let v = pbw_check(&p, &bad).unwrap();
        assert!(!v.is_pbw);
        assert_eq!(v.failed_condition, Some(PbwCondition::J2(2)));
        assert_eq!(v.witness.unwrap().offending, t(2, &[(&[1, 0], 1), (&[0, 1], -1)]));
        assert!(!pbw_power_closed_form(&p, &bad).unwrap());

        let good = PhiMap::zero(2, 3)
            .with(t(2, &[(&[0, 0], 1)]))
            .unwrap()
            .with(Tensor::scalar(2, q(1)))
            .unwrap();
        assert!(pbw_check(&p, &good).unwrap().is_pbw);
        assert!(pbw_power_closed_form(&p, &good).unwrap());
        assert!(pbw_power_closed_form(&p, &PhiMap::zero(2, 3)).unwrap());
    }

    #[test]
    fn top_component_fails_j1() {
        let p = cube();
        let phi = PhiMap::zero(2, 3).with(t(2, &[(&[0, 1], 1)])).unwrap();
        let v = pbw_check(&p, &phi).unwrap();
        assert_eq!(v.failed_condition, Some(PbwCondition::J1));
        assert!(!pbw_power_closed_form(&p, &phi).unwrap());
    }

    #[test]
    fn closed_form_needs_a_power() {
        let p = Presentation::single(2, symplectic_relation::<Q>(2).unwrap()).unwrap();
        assert!(pbw_power_closed_form(&p, &PhiMap::zero(2, 2)).is_err());
    }

    #[test]
    fn non_koszul_rejected() {
        let p = Presentation::single(2, t(2, &[(&[0, 1, 0], 1)])).unwrap();
        assert!(pbw_check(&p, &PhiMap::zero(2, 3)).is_err());
    }

    #[test]
    fn symplectic_deformations() {
        let zero = Tensor::<Q>::zero(2, 1);
        assert!(classify_symplectic_deformation(2, &zero, &q(1)).unwrap().calabi_yau);
        assert!(!classify_symplectic_deformation(2, &t(2, &[(&[0], 1)]), &q(0)).unwrap().calabi_yau);
        assert!(classify_symplectic_deformation(4, &Tensor::<Q>::zero(4, 1), &q(0)).unwrap().calabi_yau);
        assert!(classify_symplectic_deformation(3, &Tensor::<Q>::zero(3, 1), &q(0)).is_err());
    }

    #[test]
    fn constants_only_examples() {
        for (n, c) in [(2, 1), (4, 5)] {
            let p = Presentation::single(n, symplectic_relation::<Q>(n).unwrap()).unwrap();
            let phi = PhiMap::zero(n, 2).with(Tensor::scalar(n, q(c))).unwrap();
            assert!(constants_only_cy(&p, 2, &phi).unwrap());
        }
        let p = Presentation::single(2, symplectic_relation::<Q>(2).unwrap()).unwrap();
        let phi = PhiMap::zero(2, 2).with(t(2, &[(&[0], 1)])).unwrap();
        assert!(constants_only_cy(&p, 2, &phi).is_err());
    }

    #[test]
    fn weyl_algebra_filtered_dims() {
        let p = Presentation::single(2, symplectic_relation::<Q>(2).unwrap()).unwrap();
        let phi = symplectic_phi(2, &Tensor::zero(2, 1), &q(1)).unwrap();
        let rep = filtered_dimension_oracle(&p, &phi, &WordOrder::identity(2), 6).unwrap();
        assert!(rep.confluent && rep.dimensions_agree());
        assert_eq!(rep.graded_upto, vec![1, 3, 6, 10, 15, 21, 28]);
    }

    #[test]
    fn phi_shape_checks() {
        assert!(PhiMap::<Q>::new(2, 3, vec![Tensor::zero(2, 0), Tensor::zero(2, 1)]).is_err());
        assert!(PhiMap::<Q>::new(2, 2, vec![Tensor::zero(2, 0), Tensor::zero(2, 2)]).is_err());
        assert!(PhiMap::zero(2, 2).with(t(2, &[(&[0, 1], 1)])).is_err());
    }
}
