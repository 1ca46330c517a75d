//! Bounded-degree verification that the subspaces `V^{⊗i} ⊗ R ⊗ V^{⊗j}`
//! generate a distributive lattice.
//!
//! The closure records the index of every pairwise sum and intersection it
//! computes, so the triple check afterwards is pure table lookups.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Subspace};
use crate::exec::Exec;
use crate::presentation::Presentation;

pub const DEFAULT_LATTICE_CAP: usize = 20_000;

/// A finite lattice of subspaces of `V^{⊗m}` closed under `+` and `∩`.
#[derive(Clone, Debug)]
pub struct Lattice<F: Field> {
    degree: usize,
    elements: Vec<Subspace<F>>,
    generator_flags: Vec<bool>,
    /// `join[i][j]`, `meet[i][j]` for `j < i`.
    join: Vec<Vec<u32>>,
    meet: Vec<Vec<u32>>,
}

impl<F: Field> Lattice<F> {
    /// Closure of `generators` under sum and intersection, aborting once more
    /// than `cap` elements exist.
    pub fn close(generators: Vec<Subspace<F>>, cap: usize) -> Result<Self> {
        Self::close_with(generators, cap, Exec::default())
    }

    /// [`Lattice::close`] with an explicit strategy for the pairwise
    /// operations of each new element. Interning stays sequential, so the
    /// element order does not depend on the strategy.
    pub fn close_with(generators: Vec<Subspace<F>>, cap: usize, exec: Exec) -> Result<Self> {
        let degree = generators.first().map_or(0, Subspace::degree);
        let mut lat = Lattice {
            degree,
            elements: Vec::new(),
            generator_flags: Vec::new(),
            join: Vec::new(),
            meet: Vec::new(),
        };
        let mut index: HashMap<Subspace<F>, u32> = HashMap::new();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
            match index.get(&g) {
                Some(&i) => lat.generator_flags[i as usize] = true,
                None => {
                    lat.push(&mut index, g, cap)?;
                    *lat.generator_flags.last_mut().expect("just pushed") = true;
                }
            }
        }
        let mut k = 0;
        while k < lat.elements.len() {
            let current = &lat.elements[k];
            let pairs = exec.map(&lat.elements[..k], |other| -> Result<_> {
                let s = current.sum(other)?;
                let t = if s.dim() == current.dim() {
                    other.clone()
                } else if s.dim() == other.dim() {
                    current.clone()
                } else if s.dim() == current.dim() + other.dim() {
                    Subspace::zero(current.arity(), current.degree())
                } else {
                    current.intersect(other)?
                };
                Ok((s, t))
            });
            let mut joins = Vec::with_capacity(k);
            let mut meets = Vec::with_capacity(k);
            for pair in pairs {
                let (s, t) = pair?;
                joins.push(lat.intern(&mut index, s, cap)?);
                meets.push(lat.intern(&mut index, t, cap)?);
            }
            lat.join[k] = joins;
            lat.meet[k] = meets;
            k += 1;
        }
        Ok(lat)
    }

    fn push(&mut self, index: &mut HashMap<Subspace<F>, u32>, s: Subspace<F>, cap: usize) -> Result<u32> {
        if self.elements.len() >= cap {
            return Err(Error::Resource {
                cap: "lattice elements",
                limit: cap as u128,
                requested: self.elements.len() as u128 + 1,
            });
        }
        let i = self.elements.len() as u32;
        index.insert(s.clone(), i);
        self.elements.push(s);
        self.generator_flags.push(false);
        self.join.push(Vec::new());
        self.meet.push(Vec::new());
        Ok(i)
    }

    fn intern(&mut self, index: &mut HashMap<Subspace<F>, u32>, s: Subspace<F>, cap: usize) -> Result<u32> {
        match index.get(&s) {
            Some(&i) => Ok(i),
            None => self.push(index, s, cap),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Subspace<F>] {
        &self.elements
    }

    pub fn generator_flags(&self) -> &[bool] {
        &self.generator_flags
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        lookup(&self.join, a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        lookup(&self.meet, a, b)
    }
}

fn lookup(table: &[Vec<u32>], a: usize, b: usize) -> usize {
    match a.cmp(&b) {
        std::cmp::Ordering::Equal => a,
        std::cmp::Ordering::Greater => table[a][b] as usize,
        std::cmp::Ordering::Less => table[b][a] as usize,
    }
}

/// Lattice generated by `V^{⊗i} ⊗ R ⊗ V^{⊗j}`, `i + N + j = m`.
pub fn generate_sublattice<F: Field>(p: &Presentation<F>, m: usize, cap: usize) -> Result<Lattice<F>> {
    generate_sublattice_with(p, m, cap, Exec::default())
}

pub fn generate_sublattice_with<F: Field>(p: &Presentation<F>, m: usize, cap: usize, exec: Exec) -> Result<Lattice<F>> {
    let big_n = p.relation_degree();
    if m < big_n {
        return Err(Error::precondition(format!("need m >= N = {big_n}, got {m}")));
    }
    p.check_degree(m)?;
    let r = p.relation_space();
    let gens = (0..=m - big_n)
        .map(|i| r.extend(i, m - big_n - i))
        .collect::<Result<Vec<_>>>()?;
    Lattice::close_with(gens, cap, exec)
}

/// Outcome of [`check_distributive`]; a violating triple `(E, F, G)` has
/// `E ∩ (F + G) ≠ (E ∩ F) + (E ∩ G)`, given as element indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distributivity {
    Distributive,
    Violating(usize, usize, usize),
}

impl Distributivity {
    pub fn is_distributive(self) -> bool {
        self == Distributivity::Distributive
    }
}

/// Tests `E ∩ (F + G) = (E ∩ F) + (E ∩ G)` on every set of three distinct
/// elements, with each of them in turn playing `E`. Triples with a repeated
/// element satisfy the identity in any lattice of subspaces.
pub fn check_distributive<F: Field>(lat: &Lattice<F>, exec: Exec) -> Distributivity {
    let n = lat.len();
    let holds = |e: usize, f: usize, g: usize| lat.meet(e, lat.join(f, g)) == lat.join(lat.meet(e, f), lat.meet(e, g));
    let firsts = exec.map_range(n, |a| {
        for b in a + 1..n {
            for c in b + 1..n {
                for (e, f, g) in [(a, b, c), (b, a, c), (c, a, b)] {
                    if !holds(e, f, g) {
                        return Some((e, f, g));
                    }
                }
            }
        }
        None
    });
    match firsts.into_iter().flatten().next() {
        Some((e, f, g)) => Distributivity::Violating(e, f, g),
        None => Distributivity::Distributive,
    }
}

/// Same identity evaluated with fresh subspace arithmetic instead of the
/// closure tables.
pub fn triple_is_distributive<F: Field>(e: &Subspace<F>, f: &Subspace<F>, g: &Subspace<F>) -> Result<bool> {
    Ok(e.intersect(&f.sum(g)?)? == e.intersect(f)?.sum(&e.intersect(g)?)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteEntry {
    pub m: usize,
    pub lattice_size: usize,
    pub verdict: Distributivity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GerasimovReport {
    /// `dim R = 1`; outside it a violation is not a contradiction.
    pub single_relation: bool,
    pub entries: Vec<SuiteEntry>,
}

impl GerasimovReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.verdict.is_distributive())
    }

    pub fn violations(&self) -> usize {
        self.entries.iter().filter(|e| !e.verdict.is_distributive()).count()
    }
}

/// Distributivity of the generated lattices for every `m` in `N..=m_max`.
pub fn gerasimov_suite<F: Field>(p: &Presentation<F>, m_max: usize, cap: usize, exec: Exec) -> Result<GerasimovReport> {
    let mut entries = Vec::new();
    for m in p.relation_degree()..=m_max {
        let lat = generate_sublattice_with(p, m, cap, exec)?;
        entries.push(SuiteEntry {
            m,
            lattice_size: lat.len(),
            verdict: check_distributive(&lat, exec),
        });
    }
    Ok(GerasimovReport {
        single_relation: p.relation_space().dim() == 1,
        entries,
    })
}
