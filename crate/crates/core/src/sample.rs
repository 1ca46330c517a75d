//! Seeded random inputs for tests, benchmarks and the CLI.
//!
//! Every sampler takes the generator by reference, so a fixed seed gives a
//! fixed stream of instances.

use num_bigint::BigInt;
use rand::Rng;

use crate::error::Result;
use crate::exactlin::{ambient_dim, Field, Matrix, Tensor, Word, Q};
use crate::pbw::PhiMap;

/// Random rational `p/q` with `|p| ≤ num_bound`, `1 ≤ q ≤ den_bound`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R, num_bound: i64, den_bound: i64) -> Q {
    Q::new(
        BigInt::from(rng.random_range(-num_bound..=num_bound)),
        BigInt::from(rng.random_range(1..=den_bound)),
    )
}

/// Nonzero homogeneous tensor of the given degree. Each word is kept with
/// probability `density` and gets a small random rational coefficient.
pub fn relation<R: Rng + ?Sized>(rng: &mut R, n: usize, degree: usize, density: f64) -> Result<Tensor<Q>> {
    let total = ambient_dim(n, degree)?;
    loop {
        let t = sparse(rng, n, degree, total, density, 5, 4)?;
        if !t.is_zero() {
            return Ok(t);
        }
    }
}

fn sparse<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    degree: usize,
    total: u64,
    density: f64,
    num_bound: i64,
    den_bound: i64,
) -> Result<Tensor<Q>> {
    let mut terms = Vec::new();
    for i in 0..total {
        if rng.random_bool(density) {
            terms.push((Word::from_index(i, n, degree), rational(rng, num_bound, den_bound)));
        }
    }
    Tensor::from_terms(n, degree, terms)
}

/// Random invertible `n × n` matrix with small integer entries.
pub fn invertible_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix<Q> {
    loop {
        let rows = (0..n)
            .map(|_| (0..n).map(|_| Q::from_i64(rng.random_range(-3..=3))).collect())
            .collect();
        let m = Matrix::from_rows(rows).expect("square");
        if m.rank() == n {
            return m;
        }
    }
}

/// Random deformation map. With probability `1/2` per component, `φ_j(f)`
/// is a multiple of `x_letter^j`; otherwise it is a sparse random tensor.
/// Components may come out zero.
pub fn phi<R: Rng + ?Sized>(rng: &mut R, n: usize, big_n: usize, letter: u8) -> Result<PhiMap<Q>> {
    let mut comps = Vec::with_capacity(big_n);
    for j in 0..big_n {
        let c = if rng.random_bool(0.5) {
            let coeff = if rng.random_bool(0.25) { Q::from_i64(0) } else { rational(rng, 3, 2) };
            Tensor::monomial(n, &Word::power(letter, j), coeff)?
        } else {
            let total = ambient_dim(n, j)?;
            sparse(rng, n, j, total, 0.4, 3, 2)?
        };
        comps.push(c);
    }
    PhiMap::new(n, big_n, comps)
}

/// Random nonzero element of `V`.
pub fn vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Tensor<Q>> {
    relation(rng, n, 1, 0.7)
}

/// A nonzero scalar multiple, for rescaling invariance checks.
pub fn nonzero_scalar<R: Rng + ?Sized, F: Field>(rng: &mut R) -> F {
    loop {
        let v = rng.random_range(-7i64..=7);
        if v != 0 {
            return F::from_i64(v);
        }
    }
}
