#![allow(dead_code)]

use nkoszul::{sample, Field, Presentation, Subspace, Tensor, Word, Q};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(v: i64) -> Q {
    Q::from_i64(v)
}

pub fn word(letters: &[u8]) -> Word {
    Word::new(letters.to_vec())
}

pub fn tensor(n: usize, terms: &[(&[u8], i64)]) -> Tensor<Q> {
    Tensor::from_terms(n, terms[0].0.len(), terms.iter().map(|(w, c)| (word(w), q(*c)))).unwrap()
}

pub fn random_single(seed: u64, n: usize, big_n: usize) -> Presentation<Q> {
    let f = sample::relation(&mut rng(seed), n, big_n, 0.6).unwrap();
    Presentation::single(n, f).unwrap()
}

/// Span of `count` sparse random vectors of the given degree.
pub fn random_subspace(r: &mut ChaCha8Rng, n: usize, degree: usize, count: usize, density: f64) -> Subspace<Q> {
    let vs: Vec<Tensor<Q>> = (0..count)
        .map(|_| sample::relation(r, n, degree, density).unwrap())
        .collect();
    Subspace::span(n, degree, &vs).unwrap()
}
