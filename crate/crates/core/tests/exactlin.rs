mod common;

use common::*;
use nkoszul::{Field, Subspace, Tensor, Q};
use proptest::prelude::*;
use rand::seq::SliceRandom;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn modular_law(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_subspace(&mut r, 2, 3, 2, 0.5);
        let b = random_subspace(&mut r, 2, 3, 3, 0.5);
        let c = a.sum(&random_subspace(&mut r, 2, 3, 2, 0.5)).unwrap();
        prop_assert!(c.contains(&a).unwrap());
        let left = a.sum(&b.intersect(&c).unwrap()).unwrap();
        let right = a.sum(&b).unwrap().intersect(&c).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn dimension_formula(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_subspace(&mut r, 3, 2, 4, 0.4);
        let b = random_subspace(&mut r, 3, 2, 5, 0.4);
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(s.contains(&a).unwrap() && s.contains(&b).unwrap());
        prop_assert!(a.contains(&i).unwrap() && b.contains(&i).unwrap());
    }

    #[test]
    fn canonical_basis_ignores_spanning_set(seed in any::<u64>()) {
        let mut r = rng(seed);
        let vs: Vec<Tensor<Q>> = (0..4)
            .map(|_| nkoszul::sample::relation(&mut r, 2, 3, 0.5).unwrap())
            .collect();
        let base = Subspace::span(2, 3, &vs).unwrap();
        let mut mixed: Vec<Tensor<Q>> = vs
            .iter()
            .map(|v| v.scale(&nkoszul::sample::nonzero_scalar::<_, Q>(&mut r)))
            .collect();
        mixed.push(vs[0].add(&vs[1]).unwrap());
        mixed.shuffle(&mut r);
        prop_assert_eq!(Subspace::span(2, 3, &mixed).unwrap(), base.clone());
        for v in base.basis() {
            prop_assert!(v.leading().unwrap().1.is_one());
        }
    }

    #[test]
    fn extension_commutes_with_lattice_operations(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_subspace(&mut r, 2, 2, 2, 0.6);
        let b = random_subspace(&mut r, 2, 2, 2, 0.6);
        let (l, rr) = ((seed % 2) as usize, (seed / 2 % 2) as usize);
        let ext = |s: &Subspace<Q>| s.extend(l, rr).unwrap();
        prop_assert_eq!(ext(&a.sum(&b).unwrap()), ext(&a).sum(&ext(&b)).unwrap());
        prop_assert_eq!(ext(&a.intersect(&b).unwrap()), ext(&a).intersect(&ext(&b)).unwrap());
    }

    #[test]
    fn intersect_extension_matches_materialised(seed in any::<u64>()) {
        let mut r = rng(seed);
        let core = random_subspace(&mut r, 2, 2, 1, 0.7);
        let s = random_subspace(&mut r, 2, 4, 6, 0.4);
        for left in 0..=2 {
            let right = 2 - left;
            let fast = s.intersect_extension(&core, left, right).unwrap();
            let slow = s.intersect(&core.extend(left, right).unwrap()).unwrap();
            prop_assert_eq!(fast, slow);
        }
    }
}

#[test]
fn extremes() {
    let full = Subspace::<Q>::full(2, 2).unwrap();
    let zero = Subspace::<Q>::zero(2, 2);
    let line = Subspace::span(2, 2, &[tensor(2, &[(&[0, 1], 1), (&[1, 0], -1)])]).unwrap();
    assert_eq!(line.sum(&full).unwrap(), full);
    assert_eq!(line.intersect(&zero).unwrap(), zero);
    assert_eq!(line.intersect(&full).unwrap(), line);
    assert_eq!(line.extend(1, 0).unwrap().dim(), 2);
}
