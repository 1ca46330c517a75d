mod common;

use std::collections::HashSet;

use common::*;
use nkoszul::distributivity::{self, check_distributive, triple_is_distributive, Lattice};
use nkoszul::{Exec, Subspace, Q};
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn element_set(l: &Lattice<Q>) -> HashSet<Subspace<Q>> {
    l.elements().iter().cloned().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn closure_is_idempotent_and_order_free(seed in any::<u64>()) {
        let p = random_single(seed, 2, 2);
        let lat = distributivity::generate_sublattice(&p, 4, 1000).unwrap();
        let again = Lattice::close(lat.elements().to_vec(), 1000).unwrap();
        prop_assert_eq!(element_set(&again), element_set(&lat));

        let r = p.relation_space();
        let mut gens: Vec<Subspace<Q>> = (0..=2).map(|i| r.extend(i, 2 - i).unwrap()).collect();
        gens.shuffle(&mut rng(seed ^ 1));
        let shuffled = Lattice::close_with(gens, 1000, Exec::Sequential).unwrap();
        prop_assert_eq!(element_set(&shuffled), element_set(&lat));
    }

    #[test]
    fn tables_match_fresh_arithmetic(seed in any::<u64>()) {
        let p = random_single(seed, 2, 2);
        let lat = distributivity::generate_sublattice(&p, 4, 1000).unwrap();
        let e = lat.elements();
        for a in 0..e.len() {
            for b in 0..e.len() {
                prop_assert_eq!(&e[lat.join(a, b)], &e[a].sum(&e[b]).unwrap());
                prop_assert_eq!(&e[lat.meet(a, b)], &e[a].intersect(&e[b]).unwrap());
            }
        }
        prop_assert!(check_distributive(&lat, Exec::Parallel).is_distributive());
        for a in 0..e.len().min(6) {
            for b in 0..e.len().min(6) {
                for c in 0..e.len().min(6) {
                    prop_assert!(triple_is_distributive(&e[a], &e[b], &e[c]).unwrap());
                }
            }
        }
    }
}

#[test]
fn three_lines_in_a_plane_are_not_distributive() {
    let lines: Vec<Subspace<Q>> = [
        tensor(2, &[(&[0], 1)]),
        tensor(2, &[(&[1], 1)]),
        tensor(2, &[(&[0], 1), (&[1], 1)]),
    ]
    .iter()
    .map(|v| Subspace::span(2, 1, std::slice::from_ref(v)).unwrap())
    .collect();
    let lat = Lattice::close(lines.clone(), 100).unwrap();
    assert_eq!(lat.len(), 5);
    assert!(!check_distributive(&lat, Exec::Sequential).is_distributive());
    assert!(!triple_is_distributive(&lines[0], &lines[1], &lines[2]).unwrap());
}

#[test]
fn suite_is_executor_independent() {
    let p = random_single(9, 3, 2);
    let a = distributivity::gerasimov_suite(&p, 4, 1000, Exec::Sequential).unwrap();
    let b = distributivity::gerasimov_suite(&p, 4, 1000, Exec::Parallel).unwrap();
    assert_eq!(a, b);
    assert!(a.all_pass() && a.single_relation);
}

#[test]
fn cap_is_reported() {
    let p = random_single(2, 2, 2);
    let err = distributivity::generate_sublattice(&p, 5, 5).unwrap_err();
    assert!(err.is_resource());
}
