mod common;

use common::*;
use nkoszul::rewriting::{self, WordOrder};
use nkoszul::{sample, Presentation, Tensor, Q};
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn random_order(seed: u64, n: usize) -> WordOrder {
    let mut ranks: Vec<u8> = (0..n as u8).collect();
    ranks.shuffle(&mut rng(seed));
    WordOrder::from_ranks(ranks).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn confluence_certifies_dimensions(seed in any::<u64>(), big_n in 2usize..=3) {
        let f = sample::relation(&mut rng(seed), 2, big_n, 0.35).unwrap();
        let p = Presentation::single(2, f.clone()).unwrap();
        let rule = rewriting::make_rule(&f, &random_order(seed, 2)).unwrap();
        let confluent = rewriting::confluence_check(&rule).is_confluent();
        for d in 0..=7 {
            let irr = rewriting::irreducible_count(&rule, 2, d).unwrap();
            let dim = u128::from(p.graded_dim(d).unwrap());
            // irreducible words always span A_d
            prop_assert!(irr >= dim);
            if confluent {
                prop_assert_eq!(irr, dim);
            }
        }
    }

    #[test]
    fn normal_form_is_idempotent_and_stays_in_class(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = sample::relation(&mut r, 2, 2, 0.5).unwrap();
        let p = Presentation::single(2, f.clone()).unwrap();
        let rule = rewriting::make_rule(&f, &random_order(seed, 2)).unwrap();
        let t: Tensor<Q> = sample::relation(&mut r, 2, 4, 0.6).unwrap();
        let nf = rewriting::normal_form(&rule, &t).unwrap();
        prop_assert_eq!(rewriting::normal_form(&rule, &nf).unwrap(), nf.clone());
        for (w, _) in nf.terms() {
            prop_assert!(w.find(rule.lead()).is_none());
        }
        let diff = t.sub(&nf).unwrap();
        prop_assert!(p.ideal_component(4).unwrap().contains_vector(&diff).unwrap());
    }
}

#[test]
fn commutator_rule_is_confluent() {
    let f = tensor(3, &[(&[0, 1], 1), (&[1, 0], -1)]);
    let rule = rewriting::make_rule(&f, &WordOrder::identity(3)).unwrap();
    assert!(rewriting::confluence_check(&rule).is_confluent());
    let rep = rewriting::confluence_check(&rewriting::make_rule(&tensor(2, &[(&[0, 1, 0], 1)]), &WordOrder::identity(2)).unwrap());
    assert!(!rep.ambiguities.is_empty());
}
