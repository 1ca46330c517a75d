use nkoszul::pbw::PhiMap;
use nkoszul::{sample, Field, Presentation, Tensor, Word, Q};
use nkoszul_cli::input::{emit, parse_presentation};
use nkoszul_cli::CliError;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn q(p: i64, d: i64) -> Q {
    Q::from_i64(p).div(&Q::from_i64(d)).unwrap()
}

#[test]
fn symplectic_document() {
    let text = r#"{"n":2,"N":2,"relation":[{"word":[0,1],"coeff":"1"},{"word":[1,0],"coeff":"-1"}]}"#;
    let parsed = parse_presentation(text).unwrap();
    let f = Tensor::from_terms(
        2,
        2,
        [(Word::new(vec![0, 1]), Q::one()), (Word::new(vec![1, 0]), Q::from_i64(-1))],
    )
    .unwrap();
    assert_eq!(parsed.presentation, Presentation::single(2, f).unwrap());
    assert!(parsed.phi.is_none());
}

#[test]
fn fractional_coefficient_is_exact() {
    let text = r#"{"n":2,"N":2,"relation":[{"word":[0,0],"coeff":"1/3"}]}"#;
    let p = parse_presentation(text).unwrap().presentation;
    assert_eq!(p.relations()[0].coeff(&Word::new(vec![0, 0])), q(1, 3));
    let text = r#"{"n":2,"N":2,"relation":[{"word":[0,0],"coeff":"-6/4"}]}"#;
    let p = parse_presentation(text).unwrap().presentation;
    assert_eq!(p.relations()[0].coeff(&Word::new(vec![0, 0])), q(-3, 2));
}

#[test]
fn out_of_range_generator_is_named() {
    let text = r#"{"n":2,"N":2,"relation":[{"word":[0,2],"coeff":"1"}]}"#;
    let err = parse_presentation(text).unwrap_err();
    match &err {
        CliError::Semantic { path, message } => {
            assert_eq!(path, "relation[0].word[1]");
            assert!(message.contains("generator index 2 ≥ n"), "{message}");
        }
        other => panic!("unexpected {other:?}"),
    }
    assert_eq!(err.exit_code(), 1);
}

#[test]
fn syntax_errors_carry_position() {
    let text = "{\"n\": 2,\n \"N\": 2,\n \"relation\": [{\"word\": [0, 1], \"coeff\": 1}]}";
    match parse_presentation(text).unwrap_err() {
        CliError::Syntax { line, column, .. } => {
            assert_eq!(line, 3);
            assert!(column > 1);
        }
        other => panic!("unexpected {other:?}"),
    }
    match parse_presentation("{\"n\": 2,").unwrap_err() {
        CliError::Syntax { line, .. } => assert_eq!(line, 1),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn semantic_errors() {
    let cases = [
        (r#"{"n":2,"N":2,"relation":[{"word":[0,1,1],"coeff":"1"}]}"#, "relation[0].word"),
        (r#"{"n":2,"N":2,"relation":[{"word":[0,1],"coeff":"x"}]}"#, "relation[0].coeff"),
        (r#"{"n":2,"N":2,"relation":[{"word":[0,1],"coeff":"1/0"}]}"#, "relation[0].coeff"),
        (r#"{"n":2,"N":2,"relation":[{"word":[0,1],"coeff":"1"},{"word":[0,1],"coeff":"-1"}]}"#, "relation"),
        (r#"{"n":2,"N":2,"relation":[]}"#, "relation"),
        (r#"{"n":2,"N":1,"relation":[{"word":[0],"coeff":"1"}]}"#, "N"),
        (r#"{"n":0,"N":2,"relations":[]}"#, "n"),
        (r#"{"n":2,"N":2}"#, "relation"),
        (r#"{"n":2,"N":2,"relation":[{"word":[0,0],"coeff":"1"}],"phi":[[]]}"#, "phi"),
        (
            r#"{"n":2,"N":2,"relation":[{"word":[0,0],"coeff":"1"}],"phi":[[],[{"word":[0,0],"coeff":"1"}]]}"#,
            "phi[1][0].word",
        ),
    ];
    for (text, expected) in cases {
        match parse_presentation(text).unwrap_err() {
            CliError::Semantic { path, .. } => assert_eq!(path, expected, "{text}"),
            other => panic!("{text}: unexpected {other:?}"),
        }
    }
}

#[test]
fn unknown_fields_are_rejected() {
    let text = r#"{"n":2,"N":2,"relation":[{"word":[0,0],"coeff":"1"}],"extra":1}"#;
    assert!(matches!(parse_presentation(text), Err(CliError::Syntax { .. })));
}

#[test]
fn phi_round_trips() {
    let text = r#"{"n":2,"N":3,"relation":[{"word":[0,0,0],"coeff":"1"}],
        "phi":[[{"word":[],"coeff":"1/2"}],[{"word":[1],"coeff":"2"}],[]]}"#;
    let parsed = parse_presentation(text).unwrap();
    let phi = parsed.phi.as_ref().unwrap();
    assert_eq!(phi.constant(), q(1, 2));
    assert!(phi.component(2).is_zero());
    let back = parse_presentation(&emit(&parsed.presentation, Some(phi))).unwrap();
    assert_eq!(back, parsed);
}

fn random_presentation(seed: u64) -> (Presentation<Q>, Option<PhiMap<Q>>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 1 + (seed % 3) as usize;
    let big_n = 2 + (seed / 3 % 3) as usize;
    let count = 1 + (seed / 9 % 3) as usize;
    let rels = (0..count)
        .map(|_| sample::relation(&mut rng, n, big_n, 0.5).unwrap())
        .collect();
    let p = Presentation::new(n, big_n, rels).unwrap();
    let phi = seed.is_multiple_of(2).then(|| sample::phi(&mut rng, n, big_n, 0).unwrap());
    (p, phi)
}

proptest! {
    #[test]
    fn emit_then_parse_is_identity(seed in any::<u64>()) {
        let (p, phi) = random_presentation(seed);
        let back = parse_presentation(&emit(&p, phi.as_ref())).unwrap();
        prop_assert_eq!(&back.presentation, &p);
        prop_assert_eq!(back.phi, phi);
    }
}
