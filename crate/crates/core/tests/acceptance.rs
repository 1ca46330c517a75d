//! End-to-end acceptance checks. Runs without the test harness so that every
//! criterion prints its own PASS/FAIL line; the process fails if any does.

use std::time::Instant;

use nkoszul::classification::{self, congruent, tensor_from_matrix};
use nkoszul::distributivity::{gerasimov_suite, DEFAULT_LATTICE_CAP};
use nkoszul::hilbert::{self, GkDimension, GkMode, SeriesExpansion};
use nkoszul::koszul::{self, GlobalDimension};
use nkoszul::monomial::{self, MonomialSet};
use nkoszul::pbw::{self, PhiMap};
use nkoszul::presentation::free_product;
use nkoszul::{sample, Exec, Field, Presentation, Tensor, Word, Q};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const DEGREE: usize = 8;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(v: i64) -> Q {
    Q::from_i64(v)
}

fn word(letters: &[u8]) -> Word {
    Word::new(letters.to_vec())
}

fn tensor(n: usize, terms: &[(&[u8], i64)]) -> Tensor<Q> {
    Tensor::from_terms(n, terms[0].0.len(), terms.iter().map(|(w, c)| (word(w), q(*c)))).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// The 200 random single relations shared by the first two criteria.
fn random_samples() -> Vec<(usize, usize, Presentation<Q>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    for n in [2, 3] {
        for big_n in [2, 3] {
            for _ in 0..50 {
                let f = sample::relation(&mut rng, n, big_n, 0.6).unwrap();
                out.push((n, big_n, Presentation::single(n, f).unwrap()));
            }
        }
    }
    out
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gerasimov() -> Outcome {
    let samples = random_samples();
    let mut sizes = 0usize;
    for (k, (n, big_n, p)) in samples.iter().enumerate() {
        let rep = gerasimov_suite(p, big_n + 3, DEFAULT_LATTICE_CAP, Exec::Parallel).map_err(|e| e.to_string())?;
        ensure(rep.entries.len() == 4, || format!("sample {k}: expected m = N..N+3"))?;
        ensure(rep.all_pass(), || {
            format!("sample {k} (n = {n}, N = {big_n}): {} violation(s)", rep.violations())
        })?;
        sizes += rep.entries.iter().map(|e| e.lattice_size).sum::<usize>();
    }
    Ok(format!("{} relations, {sizes} lattice elements, 0 violations", samples.len()))
}

fn two_letter_monomials() -> Vec<Presentation<Q>> {
    let mut out = Vec::new();
    for big_n in 2..=4 {
        for w in Word::all(2, big_n).unwrap() {
            out.push(Presentation::monomial(2, big_n, &[w]).unwrap());
        }
    }
    out
}

fn criterion_vs_homology() -> Outcome {
    let mut cases: Vec<Presentation<Q>> = random_samples().into_iter().map(|(_, _, p)| p).collect();
    cases.extend(two_letter_monomials());
    let (mut koszul_count, mut non_koszul) = (0, 0);
    for (k, p) in cases.iter().enumerate() {
        let big_n = p.relation_degree();
        let a = koszul::criterion_check(p).map_err(|e| e.to_string())?;
        let b = koszul::criterion_check_equalform(p).map_err(|e| e.to_string())?;
        ensure(a.is_koszul == b.is_koszul, || format!("case {k}: criterion forms disagree"))?;
        let window = 2 * big_n + 2;
        let h = koszul::homology_oracle(p, 6, window, Exec::Parallel).map_err(|e| e.to_string())?;
        if a.is_koszul {
            koszul_count += 1;
            ensure(h.is_exact_in_window(), || {
                format!("case {k}: Koszul verdict but homology {:?}", h.nonzero_from(1))
            })?;
        } else {
            non_koszul += 1;
            let w = a.witness.as_ref().expect("failure carries a witness");
            ensure(koszul::verify_witness(p, a.failing_m.unwrap(), w).unwrap(), || {
                format!("case {k}: witness does not verify")
            })?;
            ensure(!h.nonzero_from(2).is_empty(), || {
                format!("case {k}: non-Koszul verdict but H_i = 0 for i >= 2 up to degree {window}")
            })?;
        }
    }
    Ok(format!(
        "{} cases: {koszul_count} Koszul with exact window, {non_koszul} non-Koszul with H_{{i>=2}} != 0",
        cases.len()
    ))
}

fn quadratic_universality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0202);
    for k in 0..200 {
        let n = [2, 3, 4][k % 3];
        let f = sample::relation(&mut rng, n, 2, 0.6).unwrap();
        let p = Presentation::single(n, f).unwrap();
        let v = koszul::criterion_check(&p).map_err(|e| e.to_string())?;
        ensure(v.is_koszul, || format!("sample {k} (n = {n}) reported non-Koszul"))?;
        if k < 30 {
            let window = [0, 0, 6, 5, 4][n];
            let h = koszul::homology_oracle(&p, 6, window, Exec::Parallel).map_err(|e| e.to_string())?;
            ensure(h.is_exact_in_window(), || format!("sample {k}: homology {:?}", h.nonzero_from(1)))?;
        }
    }
    Ok("200 quadratic relations over n in {2, 3, 4} Koszul; 30 confirmed by homology".into())
}

fn monomial_exactness() -> Outcome {
    let mut checked = 0;
    for big_n in 2..=5 {
        for w in Word::all(2, big_n).unwrap() {
            let single = monomial::is_koszul_single(&w);
            let set = monomial::is_koszul_set(&MonomialSet::singleton(2, &w).unwrap()).is_koszul;
            ensure(single == set, || format!("{w}: single {single}, set {set}"))?;
            checked += 1;
        }
    }
    let cubic = Word::all(2, 3).unwrap().filter(monomial::is_koszul_single).count();
    ensure(cubic == 6, || format!("N = 3 Koszul singletons: {cubic}, expected 6"))?;
    let census = monomial::koszul_census(2, 3, 1, monomial::DEFAULT_CENSUS_CAP, Exec::Parallel).unwrap();
    ensure(census == 6, || format!("census gives {census}, expected 6"))?;
    Ok(format!("{checked} words agree; 6 Koszul cubic singletons"))
}

fn triangle_case(name: &str, p: &Presentation<Q>, mono: Option<&Word>, expected: &[i64]) -> Result<(), String> {
    let ks = hilbert::koszul_series(p, DEGREE).map_err(|e| format!("{name}: {e}"))?;
    let gd = SeriesExpansion::from_dims(&p.graded_dims(DEGREE).map_err(|e| e.to_string())?);
    ensure(ks.same_coefficients(&gd), || {
        format!("{name}: koszul_series {:?} vs graded_dim {:?}", ks.coefficients, gd.coefficients)
    })?;
    if let Some(w) = mono {
        let counts = monomial::avoid_counts(w, p.generators(), DEGREE).unwrap();
        let ac = SeriesExpansion::from_counts(&counts, hilbert::Provenance::AvoidCount);
        ensure(ac.same_coefficients(&gd), || format!("{name}: avoid_count {counts:?}"))?;
    }
    let head: Vec<BigInt> = ints(expected);
    ensure(gd.coefficients[..expected.len()] == head[..], || {
        format!("{name}: got {:?}, expected prefix {expected:?}", gd.coefficients)
    })
}

fn hilbert_triangle() -> Outcome {
    let symplectic = Presentation::single(2, pbw::symplectic_relation::<Q>(2).unwrap()).unwrap();
    let natural: Vec<i64> = (1..=(DEGREE as i64 + 1)).collect();
    triangle_case("symplectic", &symplectic, None, &natural)?;

    let ant = Presentation::single(3, classification::antisymmetriser::<Q>(3, &[0, 1, 2]).unwrap()).unwrap();
    let mut rec = vec![1i64, 3, 9];
    for i in 3..=DEGREE {
        rec.push(3 * rec[i - 1] - rec[i - 3]);
    }
    ensure(rec[..6] == [1, 3, 9, 26, 75, 216], || format!("recursion {rec:?}"))?;
    triangle_case("Ant(3)", &ant, None, &rec)?;

    let x00 = word(&[0, 0]);
    let fib = [1, 2, 3, 5, 8, 13];
    triangle_case("x0x0", &Presentation::monomial(2, 2, std::slice::from_ref(&x00)).unwrap(), Some(&x00), &fib)?;

    let x000 = word(&[0, 0, 0]);
    triangle_case("x0x0x0", &Presentation::monomial(2, 3, std::slice::from_ref(&x000)).unwrap(), Some(&x000), &[1, 2, 4, 7, 13])?;
    Ok(format!("4 algebras agree on all routes to degree {DEGREE}"))
}

fn quadratic_table() -> Outcome {
    // (relation, koszul, gldim, AS-Gorenstein, Calabi-Yau)
    let table = [
        ("x0x1-x1x0", tensor(2, &[(&[0, 1], 1), (&[1, 0], -1)]), GlobalDimension::Two, true, true),
        ("x0x0", tensor(2, &[(&[0, 0], 1)]), GlobalDimension::Infinite, false, false),
        ("x0x1", tensor(2, &[(&[0, 1], 1)]), GlobalDimension::Two, false, false),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x7ab1e);
    for (name, f, gldim, asg, cy) in table {
        let base = classification::classify_quadratic(&Presentation::single(2, f.clone()).unwrap()).unwrap();
        let want = (true, gldim, asg, cy);
        let got = (base.koszul, base.global_dimension, base.as_gorenstein, base.calabi_yau);
        ensure(got == want, || format!("{name}: {got:?}, expected {want:?}"))?;
        let w = koszul::global_dimension(&Presentation::single(2, f.clone()).unwrap(), 6).unwrap();
        ensure(w == gldim, || format!("{name}: W-space global dimension {w:?}"))?;
        let m = classification::coefficient_matrix(&f).unwrap();
        for k in 0..20 {
            let change = sample::invertible_matrix(&mut rng, 2);
            let g = tensor_from_matrix(&congruent(&m, &change).unwrap()).unwrap();
            let prof = classification::classify_quadratic(&Presentation::single(2, g).unwrap()).unwrap();
            let flags = (prof.koszul, prof.global_dimension, prof.as_gorenstein, prof.calabi_yau);
            ensure(flags == want, || format!("{name}, change {k}: {flags:?}"))?;
        }
    }
    Ok("3 relations match the table; flags stable under 60 congruences".into())
}

fn pbw_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xb0b);
    let mut pbw_count = 0;
    let mut total = 0;
    for n in 1..=3 {
        for big_n in 2..=4 {
            let f = Tensor::word(n, &Word::power(0, big_n)).unwrap();
            let p = Presentation::single(n, f).unwrap();
            for k in 0..20 {
                let phi = sample::phi(&mut rng, n, big_n, 0).unwrap();
                let a = pbw::pbw_check(&p, &phi).map_err(|e| e.to_string())?.is_pbw;
                let b = pbw::pbw_power_closed_form(&p, &phi).map_err(|e| e.to_string())?;
                ensure(a == b, || format!("n = {n}, N = {big_n}, phi {k}: check {a}, closed form {b}"))?;
                pbw_count += a as usize;
                total += 1;
            }
        }
    }

    let sp = Presentation::single(2, pbw::symplectic_relation::<Q>(2).unwrap()).unwrap();
    ensure(sp.w_space(3).unwrap().is_zero(), || "W_3 of the symplectic algebra is nonzero".into())?;
    for k in 0..20 {
        let phi = sample::phi(&mut rng, 2, 2, (k % 2) as u8).unwrap();
        ensure(pbw::pbw_check(&sp, &phi).unwrap().is_pbw, || format!("symplectic phi {k} not PBW"))?;
    }

    for n in [2, 4] {
        for v_zero in [true, false] {
            for lambda in [0, 1] {
                let v = if v_zero {
                    Tensor::zero(n, 1)
                } else {
                    Tensor::word(n, &word(&[0])).unwrap()
                };
                let d = pbw::classify_symplectic_deformation(n, &v, &q(lambda)).unwrap();
                ensure(d.calabi_yau == v_zero && d.koszul_filtered, || {
                    format!("n = {n}, v = {v}, lambda = {lambda}: {d:?}")
                })?;
                let phi: PhiMap<Q> = pbw::symplectic_phi(n, &v, &q(lambda)).unwrap();
                ensure(pbw::pbw_check(&Presentation::single(n, pbw::symplectic_relation(n).unwrap()).unwrap(), &phi).unwrap().is_pbw, || {
                    format!("n = {n}, v = {v}, lambda = {lambda}: deformation not PBW")
                })?;
            }
        }
    }
    Ok(format!(
        "{total} power deformations agree ({pbw_count} PBW); 20 symplectic phi PBW; CY grid of 8 correct"
    ))
}

fn gk_dimension() -> Outcome {
    let numeric = GkMode::Numeric {
        tolerance: hilbert::DEFAULT_GK_TOLERANCE,
    };
    let mut pairs = 0;
    for n in 1..=6 {
        for big_n in 2..=6 {
            let c = hilbert::gk_dimension(n, big_n, GkMode::ClosedForm).unwrap();
            let m = hilbert::gk_dimension(n, big_n, numeric).unwrap();
            ensure(c == m, || format!("(n, N) = ({n}, {big_n}): closed {c}, numeric {m}"))?;
            pairs += 1;
        }
    }
    let spot = [
        ((2, 2), GkDimension::Finite(2)),
        ((3, 2), GkDimension::Infinite),
        ((2, 3), GkDimension::Infinite),
    ];
    for ((n, big_n), want) in spot {
        let got = hilbert::gk_dimension(n, big_n, numeric).unwrap();
        ensure(got == want, || format!("({n}, {big_n}): {got}, expected {want}"))?;
    }
    for big_n in 2..=6 {
        let got = hilbert::gk_dimension(1, big_n, numeric).unwrap();
        ensure(got == GkDimension::Finite(0), || format!("(1, {big_n}): {got}"))?;
    }
    Ok(format!("{pairs} pairs agree; spot values correct"))
}

fn free_product_instance() -> Outcome {
    let sp = Presentation::single(2, pbw::symplectic_relation::<Q>(2).unwrap()).unwrap();
    let free = Presentation::<Q>::new(1, 2, vec![]).unwrap();
    let fp = free_product(&sp, &free).unwrap();
    ensure(koszul::criterion_check(&fp).unwrap().is_koszul, || "criterion_check fails".into())?;
    let rep = gerasimov_suite(&fp, 5, DEFAULT_LATTICE_CAP, Exec::Parallel).unwrap();
    ensure(rep.all_pass() && rep.entries.last().map(|e| e.m) == Some(5), || {
        format!("gerasimov_suite: {} violation(s)", rep.violations())
    })?;
    let target = hilbert::series_inverse(&ints(&[1, -3, 1]), 6).unwrap();
    let dims = SeriesExpansion::from_dims(&fp.graded_dims(6).unwrap());
    ensure(dims.coefficients == target, || format!("graded dims {:?} vs {target:?}", dims.coefficients))?;
    let ks = hilbert::koszul_series(&fp, 6).unwrap();
    ensure(ks.coefficients == target, || format!("koszul series {:?}", ks.coefficients))?;
    Ok(format!("Koszul, distributive to m = 5, series {:?}", dims.to_i64().unwrap()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 distributivity of random single relations", gerasimov),
        ("2 criterion forms vs Koszul homology", criterion_vs_homology),
        ("3 quadratic universality", quadratic_universality),
        ("4 monomial criterion exactness", monomial_exactness),
        ("5 Hilbert series triangle", hilbert_triangle),
        ("6 quadratic classification table", quadratic_table),
        ("7 PBW agreement", pbw_agreement),
        ("8 GK dimension", gk_dimension),
        ("9 free product", free_product_instance),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {name}: PASS ({detail}) [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("criterion {name}: FAIL ({detail}) [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criterion/criteria failed");
        std::process::exit(1);
    }
}
