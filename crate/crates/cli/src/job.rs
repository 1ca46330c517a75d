use std::path::PathBuf;
use std::time::Instant;

use nkoszul::classification::{self, is_antisymmetric};
use nkoszul::distributivity::{self, Distributivity};
use nkoszul::hilbert::{self, GkDimension, GkMode, RationalSeries, SeriesExpansion};
use nkoszul::koszul::{self, GlobalDimension, KoszulVerdict};
use nkoszul::monomial::{self, MonomialSet};
use nkoszul::pbw::{self, PhiMap};
use nkoszul::presentation::free_product;
use nkoszul::{sample, Exec, Presentation, Tensor, Q};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input::{parse_presentation, to_document, Parsed};
use crate::report::{Report, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    File(PathBuf),
    Inline(String),
    /// A random single relation drawn from the job seed.
    Random { n: usize, big_n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    CheckKoszul { homology_degree: Option<usize> },
    Distributivity { m_max: Option<usize> },
    Hilbert { degree: usize },
    Classify,
    Monomial,
    Census { n: usize, big_n: usize, size: usize, cap: u128 },
    Pbw,
    FreeProduct { other: Source, degree: usize },
    ReportAll { m_max: Option<usize>, degree: usize },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::CheckKoszul { .. } => "check-koszul",
            Command::Distributivity { .. } => "distributivity",
            Command::Hilbert { .. } => "hilbert",
            Command::Classify => "classify",
            Command::Monomial => "monomial",
            Command::Census { .. } => "census",
            Command::Pbw => "pbw",
            Command::FreeProduct { .. } => "free-product",
            Command::ReportAll { .. } => "report-all",
        }
    }

    fn needs_input(&self) -> bool {
        !matches!(self, Command::Census { .. })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Limits {
    pub max_degree: Option<usize>,
    pub probe_limit: usize,
    pub lattice_cap: usize,
    /// Tolerance on root moduli for the numeric GK dimension.
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: None,
            probe_limit: koszul::DEFAULT_PROBE_LIMIT,
            lattice_cap: distributivity::DEFAULT_LATTICE_CAP,
            tolerance: hilbert::DEFAULT_GK_TOLERANCE,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct JobSpec {
    pub command: Command,
    pub source: Option<Source>,
    pub limits: Limits,
    pub format: Format,
    /// Echoed into the report.
    pub echo: String,
}

impl JobSpec {
    pub fn new(command: Command, source: Option<Source>) -> Self {
        let echo = command.name().to_string();
        JobSpec {
            command,
            source,
            limits: Limits::default(),
            format: Format::default(),
            echo,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let l = &self.limits;
        if l.max_degree == Some(0) || l.probe_limit == 0 || l.lattice_cap == 0 {
            return Err(CliError::Job("limits must be positive".into()));
        }
        if !(l.tolerance > 0.0 && l.tolerance < 1.0) {
            return Err(CliError::Job(format!("tolerance must lie in (0, 1), got {}", l.tolerance)));
        }
        match &self.command {
            Command::Hilbert { degree } | Command::FreeProduct { degree, .. } | Command::ReportAll { degree, .. }
                if *degree == 0 =>
            {
                return Err(CliError::Job("series degree must be positive".into()));
            }
            Command::Census { n, big_n, size, cap } if *n == 0 || *big_n < 2 || *size == 0 || *cap == 0 => {
                return Err(CliError::Job("census needs n >= 1, N >= 2, a positive set size and cap".into()));
            }
            _ => {}
        }
        if self.command.needs_input() && self.source.is_none() {
            return Err(CliError::Job(format!("`{}` needs an input presentation", self.command.name())));
        }
        Ok(())
    }
}

const EXEC: Exec = Exec::Parallel;

/// Runs one job. Mathematical outcomes, positive or negative, are verdicts
/// in the report; only input and resource failures are errors.
pub fn run(job: &JobSpec) -> Result<Report, CliError> {
    job.validate()?;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(job.limits.seed);
    let parsed = match &job.source {
        Some(s) => Some(load(s, job, &mut rng)?),
        None => None,
    };
    let mut verdicts = Vec::new();
    let mut shown = parsed.clone();
    let l = &job.limits;
    match &job.command {
        Command::CheckKoszul { homology_degree } => {
            let p = &parsed.as_ref().expect("validated").presentation;
            check_koszul(p, l, &mut verdicts)?;
            if let Some(d) = homology_degree {
                homology(p, *d, &mut verdicts)?;
            }
        }
        Command::Distributivity { m_max } => {
            let p = &parsed.as_ref().expect("validated").presentation;
            distributive(p, *m_max, l, &mut verdicts)?;
        }
        Command::Hilbert { degree } => {
            let p = &parsed.as_ref().expect("validated").presentation;
            series(p, *degree, l, &mut verdicts)?;
        }
        Command::Classify => {
            let p = &parsed.as_ref().expect("validated").presentation;
            classify(p, l, &mut rng, &mut verdicts)?;
        }
        Command::Monomial => {
            let p = &parsed.as_ref().expect("validated").presentation;
            monomial_report(p, &mut verdicts)?;
        }
        Command::Census { n, big_n, size, cap } => {
            let count = monomial::koszul_census(*n, *big_n, *size, *cap, EXEC)?;
            verdicts.push(Verdict::new(
                "monomial",
                "overlap-criterion",
                "koszul_sets",
                json!({"n": n, "N": big_n, "size": size, "count": count.to_string()}),
            ));
        }
        Command::Pbw => {
            let parsed = parsed.as_ref().expect("validated");
            let phi = parsed
                .phi
                .as_ref()
                .ok_or_else(|| CliError::Job("`pbw` needs a document with a `phi` entry".into()))?;
            pbw_report(&parsed.presentation, phi, &mut verdicts)?;
        }
        Command::FreeProduct { other, degree } => {
            let p = &parsed.as_ref().expect("validated").presentation;
            let q = load(other, job, &mut rng)?.presentation;
            let fp = free_product(p, &q)?;
            let fp = match l.max_degree {
                Some(d) => fp.with_degree_cap(d),
                None => fp,
            };
            verdicts.push(Verdict::new(
                "presentation",
                "free-product",
                "generators",
                fp.generators(),
            ));
            check_koszul(&fp, l, &mut verdicts)?;
            series(&fp, *degree, l, &mut verdicts)?;
            shown = Some(Parsed {
                presentation: fp,
                phi: None,
            });
        }
        Command::ReportAll { m_max, degree } => {
            let parsed = parsed.as_ref().expect("validated");
            let p = &parsed.presentation;
            check_koszul(p, l, &mut verdicts)?;
            distributive(p, *m_max, l, &mut verdicts)?;
            series(p, *degree, l, &mut verdicts)?;
            classify(p, l, &mut rng, &mut verdicts)?;
            if p.monomial_words().is_some() {
                monomial_report(p, &mut verdicts)?;
            }
            if let Some(phi) = &parsed.phi {
                pbw_report(p, phi, &mut verdicts)?;
            }
        }
    }
    Ok(Report {
        command: job.echo.clone(),
        presentation: shown.map(|s| to_document(&s.presentation, s.phi.as_ref())),
        verdicts,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn load(source: &Source, job: &JobSpec, rng: &mut ChaCha8Rng) -> Result<Parsed, CliError> {
    let parsed = match source {
        Source::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            parse_presentation(&text)?
        }
        Source::Inline(text) => parse_presentation(text)?,
        Source::Random { n, big_n } => {
            if *n == 0 || *n > 256 || *big_n < 2 {
                return Err(CliError::Job(format!("cannot draw a random relation with n = {n}, N = {big_n}")));
            }
            let f = sample::relation(rng, *n, *big_n, 0.6)?;
            Parsed {
                presentation: Presentation::single(*n, f)?,
                phi: None,
            }
        }
    };
    Ok(match job.limits.max_degree {
        Some(d) => Parsed {
            presentation: parsed.presentation.with_degree_cap(d),
            phi: parsed.phi,
        },
        None => parsed,
    })
}

fn gldim_value(g: GlobalDimension) -> Value {
    match g {
        GlobalDimension::Two => json!(2),
        GlobalDimension::Infinite => json!("infinite"),
        GlobalDimension::AtLeast(k) => json!(format!(">= {k}")),
    }
}

fn witness_of(v: &KoszulVerdict<Q>) -> Option<String> {
    v.witness
        .as_ref()
        .map(|w| format!("m = {}: {w}", v.failing_m.expect("failure has an m")))
}

fn check_koszul(p: &Presentation<Q>, l: &Limits, out: &mut Vec<Verdict>) -> Result<(), CliError> {
    if p.single_relation().is_some() {
        let v = koszul::criterion_check(p)?;
        out.push(
            Verdict::new("koszul", "overlap-inclusion", "is_koszul", v.is_koszul).with_witness(witness_of(&v)),
        );
        let e = koszul::criterion_check_equalform(p)?;
        out.push(
            Verdict::new("koszul", "overlap-equality", "is_koszul_equalform", e.is_koszul)
                .with_witness(witness_of(&e)),
        );
        if v.is_koszul {
            let g = koszul::global_dimension(p, l.probe_limit)?;
            out.push(Verdict::new("koszul", "w-space-resolution", "global_dimension", gldim_value(g)));
        }
    } else if let Some(words) = p.monomial_words() {
        let set = MonomialSet::new(p.generators(), p.relation_degree(), words)?;
        let v = monomial::is_koszul_set(&set);
        let witness = v
            .counterexample
            .as_ref()
            .map(|w| format!("m = {}: {w}", v.failing_m.expect("failure has an m")));
        out.push(Verdict::new("monomial", "overlap-enumeration", "is_koszul", v.is_koszul).with_witness(witness));
    } else {
        return Err(CliError::Analysis(nkoszul::Error::Precondition(
            "Koszulity is decided for a single relation or for monomial relations only".into(),
        )));
    }
    Ok(())
}

fn homology(p: &Presentation<Q>, max_degree: usize, out: &mut Vec<Verdict>) -> Result<(), CliError> {
    let max_i = 2 * max_degree / p.relation_degree().max(1) + 1;
    let h = koszul::homology_oracle(p, max_i, max_degree, EXEC)?;
    let nonzero: Vec<Value> = h
        .nonzero_from(1)
        .into_iter()
        .map(|((i, d), dim)| json!({"i": i, "degree": d, "dim": dim}))
        .collect();
    out.push(Verdict::new(
        "koszul",
        "complex-homology",
        "exact_in_window",
        h.is_exact_in_window(),
    ));
    out.push(Verdict::new("koszul", "complex-homology", "nonzero_homology", nonzero));
    Ok(())
}

fn distributive(p: &Presentation<Q>, m_max: Option<usize>, l: &Limits, out: &mut Vec<Verdict>) -> Result<(), CliError> {
    let m_max = m_max.unwrap_or(p.relation_degree() + 2);
    let rep = distributivity::gerasimov_suite(p, m_max, l.lattice_cap, EXEC)?;
    let entries: Vec<Value> = rep
        .entries
        .iter()
        .map(|e| json!({"m": e.m, "lattice_size": e.lattice_size, "distributive": e.verdict.is_distributive()}))
        .collect();
    let witness = rep.entries.iter().find_map(|e| match e.verdict {
        Distributivity::Violating(a, b, c) => Some(format!("m = {}: elements ({a}, {b}, {c})", e.m)),
        Distributivity::Distributive => None,
    });
    out.push(
        Verdict::new("distributivity", "sublattice-distributivity", "distributive_up_to_m", rep.all_pass())
            .with_witness(witness),
    );
    out.push(Verdict::new("distributivity", "sublattice-distributivity", "m_max", m_max));
    out.push(Verdict::new("distributivity", "sublattice-distributivity", "lattices", entries));
    Ok(())
}

fn coefficients(s: &SeriesExpansion) -> Value {
    Value::Array(s.coefficients.iter().map(|c| Value::String(c.to_string())).collect())
}

fn gk_value(g: GkDimension) -> Value {
    match g {
        GkDimension::Finite(d) => json!(d),
        GkDimension::Infinite => json!("infinite"),
    }
}

fn series(p: &Presentation<Q>, degree: usize, l: &Limits, out: &mut Vec<Verdict>) -> Result<(), CliError> {
    let dims = p.graded_dims(degree)?;
    out.push(Verdict::new(
        "hilbert",
        "quotient-dimensions",
        "graded_dims",
        coefficients(&SeriesExpansion::from_dims(&dims)),
    ));
    let koszul_route = match hilbert::koszul_series(p, degree) {
        Ok(s) => coefficients(&s),
        Err(e @ nkoszul::Error::Resource { .. }) => return Err(e.into()),
        Err(e) => Value::String(format!("not applicable: {e}")),
    };
    out.push(Verdict::new("hilbert", "euler-poincare", "koszul_series", koszul_route));
    let Some(f) = p.single_relation() else {
        return Ok(());
    };
    let (n, big_n) = (p.generators(), p.relation_degree());
    let family: Option<RationalSeries> = if let Some(letter_word) = monomial_word(f) {
        let counts = monomial::avoid_counts(&letter_word, n, degree)?;
        out.push(Verdict::new(
            "monomial",
            "avoid-count",
            "avoid_counts",
            counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        ));
        if monomial::is_koszul_single(&letter_word) {
            Some(monomial::monomial_profile(&letter_word, n)?.hilbert_series())
        } else {
            None
        }
    } else if koszul::criterion_check(p)?.is_koszul {
        match koszul::global_dimension(p, l.probe_limit)? {
            GlobalDimension::Two => Some(hilbert::gk_family_series(n, big_n)?),
            GlobalDimension::Infinite => Some(hilbert::infinite_gldim_denominator(n, big_n).reciprocal()?),
            GlobalDimension::AtLeast(_) => None,
        }
    } else {
        None
    };
    if let Some(h) = family {
        out.push(Verdict::new("hilbert", "rational-form", "hilbert_series", h.reduced().to_string()));
        let numeric = hilbert::gk_dimension_of(&h, GkMode::Numeric { tolerance: l.tolerance })?;
        out.push(Verdict::new("hilbert", "gk-numeric", "gk_dimension", gk_value(numeric)));
        if let Ok(closed) = hilbert::gk_dimension_of(&h, GkMode::ClosedForm) {
            out.push(Verdict::new("hilbert", "gk-closed-form", "gk_dimension_closed_form", gk_value(closed)));
        }
    }
    Ok(())
}

fn monomial_word(f: &Tensor<Q>) -> Option<nkoszul::Word> {
    (f.len() == 1).then(|| f.leading().expect("nonzero").0)
}

fn classify(
    p: &Presentation<Q>,
    l: &Limits,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Verdict>,
) -> Result<(), CliError> {
    let Some(f) = p.single_relation() else {
        return Err(CliError::Analysis(nkoszul::Error::Precondition(
            "classification needs a single relation".into(),
        )));
    };
    let (n, big_n) = (p.generators(), p.relation_degree());
    const M: &str = "classification";
    if big_n == 2 {
        let q = classification::classify_quadratic(p)?;
        let c = "coefficient-matrix";
        out.push(Verdict::new(M, c, "rank", q.rank));
        out.push(Verdict::new(M, c, "symmetric", q.symmetric));
        out.push(Verdict::new(M, c, "antisymmetric", q.antisymmetric));
        out.push(Verdict::new(M, c, "nondegenerate", q.nondegenerate));
        out.push(Verdict::new(M, c, "rank_one", q.p1));
        out.push(Verdict::new(M, c, "square", q.p2));
        out.push(Verdict::new(M, c, "koszul", q.koszul));
        out.push(Verdict::new(M, c, "global_dimension", gldim_value(q.global_dimension)));
        out.push(Verdict::new(M, c, "as_gorenstein", q.as_gorenstein));
        out.push(Verdict::new(M, c, "calabi_yau", q.calabi_yau));
        if q.rank >= 2 {
            let v = sample::vector(rng, n)?;
            let d_max = p.degree_cap().saturating_sub(1).min(4);
            let regular = classification::zerodivisor_probe(p, &v, d_max, EXEC)?;
            out.push(
                Verdict::new(M, "multiplication-injectivity", "random_element_regular", regular)
                    .with_witness(Some(format!("v = {v}, degrees <= {d_max}"))),
            );
        }
    } else if is_antisymmetric(f) && big_n <= n {
        let a = classification::classify_antisymmetric(p)?;
        let c = "antisymmetriser";
        out.push(Verdict::new(M, c, "koszul", a.koszul));
        out.push(Verdict::new(M, c, "global_dimension", gldim_value(a.global_dimension)));
        out.push(Verdict::new(M, c, "as_gorenstein", a.as_gorenstein));
        out.push(Verdict::new(M, c, "calabi_yau", a.calabi_yau));
        let vanishing: Vec<Value> = a
            .overlap_vanishing
            .iter()
            .map(|(m, z)| json!({"m": m, "zero": z}))
            .collect();
        out.push(Verdict::new(M, c, "overlap_vanishing", vanishing));
    } else if let Some(w) = monomial_word(f).filter(monomial::is_koszul_single) {
        let prof = monomial::monomial_profile(&w, n)?;
        let c = "monomial-profile";
        out.push(Verdict::new(M, c, "koszul", prof.koszul));
        out.push(Verdict::new(M, c, "global_dimension", gldim_value(prof.global_dimension)));
        out.push(Verdict::new(M, c, "as_gorenstein", prof.as_gorenstein));
        out.push(Verdict::new(M, c, "gk_dimension", gk_value(prof.gk_dimension)));
    } else {
        let v = koszul::criterion_check(p)?;
        out.push(Verdict::new(M, "overlap-inclusion", "koszul", v.is_koszul));
        if v.is_koszul {
            let g = koszul::global_dimension(p, l.probe_limit)?;
            out.push(Verdict::new(M, "w-space-resolution", "global_dimension", gldim_value(g)));
        }
    }
    Ok(())
}

fn monomial_report(p: &Presentation<Q>, out: &mut Vec<Verdict>) -> Result<(), CliError> {
    let words = p.monomial_words().ok_or_else(|| {
        CliError::Analysis(nkoszul::Error::Precondition("relations are not all monomials".into()))
    })?;
    let set = MonomialSet::new(p.generators(), p.relation_degree(), words.clone())?;
    let v = monomial::is_koszul_set(&set);
    let witness = v
        .counterexample
        .as_ref()
        .map(|w| format!("m = {}: {w}", v.failing_m.expect("failure has an m")));
    out.push(Verdict::new("monomial", "overlap-enumeration", "is_koszul_set", v.is_koszul).with_witness(witness));
    if let [w] = words.as_slice() {
        let single = monomial::is_koszul_single(w);
        out.push(Verdict::new("monomial", "border-criterion", "is_koszul_single", single));
        if !single {
            return Ok(());
        }
        let prof = monomial::monomial_profile(w, p.generators())?;
        out.push(Verdict::new(
            "monomial",
            "monomial-profile",
            "hilbert_denominator",
            prof.hilbert_denominator.to_string(),
        ));
        out.push(Verdict::new("monomial", "monomial-profile", "global_dimension", gldim_value(prof.global_dimension)));
        out.push(Verdict::new("monomial", "monomial-profile", "gk_dimension", gk_value(prof.gk_dimension)));
    }
    Ok(())
}

fn pbw_report(p: &Presentation<Q>, phi: &PhiMap<Q>, out: &mut Vec<Verdict>) -> Result<(), CliError> {
    let v = pbw::pbw_check(p, phi)?;
    let witness = v.witness.as_ref().map(|w| {
        format!(
            "{}: w = {}, offending = {}",
            v.failed_condition.expect("failure has a condition"),
            w.w,
            w.offending
        )
    });
    out.push(Verdict::new("pbw", "jacobi-conditions", "is_pbw", v.is_pbw).with_witness(witness));
    if p.single_relation().is_some_and(koszul::is_pure_power) {
        let closed = pbw::pbw_power_closed_form(p, phi)?;
        out.push(Verdict::new("pbw", "power-closed-form", "is_pbw_closed_form", closed));
    }
    Ok(())
}
