//! Command-line grammar, mapped onto [`JobSpec`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::job::{Command, Format, JobSpec, Limits, Source};

#[derive(Debug, Parser)]
#[command(name = "nkoszul", version, about = "Koszulity, distributivity, Hilbert series and PBW checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,

    /// Highest tensor degree any analysis may touch.
    #[arg(long, global = true)]
    pub max_degree: Option<usize>,

    /// Homological steps probed when the global dimension is not settled early.
    #[arg(long, global = true, default_value_t = nkoszul::koszul::DEFAULT_PROBE_LIMIT)]
    pub probe_limit: usize,

    /// Largest lattice the distributivity check may generate.
    #[arg(long, global = true, default_value_t = nkoszul::distributivity::DEFAULT_LATTICE_CAP)]
    pub lattice_cap: usize,

    /// Seed for random relations and random probe vectors.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,

    /// Tolerance on root moduli for the numeric GK dimension.
    #[arg(long, global = true, default_value_t = nkoszul::hilbert::DEFAULT_GK_TOLERANCE)]
    pub tolerance: f64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Presentation document.
    pub input: Option<PathBuf>,

    /// The document itself instead of a path.
    #[arg(long, conflicts_with_all = ["input", "random"])]
    pub inline: Option<String>,

    /// A random single relation `n,N` drawn from `--seed`.
    #[arg(long, value_parser = parse_pair, conflicts_with = "input")]
    pub random: Option<(usize, usize)>,
}

impl InputArgs {
    fn source(self) -> Option<Source> {
        if let Some(p) = self.input {
            Some(Source::File(p))
        } else if let Some(t) = self.inline {
            Some(Source::Inline(t))
        } else {
            self.random.map(|(n, big_n)| Source::Random { n, big_n })
        }
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected `n,N`")?;
    let a = a.trim().parse().map_err(|_| format!("bad n in `{s}`"))?;
    let b = b.trim().parse().map_err(|_| format!("bad N in `{s}`"))?;
    Ok((a, b))
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Koszulity by the overlap criterion, and the global dimension.
    CheckKoszul {
        #[command(flatten)]
        input: InputArgs,
        /// Also compute Koszul complex homology up to this internal degree.
        #[arg(long)]
        homology: Option<usize>,
    },
    /// Distributivity of the lattices generated by the shifted relation spaces.
    Distributivity {
        #[command(flatten)]
        input: InputArgs,
        /// Largest tensor degree checked; defaults to N + 2.
        #[arg(long)]
        m_max: Option<usize>,
    },
    /// Hilbert series coefficients by every applicable route.
    Hilbert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 8)]
        degree: usize,
    },
    /// Homological profile of a single relation.
    Classify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Overlap test and profile for monomial relations.
    Monomial {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Count the Koszul sets of `size` monomials of degree N in n letters.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        size: usize,
        /// Largest number of search nodes visited.
        #[arg(long, default_value_t = nkoszul::monomial::DEFAULT_CENSUS_CAP)]
        cap: u128,
    },
    /// PBW test for the deformation given by the document's `phi`.
    Pbw {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Free product of two presentations with the same relation degree.
    FreeProduct {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = 6)]
        degree: usize,
    },
    /// Every analysis that applies to the input.
    ReportAll {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long, default_value_t = 8)]
        degree: usize,
    },
}

impl Cli {
    /// `echo` is the command line as typed, minus the program name.
    pub fn into_job(self, echo: String) -> JobSpec {
        let (command, source) = match self.command {
            Sub::CheckKoszul { input, homology } => (
                Command::CheckKoszul {
                    homology_degree: homology,
                },
                input.source(),
            ),
            Sub::Distributivity { input, m_max } => (Command::Distributivity { m_max }, input.source()),
            Sub::Hilbert { input, degree } => (Command::Hilbert { degree }, input.source()),
            Sub::Classify { input } => (Command::Classify, input.source()),
            Sub::Monomial { input } => (Command::Monomial, input.source()),
            Sub::Census { n, big_n, size, cap } => (Command::Census { n, big_n, size, cap }, None),
            Sub::Pbw { input } => (Command::Pbw, input.source()),
            Sub::FreeProduct { first, second, degree } => (
                Command::FreeProduct {
                    other: Source::File(second),
                    degree,
                },
                Some(Source::File(first)),
            ),
            Sub::ReportAll { input, m_max, degree } => (Command::ReportAll { m_max, degree }, input.source()),
        };
        JobSpec {
            command,
            source,
            limits: Limits {
                max_degree: self.max_degree,
                probe_limit: self.probe_limit,
                lattice_cap: self.lattice_cap,
                tolerance: self.tolerance,
                seed: self.seed,
            },
            format: match self.format {
                FormatArg::Json => Format::Json,
                FormatArg::Text => Format::Text,
            },
            echo,
        }
    }
}
