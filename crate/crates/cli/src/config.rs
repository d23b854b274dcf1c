use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qkoszul::{parse_scalar, Algebra, AlgebraSpec, Scalar};

#[derive(Parser, Debug)]
#[command(name = "qkoszul", version, about = "Hochschild cohomology of the q-deformed Koszul algebras Λ_q")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Per-degree table of dim Hom(P^n, Λ), ker d^n, im d^{n-1} and HH^n.
    Compute(RunArgs),
    /// Run verification checks and report pass/fail for each.
    Verify(RunArgs),
    /// Total dimension of HH^* over a range of m for q = (ζ, 1, …, 1).
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Check {
    Complex,
    Exactness,
    Recursions,
    HomDims,
    Cohomology,
    Ring,
    Oracle,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Recursions,
        Check::Complex,
        Check::Exactness,
        Check::HomDims,
        Check::Cohomology,
        Check::Ring,
        Check::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Complex => "complex",
            Check::Exactness => "exactness",
            Check::Recursions => "recursions",
            Check::HomDims => "hom-dims",
            Check::Cohomology => "cohomology",
            Check::Ring => "ring",
            Check::Oracle => "oracle",
        }
    }

    /// Whether the check compares against statements that need ζ generic.
    pub fn needs_generic(self) -> bool {
        matches!(self, Check::Cohomology | Check::Ring)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Number of vertices.
    #[arg(long)]
    pub m: usize,
    /// Parameters q_0,…,q_{m-1} as integers or a/b.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_scalar)]
    pub q: Vec<Scalar>,
    /// Highest degree to compute [default: 2m+6].
    #[arg(long)]
    pub max_degree: Option<usize>,
    /// Checks to run [default: all].
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<Check>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Run at a root of unity; theorem comparisons are then skipped.
    #[arg(long)]
    pub allow_non_generic: bool,
    /// Compute degrees and checks in parallel.
    #[arg(long)]
    pub parallel: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Override the expected dim HH^n, as n=d. Repeatable.
    #[arg(long = "expect-hh", value_parser = parse_expectation)]
    pub expect_hh: Vec<(usize, usize)>,
}

#[derive(Args, Debug, Clone)]
pub struct SweepArgs {
    /// Range of m, either a single value or lo..hi (inclusive).
    #[arg(long, value_parser = parse_range)]
    pub m: (usize, usize),
    /// Values of ζ.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_scalar)]
    pub zeta: Vec<Scalar>,
    /// Highest degree for each run [default: 2m+6].
    #[arg(long)]
    pub max_degree: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long)]
    pub parallel: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn parse_expectation(s: &str) -> Result<(usize, usize), String> {
    let (n, d) = s.split_once('=').ok_or_else(|| format!("expected n=d, got {s:?}"))?;
    let n = n.trim().parse().map_err(|_| format!("invalid degree in {s:?}"))?;
    let d = d.trim().parse().map_err(|_| format!("invalid dimension in {s:?}"))?;
    Ok((n, d))
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid range {s:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
        None => (parse(s)?, parse(s)?),
    };
    if lo == 0 || lo > hi {
        return Err(format!("invalid range {s:?}: need 1 <= lo <= hi"));
    }
    Ok((lo, hi))
}

/// A validated configuration for `compute` and `verify`.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub algebra: Algebra,
    pub max_degree: usize,
    pub checks: Vec<Check>,
    pub format: Format,
    pub allow_non_generic: bool,
    pub parallel: bool,
    pub expected_hh: BTreeMap<usize, usize>,
}

impl RunConfig {
    pub fn from_args(args: &RunArgs) -> anyhow::Result<Self> {
        if args.m == 0 {
            anyhow::bail!("m must be at least 1");
        }
        if args.q.len() != args.m {
            anyhow::bail!("expected {} values of q, got {}", args.m, args.q.len());
        }
        let algebra = Algebra::new(AlgebraSpec::new(args.q.clone()))?;
        let mut checks = if args.checks.is_empty() {
            Check::ALL.to_vec()
        } else {
            args.checks.clone()
        };
        checks.dedup();
        Ok(RunConfig {
            max_degree: args.max_degree.unwrap_or(2 * args.m + 6),
            algebra,
            checks,
            format: args.format,
            allow_non_generic: args.allow_non_generic,
            parallel: args.parallel,
            expected_hh: args.expect_hh.iter().copied().collect(),
        })
    }

    /// Convenience constructor with defaults for everything but `q`.
    pub fn new(q: &[i64]) -> anyhow::Result<Self> {
        let algebra = Algebra::from_integers(q)?;
        Ok(RunConfig {
            max_degree: 2 * q.len() + 6,
            algebra,
            checks: Check::ALL.to_vec(),
            format: Format::Table,
            allow_non_generic: false,
            parallel: false,
            expected_hh: BTreeMap::new(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3"), Ok((3, 3)));
        assert_eq!(parse_range("1..5"), Ok((1, 5)));
        assert_eq!(parse_range("2..=4"), Ok((2, 4)));
        assert!(parse_range("0..2").is_err());
        assert!(parse_range("5..1").is_err());
    }

    #[test]
    fn expectations() {
        assert_eq!(parse_expectation("2=5"), Ok((2, 5)));
        assert!(parse_expectation("2").is_err());
    }

    #[test]
    fn defaults() {
        let cli = Cli::try_parse_from(["qkoszul", "verify", "--m", "2", "--q", "-3,1/2"]).unwrap();
        let Command::Verify(args) = cli.command else { panic!() };
        let cfg = RunConfig::from_args(&args).unwrap();
        assert_eq!(cfg.max_degree, 10);
        assert_eq!(cfg.checks, Check::ALL.to_vec());
        assert_eq!(cfg.format, Format::Table);
        assert_eq!(cfg.algebra.zeta().to_string(), "-3/2");
    }
}
