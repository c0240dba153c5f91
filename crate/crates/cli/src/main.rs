//! `zfpoly`: zero forcing polynomials, forts and theorem checks from the
//! command line.
//!
//! Exit codes: 0 success, 1 theorem-suite failure, 2 bad input or
//! arguments, 3 size cap exceeded, 4 method does not apply to the graph.

mod source;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use zfpoly::analysis::{parse_suites, run_suites, SweepConfig};
use zfpoly::closed_forms::{poly_complete, poly_cycle, poly_multipartite, poly_path, poly_threshold, poly_wheel};
use zfpoly::forts::{enumerate_forts_with, min_cover_of, CoverCertificate, FortFamily};
use zfpoly::poly::{
    zf_polynomial_by_components_with, zf_polynomial_with, Enumeration, Strategy, ZfPolynomial, DEFAULT_ENUMERATION_CAP,
};
use zfpoly::Error;

use source::{Family, Source};

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub msg: String,
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError { code: 2, msg: msg.into() }
    }

    fn mismatch(msg: impl Into<String>) -> Self {
        CliError { code: 4, msg: msg.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooManyVertices { .. } | Error::EnumerationCap { .. } | Error::SearchCap { .. } => 3,
            Error::Divisibility(_) | Error::ZeroPolynomial => 1,
            _ => 2,
        };
        CliError { code, msg: e.to_string() }
    }
}

#[derive(Parser)]
#[command(name = "zfpoly", version, about = "Exact zero forcing polynomials of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the zero forcing polynomial
    Poly {
        #[command(flatten)]
        source: SourceArgs,
        /// Human-readable output instead of JSON
        #[arg(long)]
        pretty: bool,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
        /// Use the memoized subset table instead of one closure per subset
        #[arg(long)]
        memoized: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// List all forts, optionally with a minimum fort cover
    Forts {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        min_cover: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run a theorem-check suite
    Check {
        /// extremal, multiplicativity, hall, forts, ip, recognizability, closed-forms, conjectures or all
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Evaluate the polynomial at an exact rational
    Eval {
        #[command(flatten)]
        source: SourceArgs,
        /// Rational literal such as 2, -3/4 or 0.5
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Edge-list file: header "n m", then one "u v" per line
    #[arg(long, value_name = "FILE")]
    edge_list: Option<PathBuf>,
    /// graph6 string, or a file whose first line is one
    #[arg(long, value_name = "STRING|FILE")]
    graph6: Option<String>,
    /// NAME:ARGS, e.g. path:7, wheel:6, multipartite:2,3, threshold:11011, cycle-chord:6:0:2
    #[arg(long, value_name = "NAME:ARGS")]
    family: Option<String>,
}

impl SourceArgs {
    fn load(&self) -> Result<Source, CliError> {
        source::load(self.edge_list.as_deref(), self.graph6.as_deref(), self.family.as_deref())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Enumerate all subsets
    Brute,
    /// Closed form for the named family
    Closed,
    /// Enumerate each connected component and multiply
    Components,
}

fn enumeration_cap() -> Result<usize, CliError> {
    match std::env::var("ZFPOLY_MAX_N") {
        Ok(v) => v.trim().parse().map_err(|_| CliError::usage(format!("ZFPOLY_MAX_N={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_ENUMERATION_CAP),
    }
}

fn closed_form(source: &Source) -> Result<ZfPolynomial, CliError> {
    let Some(family) = source.family() else {
        return Err(CliError::mismatch("--method closed needs a --family source"));
    };
    let result = match family {
        Family::Path(n) => poly_path(*n),
        Family::Cycle(n) | Family::CycleChord(n, _, _) => poly_cycle(*n),
        Family::Complete(n) | Family::Wheel(n @ 4) => poly_complete(*n),
        Family::Wheel(n) => poly_wheel(*n),
        Family::Multipartite(parts) => poly_multipartite(parts),
        Family::Threshold(s) => poly_threshold(s),
        Family::SubdividedK4 => poly_wheel(5),
        Family::Empty(_) | Family::Star(_) => {
            return Err(CliError::mismatch("no closed form for this family"));
        }
    };
    result.map_err(|e| match e {
        Error::Divisibility(_) => e.into(),
        other => CliError::mismatch(format!("closed form does not apply: {other}")),
    })
}

fn compute(source: &Source, method: Method, opts: &Enumeration) -> Result<ZfPolynomial, CliError> {
    Ok(match method {
        Method::Brute => zf_polynomial_with(source.graph(), opts)?,
        Method::Components => zf_polynomial_by_components_with(source.graph(), opts)?,
        Method::Closed => closed_form(source)?,
    })
}

/// Integers, fractions `p/q` and decimals `a.b`, all read exactly.
fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::usage(format!("{s:?} is not a rational literal"));
    let s = s.trim();
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let digits = format!("{}{frac}", int.trim_start_matches(['-', '+']));
        let mantissa = BigInt::from_str(&digits).map_err(|_| bad())?;
        let value = BigRational::new(mantissa, BigInt::from(10u32).pow(frac.len() as u32));
        return Ok(if negative { -value } else { value });
    }
    BigRational::from_str(s).map_err(|_| bad())
}

#[derive(Serialize)]
struct FortsOutput<'a> {
    #[serde(flatten)]
    family: &'a FortFamily,
    #[serde(skip_serializing_if = "Option::is_none")]
    cover: Option<CoverCertificate>,
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Poly { source, pretty, method, memoized, jobs } => {
            let src = source.load()?;
            let strategy = if memoized { Strategy::Memoized } else { Strategy::Direct };
            let opts = Enumeration::default().with_cap(enumeration_cap()?).with_jobs(jobs).with_strategy(strategy);
            let p = compute(&src, method, &opts)?;
            if pretty {
                println!("{}", p.pretty());
            } else {
                println!("{}", serde_json::to_string(&p).expect("polynomial serializes"));
            }
        }
        Command::Forts { source, min_cover, jobs } => {
            let src = source.load()?;
            let opts = Enumeration::default().with_cap(enumeration_cap()?).with_jobs(jobs);
            let family = enumerate_forts_with(src.graph(), &opts)?;
            let cover = min_cover.then(|| min_cover_of(&family));
            let out = FortsOutput { family: &family, cover };
            println!("{}", serde_json::to_string(&out).expect("forts serialize"));
        }
        Command::Check { suite, max_n, seed, jobs } => {
            let suites = parse_suites(&suite).map_err(|e| CliError::usage(e.to_string()))?;
            let cfg = SweepConfig { max_n, seed, jobs: jobs.max(1), cap: enumeration_cap()?, random: true };
            let report = run_suites(&suites, &cfg)?;
            print!("{}", report.to_json_lines());
            if report.warnings() > 0 {
                eprintln!("warning: {} conjecture counterexamples recorded", report.warnings());
            }
            if !report.passed() {
                eprintln!("error: theorem check failed");
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Eval { source, at, method } => {
            let x = parse_rational(&at)?;
            let src = source.load()?;
            let opts = Enumeration::default().with_cap(enumeration_cap()?);
            println!("{}", compute(&src, method, &opts)?.evaluate(&x));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}
