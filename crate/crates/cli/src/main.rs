//! `liealg`: classify Lie algebras, inspect parabolics, run the suites.

#![allow(clippy::needless_range_loop)]

mod render;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use liealg::classes::{class_audit, classify, is_elementary, random_corpus, verify_theorem, Suite};
use liealg::frattini::is_phi_free;
use liealg::json::{from_json, AlgebraFile};
use liealg::rootsys::{enumerate_standard_parabolics, is_minimal_parabolic, standard_parabolic, ParabolicDesc, SplitAlgebra};
use liealg::sampling::{DEFAULT_SAMPLES, DEFAULT_SEED};
use liealg::zoo::{self, ExampleSpec};
use liealg::{Config, Error, LieAlgebra, TriState};
use serde::Serialize;
use serde_json::{json, Value};

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(name = "liealg", version, about = "Exact structure theory of Lie algebras over ℚ")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Sample budget for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    /// Exit with code 3 if any verdict is Unknown.
    #[arg(long, global = true)]
    strict: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Structure data, Frattini ideal and all class verdicts.
    Classify {
        /// File path, zoo:<name> or split:<descriptor>.
        input: String,
    },
    /// Standard parabolic subalgebras of a split algebra.
    Parabolics {
        /// Root system descriptor such as A2, B2, A1xA1.
        descriptor: String,
        /// One-based simple roots defining a single parabolic, e.g. "1,3".
        #[arg(long)]
        subset: Option<String>,
    },
    /// Run a verification suite: section2, section3, section4 or all.
    Verify { suite: String },
    /// Consistency audit over random solvable algebras (and optionally the zoo).
    Audit {
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Largest dimension of the random algebras (1..=6).
        #[arg(long, default_value_t = 5)]
        dim: usize,
        /// Also audit the named example corpus.
        #[arg(long)]
        zoo: bool,
    },
    /// Print an algebra in the JSON file format.
    Export { input: String },
}

/// Outcome of a command before rendering.
struct Report {
    body: Value,
    violation: bool,
    unknown: bool,
}

fn load(input: &str) -> Result<LieAlgebra, Error> {
    if let Some(name) = input.strip_prefix("zoo:") {
        return zoo::make_example(&ExampleSpec::parse(name)?);
    }
    if input.starts_with("split:") {
        return zoo::make_example(&ExampleSpec::parse(input)?);
    }
    let path = Path::new(input);
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {input}: {e}")))?;
    from_json(&text)
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

fn cmd_classify(input: &str, cfg: &Config) -> Result<Report, Error> {
    let l = load(input)?;
    let r = classify(&l, cfg)?;
    Ok(Report { unknown: r.has_unknown(), violation: false, body: to_value(&r) })
}

fn parse_subset(s: &str, rank: usize) -> Result<Vec<usize>, Error> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(i) if (1..=rank).contains(&i) => Ok(i - 1),
            _ => Err(Error::Parse(format!("subset entry {t:?} is not a simple root index in 1..={rank}"))),
        })
        .collect()
}

fn tri(v: &TriState) -> Value {
    match v.as_bool() {
        Some(b) => Value::Bool(b),
        None => Value::Null,
    }
}

fn parabolic_row(sa: &SplitAlgebra, p: &ParabolicDesc, cfg: &Config, detail: bool) -> Result<(Value, bool), Error> {
    let l = &sa.algebra;
    let nilrad_abelian = l.is_abelian_subspace(&p.nilrad);
    let minimal = is_minimal_parabolic(sa, p, cfg)?;
    let mut row = json!({
        "subset": p.label(),
        "dim": p.space.dim(),
        "nilradical_dim": p.nilrad.dim(),
        "nilradical_abelian": nilrad_abelian,
        "levi_dim": p.levi.dim(),
        "minimal": minimal,
        "borel": p.is_borel(),
    });
    let mut unknown = false;
    if p.is_borel() || detail {
        let b = l.induced_subalgebra(&p.space)?.algebra;
        let pf = is_phi_free(&b, cfg);
        let el = is_elementary(&b, cfg);
        unknown |= pf.is_unknown() || el.is_unknown();
        row["phi_free"] = tri(&pf);
        row["elementary"] = tri(&el);
    }
    if detail {
        let roots: Vec<Vec<i64>> = p.omega1_prime.iter().map(|&k| sa.rs.positive_roots[k].clone()).collect();
        row["nilradical_roots"] = to_value(&roots);
        row["nilradical_basis"] = to_value(&p.nilrad.pivots().iter().map(|&i| l.basis_names()[i].clone()).collect::<Vec<_>>());
    }
    Ok((row, unknown))
}

fn cmd_parabolics(desc: &str, subset: Option<&str>, cfg: &Config) -> Result<Report, Error> {
    let desc = desc.strip_prefix("split:").unwrap_or(desc);
    let sa = SplitAlgebra::parse(desc)?;
    let mut rows = Vec::new();
    let mut unknown = false;
    match subset {
        Some(s) => {
            let p = standard_parabolic(&sa, &parse_subset(s, sa.rank())?)?;
            let (row, u) = parabolic_row(&sa, &p, cfg, true)?;
            rows.push(row);
            unknown |= u;
        }
        None => {
            for p in enumerate_standard_parabolics(&sa)? {
                let (row, u) = parabolic_row(&sa, &p, cfg, false)?;
                rows.push(row);
                unknown |= u;
            }
        }
    }
    let body = json!({ "type": sa.rs.label, "rank": sa.rank(), "dim": sa.dim(), "parabolics": rows });
    Ok(Report { body, violation: false, unknown })
}

fn cmd_verify(suite: &str, cfg: &Config) -> Result<Report, Error> {
    let suites: Vec<Suite> = if suite.eq_ignore_ascii_case("all") {
        vec![Suite::Section2, Suite::Section3, Suite::Section4]
    } else {
        vec![suite.parse()?]
    };
    let reports: Vec<_> = suites.iter().map(|&s| verify_theorem(s, cfg)).collect();
    let violation = reports.iter().any(|r| r.fail > 0);
    let unknown = reports.iter().any(|r| r.unknown > 0);
    let body = if reports.len() == 1 { to_value(&reports[0]) } else { to_value(&reports) };
    Ok(Report { body, violation, unknown })
}

fn cmd_audit(count: usize, dim: usize, with_zoo: bool, cfg: &Config) -> Result<Report, Error> {
    if !(1..=6).contains(&dim) {
        return Err(Error::InvalidExample(format!("--dim must be in 1..=6, got {dim}")));
    }
    let mut corpus = if with_zoo { zoo::corpus() } else { Vec::new() };
    corpus.extend(random_corpus(count, dim, cfg.seed)?);
    let r = class_audit(&corpus, cfg);
    Ok(Report { violation: r.fail > 0, unknown: r.unknown > 0, body: to_value(&r) })
}

fn cmd_export(input: &str) -> Result<Report, Error> {
    let l = load(input)?;
    Ok(Report { body: to_value(&AlgebraFile::from_algebra(&l)), violation: false, unknown: false })
}

fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::UnknownExample(_)
            | Error::InvalidExample(_)
            | Error::InvalidCartanType(_)
            | Error::Jacobi(..)
            | Error::Antisymmetry(..)
            | Error::DimensionMismatch { .. }
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = Config { seed: cli.common.seed, samples: cli.common.samples };
    let result = match &cli.command {
        Command::Classify { input } => cmd_classify(input, &cfg),
        Command::Parabolics { descriptor, subset } => cmd_parabolics(descriptor, subset.as_deref(), &cfg),
        Command::Verify { suite } => cmd_verify(suite, &cfg),
        Command::Audit { count, dim, zoo } => cmd_audit(*count, *dim, *zoo, &cfg),
        Command::Export { input } => cmd_export(input),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if is_input_error(&e) { EXIT_INPUT } else { EXIT_VIOLATION });
        }
    };
    let text = match cli.common.format {
        Format::Json => serde_json::to_string_pretty(&report.body).expect("json") + "\n",
        Format::Human => render::human(&report.body),
    };
    // A closed pipe (e.g. `| head`) is not an error worth a panic.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    if report.violation {
        ExitCode::from(EXIT_VIOLATION)
    } else if cli.common.strict && report.unknown {
        ExitCode::from(EXIT_UNKNOWN)
    } else {
        ExitCode::SUCCESS
    }
}
