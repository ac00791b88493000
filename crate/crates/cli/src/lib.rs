//! Command-line front end: evaluation, verification, orbit normalization,
//! slices, sign resolution and the index.
//!
//! All results are JSON on stdout; diagnostics go to stderr. Exit codes:
//! `0` success, `1` a verification or mathematical failure, `2` a usage
//! error or malformed input.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use coinvar::invariants::{
    evaluate, generators, orbit_normalize, phi_slice, slice_isl, slice_so, t_slice, SlicePointIsl,
    SlicePointSo,
};
use coinvar::io::{evaluate_selected, parse_dual_point, DualPointJson, EvalResult, GroupElemJson};
use coinvar::liealg::index_of;
use coinvar::verify::{run_suite, Suite, SuiteConfig, VerifyReport};
use coinvar::{format_rat, parse_rat, resolve_sign, AlgebraKind, DualPoint, Error, Family, Rng, SignPair};

/// Successful run.
pub const EXIT_OK: i32 = 0;
/// Verification failure or a point outside the required domain.
pub const EXIT_FAILURE: i32 = 1;
/// Usage error or malformed input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "coinvar", version, about = "Exact coadjoint invariants of inhomogeneous linear Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate generating invariants at a dual point read from JSON.
    Eval(EvalArgs),
    /// Run property suites and emit their reports.
    Verify(VerifyArgs),
    /// Move a point of the open set of b* to its normal form.
    Orbit(OrbitArgs),
    /// Evaluate generators and slice polynomials at a slice point.
    Slice(SliceArgs),
    /// Resolve the sign between a generator and its slice polynomial.
    Sign(SignArgs),
    /// Compute the index of an algebra from random forms.
    Index(IndexArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write JSON here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Input JSON file (`-` for stdin).
    #[arg(long)]
    pub input: PathBuf,
    /// Expected algebra; must match the input when given.
    #[arg(long)]
    pub algebra: Option<Family>,
    /// Expected size; must match the input when given.
    #[arg(long)]
    pub n: Option<usize>,
    /// `all`, a generator name (`f`, `fbar`, `F`, `psi`, `Phi`) or an
    /// indexed generator (`F_2`, `psi_0`).
    #[arg(long, default_value = "all")]
    pub which: String,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite to run.
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    pub suite: Option<String>,
    /// Run every suite on every algebra it supports.
    #[arg(long)]
    pub all: bool,
    /// Restrict to one algebra (default: every supported algebra).
    #[arg(long)]
    pub algebra: Option<Family>,
    /// Run at this single size.
    #[arg(long, conflicts_with_all = ["n_min", "n_max"])]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    /// Largest size (default: the suite's default range).
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Entries are sampled from `[-bound, bound]`.
    #[arg(long, default_value_t = 3)]
    pub bound: i64,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    /// Input JSON file with a `glvv` dual point (`-` for stdin).
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct SliceArgs {
    /// `isl`, `io` or `iso`.
    #[arg(long)]
    pub algebra: Family,
    #[arg(long)]
    pub n: usize,
    /// Comma-separated block parameters `a_1,...` (n − 1 of them for
    /// `isl`, ℓ for the orthogonal algebras).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a: Vec<String>,
    /// Scale of the covector: `b` for `isl`, `a_0` for `io`/`iso`.
    #[arg(long, allow_hyphen_values = true)]
    pub scale: String,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct SignArgs {
    /// `f-vs-t`, `psi-vs-phi(k)` or `exotic-vs-slice`.
    #[arg(long)]
    pub pair: String,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    #[arg(long)]
    pub algebra: Family,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random forms to try.
    #[arg(long, default_value_t = 10)]
    pub samples: usize,
    #[command(flatten)]
    pub out: Output,
}

/// Error carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotInOpenOrbit | Error::NotProportional(_) | Error::DegenerateRng => EXIT_FAILURE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Parses `args` (including the program name) and runs the command,
/// writing JSON to `stdout` and diagnostics to `stderr`. Returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if code == EXIT_OK {
                write!(stdout, "{e}")
            } else {
                write!(stderr, "{e}")
            };
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    match cmd {
        Command::Eval(a) => cmd_eval(a, stdout),
        Command::Verify(a) => cmd_verify(a, stdout, stderr),
        Command::Orbit(a) => cmd_orbit(a, stdout),
        Command::Slice(a) => cmd_slice(a, stdout),
        Command::Sign(a) => cmd_sign(a, stdout),
        Command::Index(a) => cmd_index(a, stdout),
    }
}

fn read_input(path: &PathBuf) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
    }
}

fn emit<T: Serialize>(value: &T, out: &Output, stdout: &mut dyn Write) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).expect("serializable output");
    match &out.output {
        Some(path) => fs::write(path, text + "\n")
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => writeln!(stdout, "{text}").map_err(|e| Failure::usage(format!("cannot write stdout: {e}"))),
    }
}

fn cmd_eval(a: EvalArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let text = read_input(&a.input)?;
    let (kind, point) = parse_dual_point(&text)?;
    check_declared(kind, a.algebra, a.n)?;
    let values: Vec<EvalResult> = evaluate_selected(kind, &point, &a.which)?;
    emit(&values, &a.out, stdout)?;
    Ok(EXIT_OK)
}

fn check_declared(kind: AlgebraKind, algebra: Option<Family>, n: Option<usize>) -> CliResult<()> {
    if let Some(f) = algebra {
        if f != kind.family() {
            return Err(Failure::usage(format!(
                "--algebra {f} does not match input algebra {}",
                kind.family()
            )));
        }
    }
    if let Some(n) = n {
        if n != kind.n() {
            return Err(Failure::usage(format!("--n {n} does not match input size {}", kind.n())));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyOutput {
    passed: bool,
    reports: Vec<VerifyReport>,
}

fn cmd_verify(a: VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    let suites: Vec<Suite> = match &a.suite {
        Some(name) => vec![name.parse::<Suite>()?],
        None => Suite::ALL.to_vec(),
    };
    let mut reports = Vec::new();
    for suite in suites {
        let families = match a.algebra {
            Some(f) if suite.supports(f) => vec![f],
            Some(f) if a.suite.is_some() => {
                return Err(Error::Unsupported {
                    suite: suite.to_string(),
                    algebra: f.to_string(),
                }
                .into())
            }
            Some(_) => continue,
            None => suite.families(),
        };
        let (n_min, n_max) = match a.n {
            Some(n) => (n, n),
            None => (a.n_min, a.n_max.unwrap_or(suite.default_n_max()).min(suite.default_n_max().max(a.n_min))),
        };
        for family in families {
            let cfg = SuiteConfig {
                algebra: family,
                n_min,
                n_max,
                samples: a.samples,
                bound: a.bound,
                seed: a.seed,
            };
            match run_suite(suite, &cfg) {
                Ok(report) => reports.push(report),
                // a suite with nothing to check in the requested range is
                // skipped when running everything
                Err(Error::InvalidConfig(msg)) if a.all && msg.contains("no applicable size") => {
                    let _ = writeln!(stderr, "skipped {suite} on {family}: {msg}");
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    let passed = reports.iter().all(VerifyReport::passed);
    for r in reports.iter().filter(|r| !r.passed()) {
        for w in &r.failures {
            let _ = writeln!(
                stderr,
                "FAIL {} on {}({}) sample {}: {}: {} != {}; input {}",
                r.suite, r.algebra, w.n, w.sample, w.check, w.lhs, w.rhs, w.input
            );
        }
    }
    emit(&VerifyOutput { passed, reports }, &a.out, stdout)?;
    Ok(if passed { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_orbit(a: OrbitArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let text = read_input(&a.input)?;
    let (kind, point) = parse_dual_point(&text)?;
    let l = match point {
        DualPoint::B(l) => l,
        _ => {
            return Err(Failure::usage(format!(
                "orbit normalization needs a glvv point, got {}",
                kind.family()
            )))
        }
    };
    let (g, normal) = orbit_normalize(&l)?;
    let out = json!({
        "g": g.g,
        "u": g.u,
        "element": GroupElemJson::from_a(Family::Glvv, &g),
        "normal_form": DualPointJson::encode(Family::Glvv, &DualPoint::B(normal))?,
    });
    emit(&out, &a.out, stdout)?;
    Ok(EXIT_OK)
}

fn parse_values(raw: &[String]) -> CliResult<Vec<coinvar::Rat>> {
    raw.iter()
        .filter(|s| !s.is_empty())
        .map(|s| parse_rat(s.trim()).map_err(Failure::from))
        .collect()
}

fn cmd_slice(a: SliceArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let kind = AlgebraKind::new(a.algebra, a.n)?;
    let params = parse_values(&a.a)?;
    let scale = parse_rat(&a.scale)?;
    let (point, slice_values): (DualPoint, Vec<Value>) = match kind.family() {
        Family::Isl => {
            if params.len() + 1 != kind.n() {
                return Err(Failure::usage(format!(
                    "isl({}) slice needs {} parameters, got {}",
                    kind.n(),
                    kind.n() - 1,
                    params.len()
                )));
            }
            let s = SlicePointIsl { a: params, b: scale };
            let t = t_slice(&s);
            (DualPoint::A(slice_isl(&s)), vec![json!({"name": "t", "value": format_rat(&t)})])
        }
        Family::Io | Family::Iso => {
            let s = SlicePointSo { a: params, a0: scale };
            let point = slice_so(&s, kind)?;
            let phis = (0..=kind.ell())
                .map(|k| Ok(json!({"name": "phi", "k": k, "value": format_rat(&phi_slice(k, &s, kind)?)})))
                .collect::<coinvar::Result<Vec<_>>>()?;
            (DualPoint::C(point), phis)
        }
        other => return Err(Failure::usage(format!("no slice is defined for {other}"))),
    };
    let invariants = generators(kind)
        .into_iter()
        .map(|g| Ok(EvalResult::new(g, &evaluate(g, &point)?)))
        .collect::<coinvar::Result<Vec<_>>>()?;
    let out = json!({
        "point": DualPointJson::encode(kind.family(), &point)?,
        "invariants": invariants,
        "slice": slice_values,
    });
    emit(&out, &a.out, stdout)?;
    Ok(EXIT_OK)
}

fn cmd_sign(a: SignArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let pair: SignPair = a.pair.parse()?;
    let sign = resolve_sign(pair, a.n)?;
    emit(&json!({"pair": pair.to_string(), "n": a.n, "sign": sign}), &a.out, stdout)?;
    Ok(EXIT_OK)
}

fn cmd_index(a: IndexArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let kind = AlgebraKind::new(a.algebra, a.n)?;
    let mut rng = Rng::new(a.seed);
    let index = index_of(kind, a.samples, &mut rng)?;
    emit(
        &json!({"algebra": kind.family(), "n": kind.n(), "dim": kind.dim(), "index": index}),
        &a.out,
        stdout,
    )?;
    Ok(EXIT_OK)
}
