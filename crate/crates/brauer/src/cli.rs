//! The `brauer` command line.
//!
//! Exit status is 0 on success, 1 when a mathematical check fails (a pole, a
//! failed verification or a golden mismatch) and 2 for usage errors.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use brauer_core::analysis::{self, Sign};
use brauer_core::diagram::MAX_ENUMERATE_N;
use brauer_core::solver::{self, Mode};
use brauer_core::symgrp::young_central_idempotent;
use brauer_core::{CentralElement, Error, IntegerPartition, Rational};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::checks::{self, CheckOutcome};
use crate::goldens::{self, Engine, Source};
use crate::json;

#[derive(Parser, Debug)]
#[command(name = "brauer", version, about = "Exact central idempotents of Brauer algebras")]
pub struct Cli {
    /// Worker threads; the BRAUER_JOBS environment variable takes precedence.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verify {
    None,
    Fast,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SystemMode {
    Full,
    Reduced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Paper,
    Properties,
    Heavy,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the conjugacy classes of diagrams by spore tableau.
    Spores {
        #[arg(long)]
        n: usize,
        /// Only classes with at most this many propagating lines.
        #[arg(long)]
        max_prop: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compute the splitting idempotent φ_n(ℓ).
    SplitIdem {
        /// Number of strands.
        #[arg(long)]
        n: usize,
        /// Propagating lines of the ideal; below n and of the same parity.
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value = "fast")]
        verify: Verify,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Which equations to solve.
        #[arg(long, value_enum, default_value = "full")]
        system: SystemMode,
        /// Print the linear system as JSON instead of solving it.
        #[arg(long)]
        dump_system: bool,
    },
    /// Compute the primitive central idempotent φ_n(λ) for λ ⊢ n.
    PrimIdem {
        #[arg(long)]
        n: usize,
        /// Parts of λ, comma separated.
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Report the values of δ where an element is undefined.
    Poles {
        /// A JSON file, `-` for stdin, or split:N:ELL, prim:N:PARTS,
        /// young:PARTS, golden:ID.
        element: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Add and subtract elements, optionally specialising δ.
    Combine {
        /// Elements as for `poles`, each optionally prefixed by + or -.
        #[arg(required = true, allow_hyphen_values = true)]
        terms: Vec<String>,
        /// Rational value for δ, e.g. -2 or 1/2.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Replay the golden tables and property suites.
    Selftest {
        #[arg(long, value_enum, default_value = "paper")]
        level: Level,
        /// Read golden JSON files from this directory instead of the
        /// embedded copies.
        #[arg(long)]
        goldens: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::PoleAt(_)
            | Error::PoleAtClasses { .. }
            | Error::NotInK(_)
            | Error::RankDeficient { .. }
            | Error::Inconsistent { .. }
            | Error::NonInvariant { .. } => CliError::Math(msg),
            _ => CliError::Usage(msg),
        }
    }
}

impl From<json::FormatError> for CliError {
    fn from(e: json::FormatError) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, CliError>;

pub fn main_with(args: impl IntoIterator<Item = String>) -> ExitCode {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let jobs = std::env::var("BRAUER_JOBS").ok().and_then(|v| v.parse().ok()).or(cli.jobs);
    if let Some(j) = jobs {
        // A pool may already exist when called repeatedly in one process.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    print!("{out}");
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(m) => eprintln!("error: {m}"),
                CliError::Math(m) => eprintln!("failed: {m}"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}

pub fn run(command: Command, out: &mut String) -> CliResult {
    let engine = Engine::new();
    match command {
        Command::Spores { n, max_prop, format } => spores(n, max_prop, format, &engine, out),
        Command::SplitIdem { n, ell, verify, format, system, dump_system } => {
            split_idem(n, ell, verify, format, system, dump_system, &engine, out)
        }
        Command::PrimIdem { n, lambda, format } => {
            let lambda = partition_of(&lambda, n)?;
            let x = primitive(&lambda, &engine)?;
            emit_element(&x, format, out);
            Ok(())
        }
        Command::Poles { element, format } => {
            let x = load_element(&element, &engine)?;
            let report = analysis::poles(&x);
            match format {
                Format::Json => out.push_str(&json::to_string(&json::poles_to_json(&report))),
                Format::Text => {
                    let poles: Vec<String> = report.poles.iter().map(|p| p.to_string()).collect();
                    out.push_str(&format!("poles: {}\n", poles.join(", ")));
                    for (t, ps) in &report.by_class {
                        let ps: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                        out.push_str(&format!("{t}  {}\n", ps.join(", ")));
                    }
                    for (p, k) in &report.max_prop_at_pole {
                        out.push_str(&format!("max propagating at {p}: {k}\n"));
                    }
                }
            }
            Ok(())
        }
        Command::Combine { terms, at, format } => {
            let (terms, at, format) = trailing_options(terms, at, format)?;
            combine(&terms, at.as_deref(), format, &engine, out)
        }
        Command::Selftest { level, goldens } => selftest(level, goldens, &engine, out),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_n(n: usize) -> CliResult {
    if n == 0 || n > MAX_ENUMERATE_N {
        return Err(usage(format!("n must be between 1 and {MAX_ENUMERATE_N}")));
    }
    Ok(())
}

fn partition_of(text: &str, n: usize) -> CliResult<IntegerPartition> {
    let lambda: IntegerPartition = text.parse()?;
    if lambda.n() != n {
        return Err(Error::NotAPartition { parts: text.to_string(), n }.into());
    }
    Ok(lambda)
}

fn primitive(lambda: &IntegerPartition, engine: &Engine) -> CliResult<CentralElement> {
    let n = lambda.n();
    check_n(n)?;
    if n < 2 {
        return Err(usage("φ_n(λ) needs n ≥ 2"));
    }
    Ok(engine.primitive(lambda)?)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SporeRow {
    tableau: Vec<String>,
    prop_count: usize,
    orbit_size: usize,
}

fn spores(n: usize, max_prop: Option<usize>, format: Format, engine: &Engine, out: &mut String) -> CliResult {
    check_n(n)?;
    let infos = engine.index(n)?.infos(max_prop.unwrap_or(n));
    match format {
        Format::Json => {
            let rows: Vec<SporeRow> = infos
                .iter()
                .map(|i| SporeRow {
                    tableau: i.tableau.row_strings(),
                    prop_count: i.prop_count,
                    orbit_size: i.orbit_size,
                })
                .collect();
            out.push_str(&json::to_string(&rows));
        }
        Format::Text => {
            let width = infos.iter().map(|i| i.tableau.to_string().len()).max().unwrap_or(0).max(7);
            out.push_str(&format!("{:<width$}  prop  orbit\n", "tableau"));
            for i in &infos {
                out.push_str(&format!("{:<width$}  {:>4}  {:>5}\n", i.tableau.to_string(), i.prop_count, i.orbit_size));
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn split_idem(
    n: usize,
    ell: usize,
    verify: Verify,
    format: Format,
    system: SystemMode,
    dump_system: bool,
    engine: &Engine,
    out: &mut String,
) -> CliResult {
    check_n(n)?;
    if ell >= n || !(n - ell).is_multiple_of(2) {
        return Err(Error::InvalidSplitParameters { n, ell }.into());
    }
    let index = engine.index(n)?;
    let mode = match system {
        SystemMode::Full => Mode::Full,
        SystemMode::Reduced => Mode::Reduced,
    };
    if dump_system {
        let sys = solver::build_system(n, ell, mode, index)?;
        out.push_str(&json::to_string(&json::system_to_json(&sys)));
        return Ok(());
    }
    let phi = solver::splitting_idempotent_with(n, ell, mode, index)?;
    emit_element(&phi, format, out);
    let mut failures = Vec::new();
    if verify != Verify::None {
        failures.extend(solver::verify_fast(&phi, ell, index)?.failures());
    }
    if verify == Verify::Full {
        if phi.mul(&phi, index)? != phi {
            failures.push("φ² ≠ φ".to_string());
        }
        let structure = solver::structural_checks(&solver::build_system(n, ell, Mode::Reduced, index)?)?;
        if !structure.passed() {
            failures.push("reduced matrix is not unitriangular modulo δ⁻¹".to_string());
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Math(failures.join("; ")))
    }
}

fn emit_element(x: &CentralElement, format: Format, out: &mut String) {
    match format {
        Format::Json => out.push_str(&json::emit_element(x)),
        Format::Text => out.push_str(&element_text(x)),
    }
}

/// One class per line, tableau then coefficient.
pub fn element_text(x: &CentralElement) -> String {
    let width = x.terms().map(|(t, _)| t.to_string().len()).max().unwrap_or(0);
    let mut s = format!("n = {}\n", x.n());
    for (t, c) in x.terms() {
        s.push_str(&format!("{:<width$}  {c}\n", t.to_string()));
    }
    s
}

/// Resolves an element argument: a named computation or a JSON file.
pub fn load_element(spec: &str, engine: &Engine) -> CliResult<CentralElement> {
    let fields: Vec<&str> = spec.splitn(3, ':').collect();
    let number = |s: &str| s.parse::<usize>().map_err(|_| usage(format!("bad number {s:?} in {spec:?}")));
    match fields.as_slice() {
        ["split", n, ell] => {
            let (n, ell) = (number(n)?, number(ell)?);
            check_n(n)?;
            Ok(engine.split(n, ell)?)
        }
        ["prim", n, parts] => primitive(&partition_of(parts, number(n)?)?, engine),
        ["young", parts] => {
            let lambda: IntegerPartition = parts.parse()?;
            check_n(lambda.n())?;
            Ok(young_central_idempotent(&lambda)?)
        }
        ["golden", id] => {
            let table = goldens::find(id).ok_or_else(|| usage(format!("no golden table {id:?}")))?;
            if let Source::System { .. } = table.source {
                return Err(usage(format!("{id} is a linear system, not an element")));
            }
            Ok(json::parse_element(table.text)?)
        }
        _ => {
            let text = if spec == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| usage(e.to_string()))?;
                s
            } else {
                std::fs::read_to_string(spec).map_err(|e| usage(format!("{spec}: {e}")))?
            };
            Ok(json::parse_element(&text)?)
        }
    }
}

/// Terms may start with `-`, so the term list also swallows options written
/// after it; this recovers `--at` and `--format` from there.
fn trailing_options(
    terms: Vec<String>,
    mut at: Option<String>,
    mut format: Format,
) -> CliResult<(Vec<String>, Option<String>, Format)> {
    let mut kept = Vec::new();
    let mut it = terms.into_iter();
    while let Some(term) = it.next() {
        let (name, inline) = match term.split_once('=') {
            Some((k, v)) if k.starts_with("--") => (k.to_string(), Some(v.to_string())),
            _ => (term.clone(), None),
        };
        match name.as_str() {
            "--at" | "--format" => {
                let value = inline.or_else(|| it.next()).ok_or_else(|| usage(format!("{name} needs a value")))?;
                if name == "--at" {
                    at = Some(value);
                } else {
                    format = Format::from_str(&value, true).map_err(|_| usage(format!("unknown format {value:?}")))?;
                }
            }
            _ => kept.push(term),
        }
    }
    if kept.is_empty() {
        return Err(usage("combine needs at least one element"));
    }
    Ok((kept, at, format))
}

fn combine(terms: &[String], at: Option<&str>, format: Format, engine: &Engine, out: &mut String) -> CliResult {
    let mut loaded = Vec::new();
    for term in terms {
        let (sign, spec) = match term.strip_prefix('-').filter(|s| !s.is_empty()) {
            Some(rest) => (Sign::Minus, rest),
            None => (Sign::Plus, term.strip_prefix('+').unwrap_or(term)),
        };
        loaded.push((sign, load_element(spec, engine)?));
    }
    let refs: Vec<(Sign, &CentralElement)> = loaded.iter().map(|(s, x)| (*s, x)).collect();
    let sum = analysis::combine(&refs)?;
    let Some(at) = at else {
        emit_element(&sum, format, out);
        return Ok(());
    };
    let at: Rational = at.parse().map_err(|_| usage(format!("{at:?} is not a rational number")))?;
    let value = analysis::specialize_element(&sum, &at)?;
    match format {
        Format::Json => out.push_str(&json::to_string(&json::specialized_to_json(&value))),
        Format::Text => {
            out.push_str(&format!("n = {}, δ = {}\n", value.n, value.at));
            let width = value.coeffs.keys().map(|t| t.to_string().len()).max().unwrap_or(0);
            for (t, c) in &value.coeffs {
                out.push_str(&format!("{:<width$}  {c}\n", t.to_string()));
            }
        }
    }
    Ok(())
}

fn selftest(level: Level, dir: Option<PathBuf>, engine: &Engine, out: &mut String) -> CliResult {
    let outcomes: Vec<CheckOutcome> = match level {
        Level::Paper => checks::golden_suite(engine, dir.as_deref()),
        Level::Properties => checks::property_suite(engine),
        Level::Heavy => checks::heavy_suite(engine),
    };
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    for o in &outcomes {
        let ms = o.elapsed.as_secs_f64() * 1e3;
        match &o.result {
            Ok(()) => out.push_str(&format!("PASS  {} ({ms:.1} ms)\n", o.name)),
            Err(detail) => out.push_str(&format!("FAIL  {}: {detail}\n", o.name)),
        }
    }
    out.push_str(&format!("{} passed, {failed} failed\n", outcomes.len() - failed));
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::Math(format!("{failed} self-test checks failed")))
    }
}
