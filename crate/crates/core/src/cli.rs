//! Command-line front end. The binary only forwards `std::env::args` to
//! [`run`], so everything here is reachable from tests.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::One;

use crate::bfile::{parse_bfile, read_bfile, to_bfile_string};
use crate::engine::{self, EngineId};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::recfit::{self, FitOutcome, RecurrenceOperator, TermTable, Verdict};
use crate::sequence::{Mode, SequenceSpec};
use crate::tilings::tiling_polynomial;

/// Environment variable naming the default term cache directory.
pub const CACHE_ENV: &str = "GAPPERMS_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "gapperms",
    about = "Count permutations whose entries r places apart never differ by s"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute terms n = offset..=N and print or write them as a b-file.
    Compute(ComputeArgs),
    /// Run several engines and compare every term.
    Crosscheck(CrosscheckArgs),
    /// Print the tiling polynomial f_{r,n}.
    Tiling(TilingArgs),
    /// Fit a recurrence to a b-file.
    Fit(FitArgs),
    /// Check a recurrence against a b-file.
    Verify(VerifyArgs),
    /// Extend a b-file of seeds with a recurrence.
    Extend(ExtendArgs),
    /// Time engines on the same sequence.
    Bench(CrosscheckArgs),
}

#[derive(Debug, Args)]
struct SpecArgs {
    #[arg(long = "r")]
    r: usize,
    #[arg(long = "s")]
    s: usize,
    #[arg(long, default_value = "signed", value_parser = parse_mode)]
    mode: Mode,
    /// Largest n.
    #[arg(long = "n")]
    n: usize,
    /// Largest n the brute-force oracle may enumerate.
    #[arg(long, default_value_t = crate::oracle::DEFAULT_CAP)]
    oracle_cap: usize,
}

impl SpecArgs {
    fn spec(&self) -> Result<SequenceSpec> {
        SequenceSpec::new(self.r, self.s, self.mode)
    }

    fn oracle(&self) -> Result<Oracle> {
        if self.oracle_cap > 20 {
            return Err(Error::InvalidArgument(format!(
                "oracle cap {} is above the supported maximum of 20",
                self.oracle_cap
            )));
        }
        Ok(Oracle::with_cap(self.oracle_cap))
    }
}

fn parse_mode(s: &str) -> std::result::Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_engine(s: &str) -> std::result::Result<EngineId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
struct ComputeArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long, default_value = "auto", value_parser = parse_engine)]
    engine: EngineId,
    /// Write the b-file here instead of standard output.
    #[arg(long)]
    bfile: Option<PathBuf>,
    /// First index written (0 or 1).
    #[arg(long, default_value_t = 1)]
    offset: usize,
    #[arg(long, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CrosscheckArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Comma-separated engine names.
    #[arg(long, value_delimiter = ',', value_parser = parse_engine, required = true)]
    engines: Vec<EngineId>,
}

#[derive(Debug, Args)]
struct TilingArgs {
    #[arg(long = "r")]
    r: usize,
    #[arg(long = "n")]
    n: usize,
}

#[derive(Debug, Args)]
struct FitArgs {
    #[arg(long)]
    bfile: PathBuf,
    #[arg(long)]
    order: usize,
    #[arg(long)]
    degree: usize,
    #[arg(long, default_value_t = recfit::DEFAULT_HOLDOUT)]
    holdout: usize,
    /// Write the operator here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Operator file.
    #[arg(long)]
    op: PathBuf,
    #[arg(long)]
    bfile: PathBuf,
}

#[derive(Debug, Args)]
struct ExtendArgs {
    #[arg(long)]
    op: PathBuf,
    /// Seed terms.
    #[arg(long)]
    bfile: PathBuf,
    /// Last index to produce.
    #[arg(long = "n")]
    n: i64,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
/// Data goes to `out`, diagnostics to `err`; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Compute(a) => compute(a, out),
        Command::Crosscheck(a) => crosscheck(a, out, err),
        Command::Tiling(a) => {
            if a.r == 0 {
                return Err(Error::InvalidArgument("r must be positive".into()));
            }
            write!(out, "{}", tiling_polynomial(a.r, a.n))?;
            Ok(0)
        }
        Command::Fit(a) => fit(a, out, err),
        Command::Verify(a) => verify(a, out, err),
        Command::Extend(a) => {
            let op = read_operator(&a.op)?;
            let seeds = read_bfile(&a.bfile)?;
            let table = recfit::extend(&op, &seeds, a.n)?;
            emit(out, a.out.as_deref(), &to_bfile_string(&table))?;
            Ok(0)
        }
        Command::Bench(a) => bench(a, out),
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn read_operator(path: &Path) -> Result<RecurrenceOperator> {
    fs::read_to_string(path)?.parse()
}

fn cache_file(dir: &Path, spec: &SequenceSpec, engine: EngineId) -> PathBuf {
    dir.join(format!(
        "r{}-s{}-{}-{}.b",
        spec.r(),
        spec.s(),
        spec.mode(),
        engine
    ))
}

/// Terms `1..=n_max`, served from the cache directory when it already holds
/// enough of them.
fn terms_with_cache(
    engine: EngineId,
    spec: &SequenceSpec,
    n_max: usize,
    oracle: &Oracle,
    cache_dir: Option<&Path>,
) -> Result<Vec<BigInt>> {
    engine.check_applicable(spec)?;
    let Some(dir) = cache_dir else {
        return engine::compute(engine, spec, n_max, oracle);
    };
    let path = cache_file(dir, spec, engine.resolve(spec));
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(table) = parse_bfile(&text) {
            if table.offset() == 1 && table.len() >= n_max {
                return Ok(table.values()[..n_max].to_vec());
            }
        }
    }
    let values = engine::compute(engine, spec, n_max, oracle)?;
    if !values.is_empty() {
        fs::create_dir_all(dir)?;
        let table = TermTable::new(1, values.clone())?;
        fs::write(&path, to_bfile_string(&table))?;
    }
    Ok(values)
}

fn compute(a: ComputeArgs, out: &mut dyn Write) -> Result<i32> {
    if a.offset > 1 {
        return Err(Error::InvalidArgument(format!(
            "offset must be 0 or 1, got {}",
            a.offset
        )));
    }
    let spec = a.spec.spec()?;
    let oracle = a.spec.oracle()?;
    let mut values = terms_with_cache(a.engine, &spec, a.spec.n, &oracle, a.cache_dir.as_deref())?;
    if a.offset == 0 {
        values.insert(0, BigInt::one());
    }
    if values.is_empty() {
        return Ok(0);
    }
    let table = TermTable::new(a.offset as i64, values)?;
    emit(out, a.bfile.as_deref(), &to_bfile_string(&table))?;
    Ok(0)
}

fn crosscheck(a: CrosscheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let spec = a.spec.spec()?;
    let report = engine::crosscheck(&spec, a.spec.n, &a.engines, &a.spec.oracle()?)?;
    let names: Vec<&str> = report.engines.iter().map(|e| e.name()).collect();
    writeln!(
        out,
        "# {spec} n = 1..{} engines: {}",
        a.spec.n,
        names.join(",")
    )?;
    for i in 0..a.spec.n {
        let base = &report.values[0][i];
        let ok = report.values.iter().all(|v| &v[i] == base);
        writeln!(
            out,
            "{} {} {}",
            i + 1,
            base,
            if ok { "agree" } else { "MISMATCH" }
        )?;
    }
    match report.mismatch {
        None => Ok(0),
        Some(m) => {
            writeln!(
                err,
                "mismatch at n = {}: {} gives {}, {} gives {}",
                m.n, m.first.0, m.first.1, m.second.0, m.second.1
            )?;
            Ok(1)
        }
    }
}

fn fit(a: FitArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let terms = read_bfile(&a.bfile)?;
    match recfit::fit(&terms, a.order, a.degree, a.holdout)? {
        FitOutcome::Found(op) => {
            emit(out, a.out.as_deref(), &op.to_text())?;
            Ok(0)
        }
        FitOutcome::NoRecurrence => {
            writeln!(
                err,
                "no recurrence of order {} and degree {}",
                a.order, a.degree
            )?;
            Ok(1)
        }
        FitOutcome::Underdetermined { dimension } => {
            writeln!(
                err,
                "underdetermined: solution space has dimension {dimension}"
            )?;
            Ok(1)
        }
        FitOutcome::LeadingVanishes => {
            writeln!(err, "the only solution has p_0 = 0; try a lower order")?;
            Ok(1)
        }
        FitOutcome::RejectedByHoldout { n } => {
            writeln!(err, "candidate fails on held-out term n = {n}")?;
            Ok(1)
        }
    }
}

fn verify(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let op = read_operator(&a.op)?;
    let terms = read_bfile(&a.bfile)?;
    match recfit::verify(&op, &terms)? {
        Verdict::Holds => {
            writeln!(
                out,
                "holds for n = {}..{}",
                terms.offset() + op.order() as i64,
                terms.last_index()
            )?;
            Ok(0)
        }
        Verdict::FailsAt(n) => {
            writeln!(err, "recurrence fails at n = {n}")?;
            Ok(1)
        }
    }
}

fn bench(a: CrosscheckArgs, out: &mut dyn Write) -> Result<i32> {
    let spec = a.spec.spec()?;
    let oracle = a.spec.oracle()?;
    for e in &a.engines {
        e.check_applicable(&spec)?;
    }
    for &e in &a.engines {
        let start = Instant::now();
        engine::compute(e, &spec, a.spec.n, &oracle)?;
        writeln!(
            out,
            "{} {} {:.6}",
            e,
            a.spec.n,
            start.elapsed().as_secs_f64()
        )?;
    }
    Ok(0)
}
