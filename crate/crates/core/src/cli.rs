//! The `nestcount` command line.

use std::io::Write;
use std::path::PathBuf;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use crate::engine::Engine;
use crate::error::Error;
use crate::gtree;
use crate::partition::Oracle;
use crate::record::{Cache, Meta, SequenceRecord};
use crate::verify::{self, Suite};

const AFTER_HELP: &str =
    "Sequences are indexed from n = 0, whose count is always 1 (the empty partition).";

#[derive(Debug, Parser)]
#[command(name = "nestcount", version, about = "Count set partitions avoiding long nestings", after_help = AFTER_HELP)]
pub struct Cli {
    /// Worker threads for parallel stages (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct NestingArg {
    /// M: count partitions whose maximal nesting number is at most M, i.e. partitions
    /// with no (M+1)-nesting ((M+1)-nonnesting).
    #[arg(long = "max-nesting", value_name = "M", value_parser = clap::value_parser!(u16).range(1..))]
    pub max_nesting: u16,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print counts for sizes 0..=N.
    #[command(after_help = AFTER_HELP)]
    Sequence {
        #[command(flatten)]
        nesting: NestingArg,
        /// Largest size N.
        #[arg(long, value_name = "N")]
        terms: usize,
        #[arg(long, value_enum, default_value_t = Engine::Gtree)]
        engine: Engine,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Directory holding cached sequences as m{M}_{engine}.json.
        #[arg(long, value_name = "PATH")]
        cache_dir: Option<PathBuf>,
        /// Include timestamp and wall time in JSON output (makes output run-dependent).
        #[arg(long)]
        timing: bool,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[command(flatten)]
        nesting: NestingArg,
        /// Largest size N checked.
        #[arg(long, value_name = "N")]
        terms: usize,
    },
    /// Print the label distribution at size N.
    Labels {
        #[command(flatten)]
        nesting: NestingArg,
        /// Partition size N.
        #[arg(long, value_name = "N")]
        size: usize,
        /// gtree or oracle.
        #[arg(long, value_enum, default_value_t = Engine::Gtree)]
        engine: Engine,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print the joint distribution of maximal nesting and maximal crossing numbers.
    Stats {
        /// Partition size N.
        #[arg(long, value_name = "N")]
        size: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
enum Failure {
    /// Bad flags or parameters outside what the command supports (exit 2).
    Usage(String),
    /// An engine broke an internal invariant or a check failed (exit 1).
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistency(_) => Failure::Failed(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Failed(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let mut buffer = Vec::new();
    let result = pool.install(|| execute(cli.command, &mut buffer));
    if let Err(e) = out.write_all(&buffer).and_then(|_| out.flush()) {
        let _ = writeln!(err, "error: {e}");
        return 1;
    }
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Failed(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

/// Entry point for the binary.
pub fn main() -> ! {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Sequence {
            nesting,
            terms,
            engine,
            format,
            cache_dir,
            timing,
        } => sequence(
            nesting.max_nesting as usize,
            terms,
            engine,
            format,
            cache_dir,
            timing,
            out,
        ),
        Command::Verify {
            suite,
            nesting,
            terms,
        } => {
            let report = verify::run(suite, nesting.max_nesting as usize, terms)?;
            write!(out, "{report}")?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Labels {
            nesting,
            size,
            engine,
            format,
        } => labels(nesting.max_nesting as usize, size, engine, format, out),
        Command::Stats { size, format } => stats(size, format, out),
    }
}

fn sequence(
    m: usize,
    terms: usize,
    engine: Engine,
    format: Format,
    cache_dir: Option<PathBuf>,
    timing: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let cache = cache_dir.map(Cache::new);
    let start = Instant::now();
    let cached = cache.as_ref().and_then(|c| c.lookup(m, engine, terms));
    let counts = match cached {
        Some(c) => c,
        None => {
            let counts = engine.sequence(m, terms)?;
            if let Some(cache) = &cache {
                let meta = Meta {
                    timestamp: Some(unix_now()),
                    wall_time_secs: Some(start.elapsed().as_secs_f64()),
                    ..Meta::current()
                };
                cache.store(&SequenceRecord::new(m, engine, &counts, meta))?;
            }
            counts
        }
    };
    match format {
        Format::Csv => {
            writeln!(out, "n,count")?;
            for (n, c) in counts.iter().enumerate() {
                writeln!(out, "{n},{c}")?;
            }
        }
        Format::Json => {
            let mut meta = Meta::current();
            if timing {
                meta.timestamp = Some(unix_now());
                meta.wall_time_secs = Some(start.elapsed().as_secs_f64());
            }
            writeln!(
                out,
                "{}",
                SequenceRecord::new(m, engine, &counts, meta).to_json()
            )?;
        }
    }
    Ok(0)
}

fn unix_now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn labels(
    m: usize,
    size: usize,
    engine: Engine,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let dist = match engine {
        Engine::Gtree => gtree::level(m, size).sorted(),
        Engine::Oracle => Oracle::default().label_distribution(size, m)?,
        other => {
            return Err(Failure::Usage(format!(
                "labels supports gtree and oracle, not {other}"
            )))
        }
    };
    match format {
        Format::Csv => {
            writeln!(out, "label,count")?;
            for (label, count) in &dist {
                writeln!(out, "{label},{count}")?;
            }
        }
        Format::Json => {
            let rows: Vec<_> = dist
                .iter()
                .map(|(l, c)| json!({ "label": l.as_slice(), "count": c.to_string() }))
                .collect();
            writeln!(out, "{}", json!({ "m": m, "size": size, "labels": rows }))?;
        }
    }
    Ok(0)
}

fn stats(size: usize, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let joint = Oracle::default().nesting_crossing_stats(size)?;
    match format {
        Format::Csv => {
            writeln!(out, "max_nesting,max_crossing,count")?;
            for ((nest, cross), count) in &joint {
                writeln!(out, "{nest},{cross},{count}")?;
            }
        }
        Format::Json => {
            let rows: Vec<_> = joint
                .iter()
                .map(|((a, b), c): (&(usize, usize), &BigUint)| {
                    json!({ "max_nesting": a, "max_crossing": b, "count": c.to_string() })
                })
                .collect();
            writeln!(out, "{}", json!({ "size": size, "joint": rows }))?;
        }
    }
    Ok(0)
}
