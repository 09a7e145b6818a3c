//! `dectrace` command-line front end.
//!
//! Exit codes: 0 success, 1 parse/validation error, 2 oracle mismatch,
//! 3 size limit exceeded.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use dectrace::oracle::{self, DEFAULT_LIMIT};
use dectrace::{
    classify, count_traces, enumerate_possim, parse_process, traces, traces_with,
    DeclarativeProcess, Execution, Trace,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dectrace",
    version,
    about = "Enumerate traces of declarative processes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print every trace, one per line.
    Traces {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Generate linear extensions of different images in parallel.
        #[arg(long)]
        parallel: bool,
    },
    /// Print the number of traces without enumerating them.
    Count { file: PathBuf },
    /// Print each possible trace image with the covering pairs of its order.
    Possim { file: PathBuf },
    /// Print the constraint class of the process.
    Classify { file: PathBuf },
    /// Compare the trace set against brute-force enumeration.
    Check { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Runs the CLI with `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_INVALID, format!("write failed: {e}"))
    }
}

fn load(path: &Path) -> Result<DeclarativeProcess, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_INVALID, format!("{}: {e}", path.display())))?;
    parse_process(&text).map_err(|e| Failure::new(EXIT_INVALID, format!("{}: {e}", path.display())))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<u8, Failure> {
    match command {
        Command::Traces {
            file,
            format,
            parallel,
        } => {
            let p = load(&file)?;
            let exec = if parallel {
                Execution::Parallel
            } else {
                Execution::Sequential
            };
            let ts = traces_with(&p, exec);
            match format {
                Format::Text => {
                    for t in &ts {
                        writeln!(out, "{}", p.format_trace(t))?;
                    }
                }
                Format::Json => writeln!(out, "{}", traces_json(&p, &ts))?,
            }
        }
        Command::Count { file } => {
            let p = load(&file)?;
            let n = count_traces(&p).map_err(|e| Failure::new(EXIT_LIMIT, e.to_string()))?;
            writeln!(out, "{n}")?;
        }
        Command::Possim { file } => {
            let p = load(&file)?;
            for d in enumerate_possim(&p) {
                let covers = d.order.cover_pairs();
                let pairs = if covers.is_empty() {
                    "-".to_owned()
                } else {
                    covers
                        .iter()
                        .map(|&(i, j)| format!("({},{})", p.name(i), p.name(j)))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                writeln!(out, "{} | {pairs}", p.format_set(d.members))?;
            }
        }
        Command::Classify { file } => {
            let p = load(&file)?;
            writeln!(out, "{}", classify(&p))?;
        }
        Command::Check { file } => {
            let p = load(&file)?;
            return check(&p, out);
        }
    }
    Ok(EXIT_OK)
}

/// JSON array of traces, each an array of activity names.
pub fn traces_json(p: &DeclarativeProcess, ts: &[Trace]) -> String {
    let names: Vec<Vec<&str>> = ts
        .iter()
        .map(|t| t.iter().map(|i| p.name(i)).collect())
        .collect();
    serde_json::to_string(&names).expect("string arrays serialize")
}

fn check(p: &DeclarativeProcess, out: &mut dyn Write) -> Result<u8, Failure> {
    let expected = oracle::brute_force_traces(p).map_err(|e| {
        Failure::new(
            EXIT_LIMIT,
            format!("{e}; `check` supports at most {DEFAULT_LIMIT} activities"),
        )
    })?;
    let got = traces(p);
    let got_set: BTreeSet<&Trace> = got.iter().collect();
    let want_set: BTreeSet<&Trace> = expected.iter().collect();
    if got_set == want_set && got.len() == expected.len() {
        writeln!(
            out,
            "ok: {} traces match brute-force enumeration",
            got.len()
        )?;
        return Ok(EXIT_OK);
    }
    writeln!(
        out,
        "mismatch: pipeline produced {} traces, brute force {}",
        got.len(),
        expected.len()
    )?;
    for t in got_set.difference(&want_set) {
        writeln!(out, "+ {}", p.format_trace(t))?;
    }
    for t in want_set.difference(&got_set) {
        writeln!(out, "- {}", p.format_trace(t))?;
    }
    Ok(EXIT_MISMATCH)
}
