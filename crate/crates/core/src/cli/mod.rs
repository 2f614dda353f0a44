//! Command-line front end. `execute` parses arguments, runs one subcommand
//! and returns what the binary should print along with its exit code.
//!
//! Exit codes: 0 success, 1 property failure, 2 input error, 3 budget
//! exceeded, 4 theorem falsification.

mod commands;
pub mod report;
mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
pub use report::RunReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_FALSIFIED: i32 = 4;

/// Environment variable holding the default worker thread count.
pub const THREADS_ENV: &str = "DEDEKIND_THREADS";

#[derive(Debug, Parser)]
#[command(name = "dedekind", version, about = "Exact local Dedekind numbers by recursive partition")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads (falls back to $DEDEKIND_THREADS, then 1).
    #[arg(long, global = true, env = THREADS_ENV, default_value_t = 1)]
    pub threads: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count monotone maps on E^n or on a poset file.
    Count(CountArgs),
    /// Run the property suite for one theorem.
    Verify(VerifyArgs),
    /// Expand D_n as a polynomial in powers of two.
    Decompose(DecomposeArgs),
    /// Decide whether a subset completely partitions E^n.
    CheckComplete(CheckArgs),
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Count the whole cube E^n.
    #[arg(long, conflicts_with = "poset", required_unless_present = "poset")]
    pub n: Option<usize>,
    /// Count a poset given in the `n=<dim>` text format.
    #[arg(long)]
    pub poset: Option<PathBuf>,
    /// median-degree, max-comparability, layer-even or layer-odd.
    #[arg(long, default_value = "median-degree")]
    pub strategy: String,
    /// Split first on the pivot set in this poset file.
    #[arg(long, conflicts_with = "strategy")]
    pub pivots: Option<PathBuf>,
    #[arg(long)]
    pub no_cache: bool,
    /// Bound the memo table (least recently used entries are evicted).
    #[arg(long)]
    pub cache_capacity: Option<usize>,
    /// Seconds before giving up with exit code 3.
    #[arg(long, default_value_t = 600)]
    pub time_limit: u64,
    #[arg(long)]
    pub node_budget: Option<u64>,
    /// Largest cube dimension accepted by `--n`.
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    #[value(name = "1")]
    Partition,
    Corollary,
    #[value(name = "2")]
    Conditions,
    #[value(name = "3")]
    Construction,
    Lemma2,
    Lemma3,
    #[value(name = "4")]
    PowerOfTwo,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub theorem: Theorem,
    #[arg(long)]
    pub n: usize,
    /// Random cases for sampled suites.
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Cover reading for V3 predicates: ambient or induced.
    #[arg(long, default_value = "ambient")]
    pub mode: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = ParityArg::Even)]
    pub parity: ParityArg,
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Ambient dimension; defaults to the file's header.
    #[arg(long)]
    pub n: Option<usize>,
    /// Pivot subset in the `n=<dim>` text format.
    #[arg(long)]
    pub subset: PathBuf,
    #[arg(long, default_value = "ambient")]
    pub mode: String,
}

/// What a run prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Execution {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub(crate) struct Outcome {
    pub report: RunReport,
    pub text: String,
    pub csv: Option<String>,
    pub code: i32,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded(_) | Error::TooLarge { .. } => EXIT_BUDGET,
        Error::Falsified(_) => EXIT_FALSIFIED,
        _ => EXIT_INPUT,
    }
}

pub fn execute<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Execution { stdout: rendered, stderr: String::new(), code }
            } else {
                Execution { stdout: String::new(), stderr: rendered, code }
            };
        }
    };
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    run(&cli, &echo)
}

pub fn run(cli: &Cli, echo: &str) -> Execution {
    let started = std::time::Instant::now();
    let threads = cli.threads.max(1);
    let outcome = match &cli.command {
        Command::Count(a) => commands::count(a, threads),
        Command::Verify(a) => verify::verify(a, threads),
        Command::Decompose(a) => commands::decompose(a, threads),
        Command::CheckComplete(a) => commands::check_complete(a),
    };
    match outcome {
        Ok(mut out) => {
            out.report.command = echo.to_string();
            out.report.threads = threads;
            out.report.elapsed_ms = started.elapsed().as_millis() as u64;
            let stdout = match cli.format {
                Format::Json => out.report.to_json() + "\n",
                Format::Csv => out.csv.unwrap_or(out.text),
                Format::Text => out.text,
            };
            Execution {
                stdout,
                stderr: String::new(),
                code: out.code,
            }
        }
        Err(e) => Execution {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
        },
    }
}
