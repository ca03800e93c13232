//! Command-line front end.
//!
//! Exit codes: 0 all checks pass, 1 verification or optimality mismatch,
//! 2 usage or parse error, 3 oracle budget exhausted with no other failure.

mod commands;
mod io;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use io::{parse_range, LabelingFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "circdom",
    version,
    about = "Optimal {k}-domination on circulant graphs G(n; {1..t})"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, conflicts_with = "diffs")]
    pub t: Option<usize>,
    /// Difference set as a comma separated list.
    #[arg(long, value_delimiter = ',')]
    pub diffs: Option<Vec<usize>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the optimal labeling for G(n; {1..t}) and demand k.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check a labeling file (JSON: {n, t or diffs, k, labels}).
    Verify {
        /// Labeling file; `-` reads stdin.
        #[arg(long, default_value = "-")]
        input: PathBuf,
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        k: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compute the exact {k}-domination number by exhaustive search.
    Oracle {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = crate::oracle::DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare construction, formula and optionally the oracle over a grid.
    Sweep {
        #[arg(long)]
        n_range: String,
        /// Defaults to every admissible t for each n.
        #[arg(long)]
        t_range: Option<String>,
        #[arg(long)]
        k_range: String,
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = crate::oracle::DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print the Euclidean recursion producing C1(a, b) and C2(a, b).
    Trace {
        a: usize,
        b: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print the edge list of a circulant graph.
    ExportGraph {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Domain(#[from] crate::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(crate::Error::BudgetExceeded { .. }) => EXIT_BUDGET,
            _ => EXIT_USAGE,
        }
    }
}

/// Runs a parsed command, writing its report to `out` and reading labeling
/// input from `stdin` when requested. Returns the exit code.
pub fn run(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, CliError> {
    let (report, code, output) = match cli.command {
        Command::Construct { n, t, k, out } => {
            let (r, c) = commands::construct(n, t, k, out.format.unwrap_or(Format::Json))?;
            (r, c, out.output)
        }
        Command::Verify {
            input,
            graph,
            k,
            out,
        } => {
            let text = if input.as_os_str() == "-" {
                let mut s = String::new();
                stdin.read_to_string(&mut s)?;
                s
            } else {
                std::fs::read_to_string(&input)?
            };
            let (r, c) = commands::verify(&text, &graph, k, out.format.unwrap_or(Format::Text))?;
            (r, c, out.output)
        }
        Command::Oracle {
            graph,
            k,
            budget,
            out,
        } => {
            let (r, c) = commands::oracle(&graph, k, budget, out.format.unwrap_or(Format::Text))?;
            (r, c, out.output)
        }
        Command::Sweep {
            n_range,
            t_range,
            k_range,
            oracle,
            budget,
            out,
        } => {
            let (r, c) = commands::sweep(
                &n_range,
                t_range.as_deref(),
                &k_range,
                oracle.then_some(budget),
                out.format.unwrap_or(Format::Csv),
            )?;
            (r, c, out.output)
        }
        Command::Trace { a, b, out } => {
            let (r, c) = commands::trace(a, b, out.format.unwrap_or(Format::Text))?;
            (r, c, out.output)
        }
        Command::ExportGraph { graph, out } => {
            let (r, c) = commands::export_graph(&graph, out.format.unwrap_or(Format::Text))?;
            (r, c, out.output)
        }
    };
    match output {
        Some(path) => std::fs::write(path, report)?,
        None => out.write_all(report.as_bytes())?,
    }
    Ok(code)
}

/// Parses `args` (including the program name), runs the command against
/// the process's stdin/stdout and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    match run(cli, &mut stdin.lock(), &mut stdout.lock()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
