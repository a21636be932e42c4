//! Command-line surface of the necklace engine: every table and check as
//! text, JSON or CSV.

mod commands;
mod render;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

pub use commands::Suite;

pub type Result<T> = std::result::Result<T, Box<dyn std::error::Error>>;

#[derive(Parser, Debug)]
#[command(
    name = "necklace",
    version,
    about = "Exact computations in necklace Lie algebras"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Override the default degree bound of the command.
    #[arg(long, global = true)]
    pub max_degree: Option<usize>,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimensions of the graded pieces: closed formula against enumeration.
    Dims {
        #[arg(long, default_value_t = 1)]
        d: usize,
        /// Largest degree (default 12).
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Necklace bracket of two elements.
    Bracket {
        /// `canonical` or `ngl:N`.
        #[arg(long, default_value = "canonical")]
        rule: String,
        /// Number of symbol pairs for the canonical rule (default: inferred).
        #[arg(long)]
        d: Option<usize>,
        w1: String,
        w2: String,
    },
    /// Highest-weight multiplicities of the graded pieces (d = 1).
    Table1 {
        /// Largest degree (default 8).
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Poisson brackets of the 2×2 trace generators, audited.
    Table2,
    /// Centrality of c_n = [x,x*]^n and its 3×3 witness value.
    Center {
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Degree bound for the centrality check (default 6).
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
    },
    /// Run a named suite of invariant checks.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Symplectic leaf and Luna stratum of a point (X, Y, E, F, H).
    #[command(allow_negative_numbers = true)]
    Classify {
        #[arg(num_args = 5, value_names = ["X", "Y", "E", "F", "H"])]
        coords: Vec<String>,
        /// Zero tolerance for floating-point coordinates.
        #[arg(long, default_value_t = necklace_core::trace_calculus::DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Degree-one brackets of 𝔫𝔤𝔩_n against matrix commutators.
    Ngl {
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// sl_2 decomposition of one graded piece by brute force and formula.
    Decompose { n: usize },
}

/// Result of a command in all output shapes.
#[derive(Clone, Debug)]
pub struct Report {
    /// `false` when some check failed; the binary then exits with status 1.
    pub ok: bool,
    pub text: String,
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub fn run(cli: &Cli) -> Result<Report> {
    use commands::*;
    match &cli.command {
        Command::Dims { d, kmax } => dims(*d, kmax.or(cli.max_degree).unwrap_or(12)),
        Command::Bracket { rule, d, w1, w2 } => bracket(rule, *d, w1, w2),
        Command::Table1 { nmax } => table1(nmax.or(cli.max_degree).unwrap_or(8)),
        Command::Table2 => table2(),
        Command::Center {
            d,
            n,
            bound,
            lambda,
        } => center(*d, *n, bound.or(cli.max_degree).unwrap_or(6), lambda),
        Command::Verify { suite } => verify(*suite, cli.seed, cli.max_degree),
        Command::Classify { coords, tolerance } => classify(coords, *tolerance),
        Command::Ngl { n } => ngl(*n),
        Command::Decompose { n } => decompose(*n),
    }
}

/// Renders `report` in the requested format.
pub fn render(report: &Report, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => report.text.clone(),
        Format::Json => serde_json::to_string_pretty(&report.json)? + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&report.header)?;
            for row in &report.rows {
                w.write_record(row)?;
            }
            String::from_utf8(w.into_inner()?)?
        }
    })
}

/// Writes the rendered report to `--output` or standard output.
pub fn emit(cli: &Cli, report: &Report) -> Result<()> {
    let out = render(report, cli.format)?;
    match &cli.output {
        Some(path) => std::fs::write(path, out)?,
        None => std::io::stdout().write_all(out.as_bytes())?,
    }
    Ok(())
}
