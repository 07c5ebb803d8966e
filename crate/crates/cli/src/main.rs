//! `gitq`: GIT-fans, chambers and bunch geometry from weight data.

mod commands;
mod input;
mod oracle;
mod svg;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "gitq", version, about = "GIT-fans and Mori dream space geometry from weight data")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Summary of a weight system.
    Info(Options),
    /// The GIT-fan.
    Fan(Options),
    /// The walls of the GIT-fan.
    Walls(Options),
    /// The GIT-cone of a character.
    Chamber(Options),
    /// Maximal 2-connected collections of orbit cones.
    TwoMaximal(Options),
    /// The bunch of a deep character and its geometry report.
    Bunch(Options),
    /// List the corpus, or print one problem file.
    Corpus(Options),
    /// Validate a problem.
    Check(Options),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Clone)]
pub struct Options {
    /// Corpus family or shipped problem name.
    #[arg(long)]
    corpus: Option<String>,
    /// Family parameter n.
    #[arg(long)]
    n: Option<i64>,
    /// Family parameter m.
    #[arg(long)]
    m: Option<i64>,
    /// Problem file.
    #[arg(long)]
    input: Option<std::path::PathBuf>,
    /// Character, comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    chi: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write a figure of the fan (rank 2, or rank 3 with --slice).
    #[arg(long)]
    svg: Option<std::path::PathBuf>,
    /// Transversal plane a1,...,ak=b for figures of rank-3 fans.
    #[arg(long, allow_hyphen_values = true)]
    slice: Option<String>,
    /// Cross-check results against brute-force computations.
    #[arg(long)]
    check_oracle: bool,
}

/// Usage errors exit with 2, domain errors with 1.
pub enum Failure {
    Usage(String),
    Domain(String),
}

impl From<gitq::Error> for Failure {
    fn from(e: gitq::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("GITQ_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("GITQ_THREADS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| match &cli.verb {
        Verb::Info(o) => commands::info(o),
        Verb::Fan(o) => commands::fan(o),
        Verb::Walls(o) => commands::walls(o),
        Verb::Chamber(o) => commands::chamber(o),
        Verb::TwoMaximal(o) => commands::two_maximal(o),
        Verb::Bunch(o) => commands::bunch(o),
        Verb::Corpus(o) => commands::corpus(o),
        Verb::Check(o) => commands::check(o),
    });
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
