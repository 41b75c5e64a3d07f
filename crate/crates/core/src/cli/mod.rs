//! Command-line front end: `evolve`, `decompose`, `entropy`, and
//! `verify`, each driven by one JSON configuration document.
//!
//! Exit codes: `0` for success, including verification reports whose
//! conditions fail; `1` for configuration problems; `2` for numerical
//! breakdowns.

mod commands;
mod config;
mod report;

pub use commands::Options;
pub use config::{
    ChannelConfig, FormatDef, GeneratorConfig, RunConfig, Spacing, StateConfig, SystemConfig,
    TimeGridConfig, Tolerances,
};

use std::fmt;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// CLI failures split by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Malformed flags, config, or inputs (exit code 1).
    Config(String),
    /// Numerical breakdown during computation (exit code 2).
    Numerical(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "{msg}"),
            CliError::Numerical(msg) => write!(f, "{msg}"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "lindbloch",
    version,
    about = "Bloch-coordinate evolution, polar structure, and entropy laws of Lindblad maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evolve an initial state over the time grid; tabular output.
    Evolve(CommonArgs),
    /// Polar and canonical block structure; JSON report.
    Decompose(CommonArgs),
    /// Entropy trace with closed-form comparison; tabular output.
    Entropy(CommonArgs),
    /// Map and semigroup conformance conditions; JSON report.
    Verify(CommonArgs),
}

impl Command {
    fn args(&self) -> &CommonArgs {
        match self {
            Command::Evolve(a)
            | Command::Decompose(a)
            | Command::Entropy(a)
            | Command::Verify(a) => a,
        }
    }

    fn runner(&self) -> fn(&RunConfig, &Options) -> Result<String, CliError> {
        match self {
            Command::Evolve(_) => commands::evolve,
            Command::Decompose(_) => commands::decompose,
            Command::Entropy(_) => commands::entropy,
            Command::Verify(_) => commands::verify,
        }
    }
}

#[derive(Debug, clap::Args)]
struct CommonArgs {
    /// Path to the JSON run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Output path; falls back to `outputs.path` in the config, then to
    /// standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format for the tabular commands (default csv).
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Overrides the config's verification tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Worker threads for time-grid evaluation (default: rayon's choice).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for FormatDef {
    fn from(f: FormatArg) -> FormatDef {
        match f {
            FormatArg::Csv => FormatDef::Csv,
            FormatArg::Json => FormatDef::Json,
        }
    }
}

/// Parses `std::env` arguments, runs the subcommand, and returns the
/// process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(()) => 0,
        Err(CliError::Config(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(CliError::Numerical(msg)) => {
            eprintln!("numerical error: {msg}");
            2
        }
    }
}

fn execute(command: &Command) -> Result<(), CliError> {
    let args = command.args();
    if let Some(t) = args.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(CliError::Config(format!(
                "--tol must be a positive finite number, got {t}"
            )));
        }
    }
    let text = std::fs::read_to_string(&args.config).map_err(|e| {
        CliError::Config(format!("cannot read {}: {e}", args.config.display()))
    })?;
    let config = RunConfig::from_json(&text)?;
    let opts = Options {
        format: args.format.map(Into::into),
        tol: args.tol,
    };
    let runner = command.runner();
    let content = match args.threads {
        None => runner(&config, &opts)?,
        Some(0) => return Err(CliError::Config("--threads must be >= 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Config(format!("cannot build thread pool: {e}")))?
            .install(|| runner(&config, &opts))?,
    };
    let out_path = args.out.clone().or_else(|| {
        config
            .outputs
            .as_ref()
            .and_then(|o| o.path.as_ref().map(PathBuf::from))
    });
    match out_path {
        Some(path) => std::fs::write(&path, content)
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display())))?,
        None => {
            let mut stdout = std::io::stdout();
            stdout
                .write_all(content.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| CliError::Config(format!("cannot write output: {e}")))?;
        }
    }
    Ok(())
}
