//! Command-line driver: `spectrum`, `reduce`, `eigfun`, `stationary`,
//! `verify` and `evolve`.
//!
//! Exit codes: 0 success, 2 validation error (a JSON error object on stdout,
//! no artifacts), 3 a numerical tolerance was missed (artifacts written),
//! 1 I/O failure.

pub mod commands;
pub mod config;
pub mod output;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::ffi::OsString;
use std::path::PathBuf;

pub use commands::{run_command, Command, Outcome};
pub use config::{resolve, Overrides, Resolved, RunConfig};

use crate::verify::VerifyError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] liouville_core::Error),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Config(_) => "ConfigError",
            CliError::Core(e) => e.kind(),
            CliError::Verify(e) => e.kind(),
            CliError::Io(_) => "IoError",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => EXIT_IO,
            _ => EXIT_VALIDATION,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_TOLERANCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "liouville", version, about = "Spectra, reduction and verification of quadratic oscillator master equations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Closed-form eigenvalues up to `m_max`.
    Spectrum(CommonArgs),
    /// Similarity transformation to KL form.
    Reduce(CommonArgs),
    /// One eigenfunction in closed form plus a sample grid.
    Eigfun(CommonArgs),
    /// Gaussian stationary state (optionally transformed by `steps`).
    Stationary(CommonArgs),
    /// Checks the closed forms against the truncated-basis oracle.
    Verify(CommonArgs),
    /// Time evolution with trace, hermiticity and decay-rate checks.
    Evolve(CommonArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// JSON configuration file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Model preset; overrides the configured model.
    #[arg(long, value_parser = ["kl", "cl", "hpz"])]
    pub preset: Option<String>,
    #[arg(long)]
    pub m_max: Option<u32>,
    #[arg(long)]
    pub basis_n: Option<usize>,
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl Sub {
    fn split(&self) -> (Command, &CommonArgs) {
        match self {
            Sub::Spectrum(a) => (Command::Spectrum, a),
            Sub::Reduce(a) => (Command::Reduce, a),
            Sub::Eigfun(a) => (Command::Eigfun, a),
            Sub::Stationary(a) => (Command::Stationary, a),
            Sub::Verify(a) => (Command::Verify, a),
            Sub::Evolve(a) => (Command::Evolve, a),
        }
    }
}

/// Reads the configuration and applies the flag overrides.
pub fn load(args: &CommonArgs) -> Result<Resolved, CliError> {
    let cfg = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
            RunConfig::from_json(&text)?
        }
        None => RunConfig::default(),
    };
    let flags = Overrides {
        preset: args.preset.clone(),
        m_max: args.m_max,
        basis_n: args.basis_n,
        tol: args.tol,
        out: args.out.clone(),
    };
    resolve(cfg, &flags)
}

fn execute(cmd: Command, args: &CommonArgs) -> Result<(Outcome, Vec<PathBuf>, Resolved), CliError> {
    let r = load(args)?;
    let outcome = run_command(cmd, &r)?;
    let paths = output::write_all(&r.out, &outcome.artifacts)?;
    Ok((outcome, paths, r))
}

/// Runs the program and returns its exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return EXIT_OK;
            }
            let obj = json!({ "error": { "kind": "UsageError", "message": e.to_string().trim_end() } });
            println!("{obj}");
            return EXIT_VALIDATION;
        }
    };
    let (cmd, args) = cli.command.split();
    match execute(cmd, args) {
        Ok((outcome, paths, r)) => {
            let files: Vec<String> = paths.iter().map(|p| p.display().to_string()).collect();
            let status = if outcome.pass { "ok" } else { "tolerance_failure" };
            println!("{}", json!({ "status": status, "command": cmd.name(), "tol": r.tol, "artifacts": files }));
            if outcome.pass {
                EXIT_OK
            } else {
                eprintln!("{}: a numerical tolerance was not met; see the artifacts", cmd.name());
                EXIT_TOLERANCE
            }
        }
        Err(e) => {
            println!("{}", e.to_json());
            e.exit_code()
        }
    }
}
