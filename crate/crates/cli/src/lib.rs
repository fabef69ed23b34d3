//! Command-line front end for `goursat-core`.
//!
//! Relations compose in diagram order: `relcalc compose -R r -S s` relates
//! `x` to `z` when `x R y S z`, the relation usually written `SR`.

pub mod algebra;
pub mod connector;
mod input;
pub mod internal;
mod output;
pub mod relcalc;
pub mod theorems;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

pub use output::Output;

/// Exit code for a successful computation or a verified theorem.
pub const EXIT_OK: i32 = 0;
/// Exit code when a theorem check finds a certificate on a Goursat instance.
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
/// Exit code for usage, input and parse errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "goursat-kit", version, about = "Finite models for relations, connectors and Goursat categories")]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for the theorem harness (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Relations between finite sets.
    #[command(subcommand)]
    Relcalc(relcalc::Cmd),
    /// Finite algebras and their congruences.
    #[command(subcommand)]
    Algebra(algebra::Cmd),
    /// Connectors and centralizing double relations.
    #[command(subcommand)]
    Connector(connector::Cmd),
    /// Reflexive graphs, internal categories and groupoids.
    #[command(subcommand)]
    Internal(internal::Cmd),
    /// Finite-instance checks of the Goursat results.
    #[command(subcommand)]
    Theorems(theorems::Cmd),
}

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit code. Reports go to stdout, diagnostics to stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.json));
            out.code
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}

/// Runs a parsed command without printing.
pub fn execute(cli: &Cli) -> anyhow::Result<Output> {
    match &cli.command {
        Command::Relcalc(cmd) => relcalc::run(cmd),
        Command::Algebra(cmd) => algebra::run(cmd),
        Command::Connector(cmd) => connector::run(cmd),
        Command::Internal(cmd) => internal::run(cmd),
        Command::Theorems(cmd) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cli.threads.unwrap_or(0))
                .build()?;
            pool.install(|| theorems::run(cmd))
        }
    }
}
