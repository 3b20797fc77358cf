//! `qt`: analyses of quantum tori from a JSON algebra description.
//!
//! Every invocation writes one JSON document to stdout. Exit status is 0
//! when all checks pass, 1 when a property check fails and 2 for usage,
//! configuration or input errors.

mod commands;
mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qtorus::dimension::KrullBudget;
use qtorus::skewmod::CheckOptions;
use serde::Serialize;

use commands::{CliError, ModuleArgs};

#[derive(Parser)]
#[command(name = "qt", version, about = "Exact analyses of quantum tori")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Center lattice and simplicity.
    Center { config: PathBuf },
    /// Krull dimension bounds with an isotropic witness.
    Krull {
        config: PathBuf,
        /// Entry bound for candidate vectors in the isotropic search.
        #[arg(long, default_value_t = 3)]
        bound: i64,
        /// Maximum number of sublattices expanded.
        #[arg(long, default_value_t = 20_000)]
        nodes: usize,
    },
    /// The cyclic module M(r) over a corank-one commutative subalgebra.
    Module {
        config: PathBuf,
        /// Unitary element; `X` denotes the class generator.
        #[arg(long)]
        r: String,
        /// Basis rows of C, as JSON or `1,0,0; 0,1,0`. Discovered when omitted.
        #[arg(long)]
        c: Option<String>,
        #[arg(long, default_value_t = 12)]
        kmax: usize,
        #[arg(long, default_value_t = 0.2)]
        tol: f64,
        /// Random samples for the torsion check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Seeded property suites.
    Verify {
        #[arg(long, value_parser = ["identities", "center", "finite-index", "krull", "skewmod", "all"])]
        suite: String,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Center { .. } => "center",
            Command::Krull { .. } => "krull",
            Command::Module { .. } => "module",
            Command::Verify { .. } => "verify",
        }
    }
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    command: &'static str,
    error: &'a CliError,
    pass: bool,
}

fn run(command: &Command) -> Result<(String, bool), CliError> {
    match command {
        Command::Center { config } => commands::center(config),
        Command::Krull {
            config,
            bound,
            nodes,
        } => {
            if *bound < 1 {
                return Err(CliError {
                    kind: "InvalidArgument".into(),
                    message: "--bound must be at least 1".into(),
                    field: Some("--bound".into()),
                });
            }
            commands::krull(
                config,
                KrullBudget {
                    entry_bound: *bound,
                    node_limit: *nodes,
                },
            )
        }
        Command::Module {
            config,
            r,
            c,
            kmax,
            tol,
            samples,
            seed,
        } => commands::module(&ModuleArgs {
            config,
            r,
            c: c.as_deref(),
            options: CheckOptions {
                k_max: *kmax,
                tol: *tol,
                samples: *samples,
                seed: *seed,
            },
        }),
        Command::Verify { suite, cases, seed } => commands::verify(suite, *cases, *seed),
    }
}

/// Closed pipes are not an error for a report writer.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((text, pass)) => {
            emit(&text);
            if pass {
                ExitCode::SUCCESS
            } else {
                eprintln!("{}: property check failed", cli.command.name());
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let report = ErrorReport {
                command: cli.command.name(),
                error: &e,
                pass: false,
            };
            emit(&serde_json::to_string(&report).expect("reports serialize"));
            eprintln!("error: {}", e.message);
            ExitCode::from(2)
        }
    }
}
