//! `fvn` drives the workspace from the shell: it compiles `net`/`ts` models
//! to their algebraic form, quotients them, checks bisimulation, replaces
//! declared blocks by their quotients and runs the result. Every command
//! writes JSON artifacts next to a short stdout summary.
//!
//! Exit codes: 0 on success (verdicts are data, not errors), 1 when the
//! input is at fault, 2 when the tool itself fails.

mod artifact;
mod commands;
mod error;
mod model;

use clap::{Args, Parser, Subcommand, ValueEnum};
use error::CliError;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "fvn", version, about = "Compile, quotient and aggregate finite-valued networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile a model to its algebraic state-space form
    Compile(ModelArgs),
    /// Quotient a compiled model by its observation partition
    Quotient(ModelArgs),
    /// Check whether the observation partition is a bisimulation
    Check {
        #[command(flatten)]
        model: ModelArgs,
        /// Horizon of the output-language comparison
        #[arg(long, default_value_t = 3)]
        horizon: usize,
    },
    /// Replace every declared block of a network by its quotient
    Aggregate(ModelArgs),
    /// Run an aggregated system written by `aggregate`
    Simulate(SimulateArgs),
    /// Render a model as a DOT graph
    ExportDot(ModelArgs),
}

#[derive(Args)]
struct ModelArgs {
    /// Model file: a `net` network or a `ts` transition system
    model: PathBuf,
    /// Directory artifacts are written to
    #[arg(short, long, default_value = ".")]
    out_dir: PathBuf,
}

#[derive(Args)]
struct SimulateArgs {
    /// Aggregate artifact (the `.agg.json` written by `aggregate`)
    aggregate: PathBuf,
    /// Comma-separated composite control indices, one per step
    #[arg(long, value_delimiter = ',', conflicts_with = "horizon")]
    inputs: Option<Vec<usize>>,
    /// Steps to run under the all-ones input instead of `--inputs`
    #[arg(long, default_value_t = 3)]
    horizon: usize,
    /// Comma-separated start state: one class per block, then one level per
    /// residual node (all 1 when omitted)
    #[arg(long, value_delimiter = ',')]
    init: Option<Vec<usize>>,
    /// nondet walks every branch, prob samples one trajectory
    #[arg(long, value_enum, default_value_t = Mode::Nondet)]
    mode: Mode,
    /// Sample seed (prob mode)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Branch cap (nondet mode)
    #[arg(long, default_value_t = 4096)]
    cap: usize,
    /// Directory artifacts are written to
    #[arg(short, long, default_value = ".")]
    out_dir: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Nondet,
    Prob,
}

fn run() -> Result<(), CliError> {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => return Err(CliError::BadArg(e.to_string())),
        Err(e) => {
            // --help and --version land here
            print!("{e}");
            return Ok(());
        }
    };
    match cli.command {
        Command::Compile(a) => commands::compile(&a.model, &a.out_dir),
        Command::Quotient(a) => commands::quotient(&a.model, &a.out_dir),
        Command::Check { model, horizon } => commands::check(&model.model, horizon, &model.out_dir),
        Command::Aggregate(a) => commands::aggregate(&a.model, &a.out_dir),
        Command::Simulate(a) => commands::simulate(&a),
        Command::ExportDot(a) => commands::export_dot(&a.model, &a.out_dir),
    }
}

fn main() {
    std::panic::set_hook(Box::new(|_| {}));
    let code = match std::panic::catch_unwind(run) {
        Ok(Ok(())) => 0,
        Ok(Err(e)) => {
            eprintln!("{}", e.stderr_json());
            1
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            eprintln!("{}", serde_json::json!({ "error": format!("internal error: {msg}") }));
            2
        }
    };
    std::process::exit(code);
}
