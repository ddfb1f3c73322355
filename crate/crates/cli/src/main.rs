use std::process::ExitCode;
use std::time::Duration;

use atlas_cli::context::{Context, Target};
use atlas_cli::derive::derive;
use atlas_cli::render::Format;
use atlas_cli::report::CheckError;
use atlas_cli::suites::{verify, Scope};
use atlas_cli::tables::{table, TableName};
use atlas_core::cancel::CancelToken;
use atlas_core::random::DEFAULT_SEED;
use clap::{Parser, Subcommand};

/// Exact verification of the composition-algebra, Jordan-algebra and
/// exceptional symmetric space catalog.
#[derive(Parser)]
#[command(name = "atlas", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for every randomized check.
    #[arg(long, global = true, env = "ATLAS_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Number of random pairs per sampled identity.
    #[arg(long, global = true, default_value_t = 1000)]
    trials: usize,
    /// Seconds allowed for derivation-algebra computations.
    #[arg(long, global = true, default_value_t = 300.0)]
    budget: f64,
    /// Corrupts one atlas record before verifying, to exercise the failure path.
    #[arg(long, global = true, hide = true)]
    inject_corrupted_record: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        scope: Scope,
    },
    /// Print a catalog table.
    Table {
        #[arg(value_enum)]
        name: TableName,
        /// Magic square level (2 or 3).
        #[arg(long, default_value_t = 3)]
        level: u8,
    },
    /// Compute a derivation algebra.
    Derive {
        #[arg(value_enum)]
        target: Target,
        /// Dump the canonical basis matrices as JSON.
        #[arg(long)]
        emit_basis: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !(cli.budget.is_finite() && cli.budget >= 0.0) {
        eprintln!("error: --budget must be a non-negative number of seconds");
        return ExitCode::from(2);
    }
    let cancel = CancelToken::with_budget(Duration::from_secs_f64(cli.budget));
    let mut ctx = Context::new(cli.seed, cli.trials, cancel);
    ctx.inject_corrupted_record = cli.inject_corrupted_record;

    let result = match cli.command {
        Command::Verify { scope } => {
            let report = verify(&ctx, scope);
            print!("{}", report.render(cli.format));
            return if report.passed { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
        Command::Table { name, level } => table(&ctx, name, cli.format, level),
        Command::Derive { target, emit_basis } => derive(&ctx, target, emit_basis).map(|d| d.render(cli.format)),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CheckError::Budget) => {
            eprintln!("skipped (budget): raise --budget");
            ExitCode::from(1)
        }
        Err(CheckError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
