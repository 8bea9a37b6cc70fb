use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod error;
mod files;

/// Fractional-dimensional Fourier series toolkit.
#[derive(Debug, Parser)]
#[command(name = "ffs", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Extract Fourier coefficients from samples or a built-in waveform
    Analyze(commands::AnalyzeArgs),
    /// Rotate coefficients into fractional order alpha (or back with --inverse)
    Rotate(commands::RotateArgs),
    /// Evaluate a series at order alpha over one period
    Synthesize(commands::SynthesizeArgs),
    /// Fractional derivative of a series, as a curve plus its coefficients
    Fracderiv(commands::FracDerivArgs),
    /// Run the seeded property suite and print a pass/fail table
    Verify(commands::VerifyArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(args) => commands::analyze(args),
        Command::Rotate(args) => commands::rotate(args),
        Command::Synthesize(args) => commands::synthesize(args),
        Command::Fracderiv(args) => commands::fracderiv(args),
        Command::Verify(args) => commands::run_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("ffs: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
