//! `genstirling`: tables, A-sequences, Stirling functions, identity checks and
//! asymptotic studies for `S(n,k,α,β,r)`.
//!
//! Exit codes: 0 ok, 1 verification failed, 2 bad arguments, 3 degenerate
//! triple (or closed A-sequence with α = 0), 4 algorithms disagree,
//! 5 outside the convergence regime or on a Gamma pole, 6 series did not
//! converge.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod error;
mod input;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{aseq, asym, function, presets, table, verify};

#[derive(Parser, Debug)]
#[command(
    name = "genstirling",
    version,
    about = "Generalized Stirling numbers and functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Triangle of S(n,k) for rows 0..=n
    Table(table::TableArgs),
    /// A-sequence of the Riordan array
    Aseq(aseq::AseqArgs),
    /// S(γ, η; ε) for complex orders
    Function(function::FunctionArgs),
    /// Run identity checks
    Verify(verify::VerifyArgs),
    /// Exact values against the large-μ expansion
    Asym(asym::AsymArgs),
    /// List named triples
    Presets(presets::PresetsArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(err.exit_code() as u8);
        }
    };
    let result = match &cli.command {
        Command::Table(args) => table::run(args),
        Command::Aseq(args) => aseq::run(args),
        Command::Function(args) => function::run(args),
        Command::Verify(args) => verify::run(args),
        Command::Asym(args) => asym::run(args),
        Command::Presets(args) => presets::run(args),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code as u8)
        }
    }
}
