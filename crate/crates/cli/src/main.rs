//! `grpdim`: strong metric dimension of power-type graphs of finite groups.

mod args;
mod compute;
mod engines;
mod export;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// How a successful run ended.
pub enum Outcome {
    Clean,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => compute::run(a),
        Command::Verify(a) => verify::run(a),
        Command::Export(a) => export::run(a),
    };
    match result {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
