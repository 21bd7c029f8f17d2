//! `mosbench`: generate, convert, solve, verify and summarize
//! multi-objective shortest-path benchmarks.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Raised when a verification subcommand finds violations.
#[derive(Debug)]
pub struct VerificationFailed(pub usize);

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "verification failed with {} violation(s)", self.0)
    }
}

impl std::error::Error for VerificationFailed {}

/// Raised for unusable flags or input contents.
#[derive(Debug)]
pub struct Invalid(pub String);

impl std::fmt::Display for Invalid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Invalid {}

fn exit_code(err: &anyhow::Error) -> u8 {
    use mosbench::generators::GenError;
    use mosbench::ingest::IngestError;
    use mosbench::protocol::ProtocolError;
    use mosbench::solvers::SolveError;

    for cause in err.chain() {
        if cause.is::<VerificationFailed>() {
            return 3;
        }
        if cause.is::<Invalid>()
            || cause.is::<GenError>()
            || cause.is::<mosbench::mos::MosError>()
        {
            return 2;
        }
        if let Some(e) = cause.downcast_ref::<IngestError>() {
            return match e {
                IngestError::File { .. } | IngestError::Io(_) => 1,
                _ => 2,
            };
        }
        if let Some(e) = cause.downcast_ref::<SolveError>() {
            return match e {
                SolveError::QueryOutOfRange(_)
                | SolveError::EpsilonDimension { .. }
                | SolveError::TargetOutOfRange(_) => 2,
                _ => 1,
            };
        }
        if let Some(e) = cause.downcast_ref::<ProtocolError>() {
            return match e {
                ProtocolError::InvalidGrid(_)
                | ProtocolError::InvalidRecord(_)
                | ProtocolError::QueryMismatch(..)
                | ProtocolError::DimensionMismatch(..)
                | ProtocolError::Mos(_) => 2,
                ProtocolError::Solve(SolveError::QueryOutOfRange(_))
                | ProtocolError::Solve(SolveError::EpsilonDimension { .. }) => 2,
                _ => 1,
            };
        }
    }
    1
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(cmd) => commands::generate(cmd),
        Command::Convert(cmd) => commands::convert(cmd),
        Command::Solve(cmd) => commands::solve(cmd),
        Command::Verify(cmd) => commands::verify(cmd),
        Command::Stats(cmd) => commands::stats(cmd),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
