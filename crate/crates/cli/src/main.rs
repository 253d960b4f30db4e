//! `leoquat`: sequences, quaternions, zero-divisor classification, Pisano
//! periods and identity verification from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use leoquat::sequences::SequenceKind;

use crate::output::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] leoquat::Error),
    #[error("output: {0}")]
    Output(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Library(_) => 2,
            CliError::Output(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "leoquat",
    version,
    about = "Leonardo-family sequences and their quaternions"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Order p of the sequence family.
    #[arg(short = 'p', long = "p", global = true, value_name = "P")]
    pub p: Option<u32>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FamilyArg {
    /// fibonacci, lucas, leonardo, lucas-leonardo or francois.
    #[arg(long)]
    pub family: SequenceKind,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print sequence terms.
    Seq {
        #[command(flatten)]
        family: FamilyArg,
        /// Index `N` or inclusive range `A..B`.
        #[arg(short = 'n', value_name = "RANGE")]
        n: String,
    },
    /// Print quaternion terms, their norms and, mod q, their invertibility.
    Quat {
        #[command(flatten)]
        family: FamilyArg,
        /// Index `N` or inclusive range `A..B`.
        #[arg(short = 'n', value_name = "RANGE")]
        n: String,
        /// Work over F_q.
        #[arg(long = "mod", value_name = "Q", conflicts_with = "exact")]
        modulus: Option<u64>,
        /// Work over the integers (default).
        #[arg(long)]
        exact: bool,
    },
    /// Classify the zero divisors of a quaternion family over F_q.
    Classify {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(short = 'q', long = "q", visible_alias = "mod", value_name = "Q")]
        q: u64,
    },
    /// Fibonacci numbers modulo m: period and full cycle.
    Pisano {
        #[arg(value_name = "M")]
        m: u64,
    },
    /// Run the identity registry.
    Verify {
        #[arg(long, default_value_t = leoquat::verifier::DEFAULT_P_MAX)]
        p_max: u32,
        #[arg(long, default_value_t = leoquat::verifier::DEFAULT_N_MAX)]
        n_max: i64,
        /// Restrict to these identity ids (repeatable).
        #[arg(long = "id", value_name = "ID")]
        ids: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
