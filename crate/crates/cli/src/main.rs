//! `cylindric`: enumeration, series expansion, bijections and verification.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 input outside the image of the doubled-odd map.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cylindric_core::{PartFilter, Profile};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "cylindric", version, about = "Cylindric partitions and their generating functions")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    Borodin,
    F11,
    F20,
    F11z,
    D11,
    D20,
    D11t,
    D20t,
    Oc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapFlavor {
    /// Distinct-odd β for (1,1), distinct-even β for (2,0).
    Plain,
    /// The doubled map on all-odd (1,1) input.
    Odd,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List cylindric partitions of one weight, one JSON object per line.
    Enumerate {
        #[arg(long, default_value = "1,1")]
        profile: Profile,
        #[arg(long)]
        weight: u64,
        #[arg(long, default_value_t = PartFilter::None)]
        filter: PartFilter,
    },
    /// Counts for weights 0..=max-weight.
    Count {
        #[arg(long, default_value = "1,1")]
        profile: Profile,
        #[arg(long)]
        max_weight: u64,
        #[arg(long, default_value_t = PartFilter::None)]
        filter: PartFilter,
        /// Split counts by largest part.
        #[arg(long)]
        refined: bool,
    },
    /// Expand a named generating function.
    Series {
        #[arg(long, value_enum)]
        name: SeriesName,
        /// Profile for `borodin`.
        #[arg(long, default_value = "1,1")]
        profile: Profile,
        #[arg(long, env = "CYLINDRIC_ORDER", default_value_t = 20)]
        order: usize,
    },
    /// Forward bijection on JSON lines read from stdin.
    Map {
        #[arg(long, default_value = "1,1")]
        profile: Profile,
        #[arg(long, value_enum, default_value_t = MapFlavor::Plain)]
        flavor: MapFlavor,
        /// Attach the move log.
        #[arg(long)]
        trace: bool,
    },
    /// Inverse bijection on pair JSON lines read from stdin.
    Unmap {
        /// Require the strict reading of the doubled-odd length constraint.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        trace: bool,
    },
    /// Run verification checks.
    Verify {
        /// A check group name, or `all`.
        #[arg(long, default_value = "all")]
        check: String,
        /// Series order; enumeration orders are capped by it.
        #[arg(long, env = "CYLINDRIC_ORDER")]
        order: Option<usize>,
    },
    /// All-odd series against enumeration and pair counts.
    OcTable {
        #[arg(long, default_value_t = 25)]
        max_weight: u64,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    NotInImage(String),
    #[error("{0} check(s) failed")]
    VerificationFailed(usize),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::VerificationFailed(_) => 1,
            CliError::Invalid(_) | CliError::Io(_) => 2,
            CliError::NotInImage(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::VerificationFailed(_) => "verification-failed",
            CliError::Invalid(_) => "invalid-input",
            CliError::Io(_) => "io",
            CliError::NotInImage(_) => "not-in-image",
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let line = match cli.format {
                Format::Json => {
                    serde_json::json!({"error": e.kind(), "reason": e.to_string()}).to_string()
                }
                Format::Text => format!("error[{}]: {e}", e.kind()),
            };
            eprintln!("{line}");
            ExitCode::from(e.code())
        }
    }
}
