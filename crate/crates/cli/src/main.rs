use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod render;

use args::{Cli, Command};

/// Exit codes shared by every subcommand.
pub mod exit {
    pub const OK: u8 = 0;
    pub const PROPERTY_FAILURE: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const IO: u8 = 3;
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version and 2 for usage errors
            e.exit();
        }
    };
    let outcome = match cli.command {
        Command::Ops(a) => commands::ops(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Expect(a) => commands::expect(&a),
        Command::Sweep(a) => commands::sweep(&a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(exit::USAGE)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(exit::IO)
        }
    }
}
