use std::io::ErrorKind;
use std::process::ExitCode;

use clap::Parser;
use wgqed_cli::{execute, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        // A reader that stops early (`| head`) is not an error.
        Err(CliError::Io(e)) if e.kind() == ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
