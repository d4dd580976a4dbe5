//! Command-line front end: argument definitions, initial-state parsing,
//! command dispatch and table output.

pub mod args;
pub mod error;
pub mod initial;
pub mod output;
pub mod run;

use std::fs::File;
use std::io::{BufWriter, Write};

pub use args::{Cli, Command, Engine, Format};
pub use error::{CliError, EXIT_CHECK_FAILED, EXIT_NUMERICAL, EXIT_USAGE};
pub use initial::{parse_initial, parse_initial_json, Initial, Named};
pub use output::{Table, TableError};
pub use run::{run, Outcome, MAX_QUBITS};

fn output_args(command: &Command) -> &args::OutputArgs {
    match command {
        Command::Probabilities(a) | Command::EmissionRate(a) => &a.output,
        Command::Spectrum(a) => &a.output,
        Command::PhotonMean(a) => &a.time.output,
        Command::CrossCheck(a) => &a.output,
    }
}

fn write_table<W: Write>(table: &Table, format: Format, out: W) -> Result<(), CliError> {
    let written = match format {
        Format::Csv => table.write_csv(out),
        Format::Json => table.write_json(out),
    };
    written.map_err(|e| match e {
        TableError::Io(io) => CliError::Io(io),
        TableError::Json(e) if e.is_io() => CliError::Io(e.into()),
        TableError::Csv(e) if e.is_io_error() => match e.into_kind() {
            csv::ErrorKind::Io(io) => CliError::Io(io),
            other => CliError::Numerical(format!("{other:?}")),
        },
        other => CliError::Numerical(other.to_string()),
    })
}

/// Runs a parsed command line and writes its table. Returns the process
/// exit code on success.
pub fn execute(cli: &Cli) -> Result<i32, CliError> {
    let outcome = run(&cli.command)?;
    let out = output_args(&cli.command);
    match &out.output {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| CliError::usage("--output", format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            write_table(&outcome.table, out.format, &mut w)?;
            w.flush()?;
        }
        None => write_table(&outcome.table, out.format, std::io::stdout().lock())?,
    }
    if let Some(line) = &outcome.summary {
        eprintln!("{line}");
    }
    Ok(if outcome.passed { 0 } else { EXIT_CHECK_FAILED })
}
