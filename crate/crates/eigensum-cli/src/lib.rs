//! Command-line front end for the `eigensum` library.
//!
//! Every subcommand writes one machine-readable artifact (JSON, JSON lines,
//! or CSV) to stdout or to `--output`, stamped with a reproducibility header:
//! tool version, resolved semantic arguments, seed, and the tolerance
//! constants in force. Running the same command twice produces byte-identical
//! artifacts; the output path itself is never part of the header.
//!
//! Exit codes separate "the tool disagreed" from "the tool broke":
//!
//! * `0` - ran to completion and every certified gate passed,
//! * `1` - ran to completion but a gate failed (a verify suite reported a
//!   violated inequality, a construction certificate did not pass, or an
//!   amplification chain did not hold),
//! * `2` - usage, input, parse, or solver error.

mod args;
mod render;
mod run;
mod suites;

pub use args::Cli;

use clap::error::ErrorKind;
use clap::Parser;
use std::io::Write;

/// An operational failure: bad usage, unreadable input, or a solver error.
/// Always maps to exit code 2; gate failures are not errors.
#[derive(Debug)]
pub struct CliError(String);

impl CliError {
    pub fn new(msg: impl Into<String>) -> CliError {
        CliError(msg.into())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<eigensum::Error> for CliError {
    fn from(e: eigensum::Error) -> CliError {
        CliError(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> CliError {
        CliError(e.to_string())
    }
}

/// Parses `args` (including `argv[0]`) and runs the tool, writing the
/// artifact to `out` and diagnostics to `err`. Returns the process exit
/// code. Library shape so tests can drive the binary in process.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match run::dispatch(&cli, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
