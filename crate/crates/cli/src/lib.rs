//! Library half of the `hampow` binary: argument tree, dispatch, and the
//! wire types of the reports it emits. Kept as a library so integration
//! tests can parse outputs back into the emitting types.
//!
//! Exit codes: 0 success (including --help/--version), 1 domain or usage
//! error, 2 resource bound exceeded, 3 internal invariant breach.

pub mod args;
pub mod exec;
pub mod render;
pub mod reports;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;

use hampow_core::Error;

/// Parses `argv`, runs the command, prints its output, and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Requested help/version is success; anything else is usage.
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match exec::execute(&cli) {
        Ok(out) => {
            print!("{out}");
            0
        }
        Err(err) => {
            eprintln!("{err}");
            exit_code(&err)
        }
    }
}

/// Stable mapping from error class to process exit code.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) => 1,
        Error::Resource(_) => 2,
        Error::Internal(_) => 3,
    }
}
