//! `bhix` command-line front end: argument parsing, graph loading,
//! canonical output rendering, and a structural validator for the JSON
//! documents the tool emits.

pub mod args;
pub mod emit;
pub mod input;
pub mod run;
pub mod schema;

use clap::Parser;
use std::ffi::OsString;
use std::io::Write;

pub use args::{Cli, Command, Format};
pub use run::{
    execute, EXIT_DISCONNECTED, EXIT_INTERNAL, EXIT_OK, EXIT_PARSE, EXIT_TOO_LARGE,
    EXIT_VIOLATION,
};

/// Parses `argv` and executes the command against the given streams;
/// returns the process exit code. Clap usage errors map to exit code 2,
/// `--help`/`--version` to 0.
pub fn run_from<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => execute(cli, out, err),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_PARSE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            }
        }
    }
}
