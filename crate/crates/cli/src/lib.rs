//! Command-line front end: argument parsing, body files, reports and CSV.
//!
//! [`execute`] runs one invocation in-process and returns its exit code and
//! output streams; the binary is a thin wrapper around it.

pub mod args;
mod checks;
pub mod commands;
pub mod error;

use std::ffi::OsString;
use std::time::Instant;

use clap::Parser;

pub use args::Cli;
pub use checks::{cli_checks, CliCheck};
pub use commands::{load_body, Report, REGION_CSV_HEADER, SCAN_CSV_HEADER, SCHEMA_VERSION};
pub use error::CliError;

use commands::{dispatch, Primary};

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first), runs the command and writes any
/// `--out` file. Nothing is printed.
pub fn execute<I, S>(args: I) -> Execution
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Execution { code: 2, stdout: String::new(), stderr: text }
            } else {
                Execution { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let start = Instant::now();
    let done = match dispatch(&cli.command) {
        Ok(d) => d,
        Err(e) => return Execution { code: e.code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    let stamp = |mut r: Report| {
        r.argv = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
        r.wall_time_s = start.elapsed().as_secs_f64();
        serde_json::to_string_pretty(&r).expect("report serializes") + "\n"
    };
    let (file_text, stdout) = match (done.primary, &done.out) {
        (Primary::Report(r), Some(_)) => (Some(stamp(r)), String::new()),
        (Primary::Report(r), None) => (None, stamp(r)),
        (Primary::Csv(csv, r), Some(_)) => (Some(csv), stamp(r)),
        (Primary::Csv(csv, _), None) => (None, csv),
        (Primary::Text(t), _) => (None, t),
    };
    if let (Some(text), Some(path)) = (file_text, &done.out) {
        if let Err(e) = std::fs::write(path, text) {
            return Execution { code: 2, stdout, stderr: format!("error: {}: {e}\n", path.display()) };
        }
    }
    let stderr = done.message.map(|m| format!("{m}\n")).unwrap_or_default();
    Execution { code: done.code, stdout, stderr }
}

/// Caps the worker pool at `BSL_THREADS` when set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("BSL_THREADS") else {
        return Ok(());
    };
    let k: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&k| k > 0)
        .ok_or_else(|| CliError::input(format!("BSL_THREADS must be a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(k)
        .build_global()
        .map_err(|e| CliError::input(format!("cannot size the worker pool: {e}")))
}
