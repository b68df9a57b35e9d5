//! Command-line front end for `symbreak-core`: graph input, JSON and CSV
//! reports, TOML manifests and the corpus runner.
//!
//! Exit codes: 0 success, 1 mismatch or failed check, 2 undefined
//! determining index, 3 search budget exhausted, 64 usage error, 65 bad
//! input data, 66 unreadable input file, 70 internal error, 74 write error.

pub mod args;
pub mod commands;
pub mod error;
pub mod input;
pub mod manifest;
pub mod report;

pub use commands::{run, Context};
pub use error::{CliError, CliResult};
