//! Command-line front end: ephemeris files, comparisons against direct
//! integration and the correction-path benchmark.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use config::{parse_override, Config, Override};
pub use error::{CliError, Result};
