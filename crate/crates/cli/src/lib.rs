//! Library half of the `tsid` binary: argument parsing, validation into a
//! serializable [`RunConfig`], and execution.

pub mod config;
pub mod run;

pub use config::{parse_fraction, parse_sizes, Cli, ConfigError, Format, RunConfig};
pub use run::{execute, Outcome, EXIT_VIOLATED};
