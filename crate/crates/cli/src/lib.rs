//! Library side of the `qconcepts` command-line tool.

pub mod commands;
pub mod config;
pub mod error;
pub mod format;

pub use error::CliError;
