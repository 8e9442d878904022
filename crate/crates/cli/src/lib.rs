//! Configuration, tables, SVG output and subcommands for the `ssvis` binary.

pub mod args;
pub mod cli;
pub mod commands;
pub mod config;
pub mod csv;
pub mod error;
pub mod render;

pub use cli::{execute, Cli, Command};
pub use config::{parse_config, IfsConfig};
pub use error::CliError;
