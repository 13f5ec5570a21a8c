//! Command-line front end for `ncpspec`.
//!
//! [`config`] turns flags and an optional JSON file into a [`RunConfig`],
//! [`commands::build`] computes a [`Table`], and [`output`] renders it.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use commands::{build, run, Report};
pub use config::{Cli, Command, RunConfig, Task};
pub use error::{CliError, CliResult};
pub use output::{format_sig, Cell, Format, Table};
