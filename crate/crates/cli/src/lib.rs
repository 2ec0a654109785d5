//! Library side of the `flatdual` command-line tool: argument types, the
//! subcommand implementations and the report format.

mod args;
mod commands;
pub mod point;
pub mod report;

pub use args::{Cli, Command, DerivativesArgs, FieldArgs, Format};
pub use commands::{derivatives, field_operator, nest, run, CliError};
pub use report::{JsonComplex, JsonReal, Report};

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 2;
    pub const NON_FINITE: u8 = 3;
}
