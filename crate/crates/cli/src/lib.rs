//! Command-line front end for `mpweyl`: the expression language, JSON
//! encodings and the subcommands.

pub mod commands;
pub mod error;
pub mod expr;
pub mod json;

pub use commands::{run, Outcome};
