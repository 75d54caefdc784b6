//! Command line driver for `skein-core`: file formats, a persistent 6j
//! cache and the acceptance suite.

pub mod acceptance;
pub mod cache;
pub mod commands;
pub mod config;
pub mod error;
pub mod fixture;
pub mod serial;

pub use error::{CliError, CliResult};
