//! Command-line front end: file formats, grid evaluation and lump detection.

pub mod commands;
pub mod emit;
pub mod error;
pub mod files;
pub mod grid;
pub mod lumps;

pub use error::{CliError, Result};
