//! Command-line front end for `nullkit-core`: the `.null` problem format,
//! JSON run reports, thread-parallel searches and the acceptance checks.

pub mod acceptance;
pub mod cli;
mod error;
pub mod parallel;
pub mod problem;
pub mod report;

pub use crate::error::{CliError, Result};
