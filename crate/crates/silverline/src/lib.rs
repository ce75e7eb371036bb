//! IO companion to `silverline-core`: JSON/CSV wire formats, run
//! configuration, the CLI command implementations, and the acceptance suite.

pub mod acceptance;
pub mod commands;
pub mod config;
pub mod formats;
