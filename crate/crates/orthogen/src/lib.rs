//! Batch driver over the `orthogen-core` registries: selection, parallel
//! verification, parameter sweeps and report files.

pub mod config;
pub mod error;
pub mod report;
pub mod run;
pub mod select;
pub mod sweep;

pub use config::{Format, RunConfig, Settings};
pub use error::CliError;
