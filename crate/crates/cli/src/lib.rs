//! File formats, reports and the command driver behind the `qorder`
//! binary.

pub mod builtin;
pub mod formats;
pub mod report;
pub mod run;
pub mod verify;

pub use run::{run, Command, RunConfig, RunOutcome};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(#[from] quandle_order::Error),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(quandle_order::Error::ResourceLimit { .. }) => 3,
            _ => 2,
        }
    }
}
