//! Command-line front end: JSON space documents, the built-in catalog and
//! the verification suites.
//!
//! Exit codes: 0 success, 1 an identity failed, 2 input error, 3 a
//! mathematical precondition failed.

pub mod app;
pub mod catalog;
pub mod document;
pub mod random;
pub mod suites;

use reidemeister_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("precondition failed: {0}")]
    Precondition(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}
