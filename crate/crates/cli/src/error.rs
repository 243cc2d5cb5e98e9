use std::path::PathBuf;

use thiserror::Error;

use crate::dsl::SyntaxError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}: {1}")]
    Io(PathBuf, #[source] std::io::Error),
    #[error("{0}:{1}")]
    Syntax(PathBuf, SyntaxError),
    #[error("{0}")]
    Semantic(String),
    #[error("invalid σ-spec: {0}")]
    SigmaSyntax(String),
    #[error("σ-spec blocks overlap at prime {0}")]
    Overlap(u64),
    #[error("{0}: malformed table: {1}")]
    Table(PathBuf, String),
    #[error(transparent)]
    Group(#[from] sigmanil::Error),
}

impl CliError {
    /// 3 when a resource cap was hit, 2 for every other input problem.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Group(sigmanil::Error::CapExceeded { .. }) => 3,
            _ => 2,
        }
    }
}
