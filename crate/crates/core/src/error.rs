use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} exceeds the configured limit of {limit} (reached {reached})")]
    SizeLimit {
        what: &'static str,
        limit: u128,
        reached: u128,
    },

    #[error("oracle budget exceeded: needs about {needed} evaluations, budget is {budget}")]
    Budget { needed: u128, budget: u128 },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("value is not a rational integer (residual {residual})")]
    Integrality { residual: String },

    #[error("character table {table} is inconsistent: {reason}")]
    CorruptTable { table: String, reason: String },

    #[error("no counting route for {0}")]
    NoRoute(String),

    #[error("counting routes disagree for {what}: {left} vs {right}")]
    CrossCheck {
        what: String,
        left: String,
        right: String,
    },

    #[error("consistency check failed: {0}")]
    Consistency(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {reason}", path.display())]
    Schema { path: PathBuf, reason: String },
}

impl Error {
    /// True for errors that signal an upstream defect rather than bad input.
    pub fn is_consistency(&self) -> bool {
        matches!(
            self,
            Error::Integrality { .. }
                | Error::CorruptTable { .. }
                | Error::CrossCheck { .. }
                | Error::Consistency(_)
                | Error::Internal(_)
        )
    }
}
