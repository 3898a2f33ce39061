use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("the trivial group has no maximal subgroups")]
    TrivialGroup,

    #[error("the avoidance game on the trivial group cannot be played")]
    UnplayableGame,

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("parse error at position {position}: expected {expected}")]
    Parse { position: usize, expected: String },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("structure digraph has a cycle through class {0}")]
    Cycle(usize),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("nim component {0} exceeds the sanity bound")]
    NimOverflow(u32),

    #[error("failed to read cayley file {path}: {source}")]
    CayleyIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed cayley file {path}: {source}")]
    CayleyJson {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
