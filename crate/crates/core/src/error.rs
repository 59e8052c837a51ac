use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    /// A line of an input file did not match its format. Lines are 1-based.
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("duplicate profile label: {0}")]
    DuplicateLabel(String),

    #[error("invalid profile label {0:?}: labels must be non-empty and free of tabs and newlines")]
    InvalidLabel(String),

    #[error("insufficient candidates for normalization")]
    InsufficientCandidates,

    #[error("no known profiles to rank against")]
    NoKnownProfiles,

    #[error("no strategies detected in query text")]
    DegenerateProfile,

    #[error("cannot average an empty set of {0} profiles")]
    EmptyCentroidSet(&'static str),

    #[error("seed word has no gloss: {0}")]
    SeedWithoutGloss(String),

    #[error("chain is broken at {word:?}: {reason}")]
    BrokenChain { word: String, reason: &'static str },

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("no words")]
    NoWords,

    #[error("document has no sentences")]
    EmptyDocument,

    #[error("invalid parameters: {0}")]
    InvalidSpec(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn malformed(line: usize, message: impl Into<String>) -> Self {
        Error::Malformed {
            line,
            message: message.into(),
        }
    }
}
