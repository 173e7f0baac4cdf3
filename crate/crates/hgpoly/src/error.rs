use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] hgpoly_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{context}: {message}")]
    Parse { context: String, message: String },
    #[error("{}", CorpusFailures(.0))]
    Corpus(Vec<(PathBuf, Error)>),
    #[error("invalid limit setting: {0}")]
    Limits(String),
}

impl Error {
    pub(crate) fn parse(context: impl Into<String>, message: impl fmt::Display) -> Self {
        Error::Parse { context: context.into(), message: message.to_string() }
    }

    /// Whether the failure is a size limit rather than bad input.
    pub fn is_limit(&self) -> bool {
        match self {
            Error::Core(hgpoly_core::Error::LimitExceeded { .. }) => true,
            Error::Corpus(failures) => !failures.is_empty() && failures.iter().all(|(_, e)| e.is_limit()),
            _ => false,
        }
    }
}

struct CorpusFailures<'a>(&'a [(PathBuf, Error)]);

impl fmt::Display for CorpusFailures<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} file(s) failed to load", self.0.len())?;
        for (path, e) in self.0 {
            write!(f, "\n  {}: {e}", path.display())?;
        }
        Ok(())
    }
}
