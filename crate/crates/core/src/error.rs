use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported language: {0}")]
    UnsupportedLanguage(String),
    #[error("source unit `{0}` is empty")]
    EmptyInput(String),
    #[error("parser produced no tree for `{0}`")]
    CatastrophicParseFailure(String),
    #[error("occurrence spans overlap at byte {0}")]
    OverlappingSpans(usize),
    #[error("identifier range {lo}..={hi} is empty")]
    EmptyRange { lo: u64, hi: u64 },
    #[error("replacement token `{0}` has no dictionary entry")]
    UnknownReplacementToken(String),
    #[error("token id {id} is out of range for a vocabulary of {size}")]
    IdOutOfRange { id: u32, size: usize },
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("malformed vocabulary file: {0}")]
    MalformedVocabFile(String),
    #[error("malformed BPE model file: {0}")]
    MalformedModelFile(String),
    #[error("malformed change dictionary: {0}")]
    MalformedDictionary(String),
    #[error("root directory not found: {}", .0.display())]
    RootNotFound(PathBuf),
    #[error("perplexity normalizer is zero")]
    ZeroNormalizer,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
