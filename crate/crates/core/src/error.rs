use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("track count mismatch: expected {expected}, got {got}")]
    TrackCountMismatch { expected: usize, got: usize },

    #[error("track signatures differ")]
    SignatureMismatch,

    #[error("digit {digit} is not in the alphabet of track {track}")]
    DigitOutOfAlphabet { digit: u8, track: usize },

    #[error("cannot project away the only track")]
    ProjectOnlyTrack,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("synthesis failed: {0}")]
    Synthesis(String),

    #[error("relation is not functional for input {0:?}")]
    NotFunctional(Vec<String>),

    #[error("invalid {system} word \"{word}\": {reason}")]
    InvalidWord {
        system: &'static str,
        word: String,
        reason: String,
    },

    #[error("unknown automaton name \"{0}\"")]
    UnknownName(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
