use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("word `{0}` is not in the language")]
    WordNotInLanguage(String),

    #[error("depth exceeded: need words of length {needed}, table holds up to {max_n}")]
    DepthExceeded { needed: usize, max_n: usize },

    #[error("window `{0}` is not in the rule's domain")]
    WindowNotInDomain(String),

    #[error("alphabet mismatch between block codes")]
    AlphabetMismatch,

    #[error("block code was built against a different language table")]
    TableMismatch,

    #[error("substitution is not primitive")]
    NonPrimitiveSubstitution,

    #[error("seed `{0}` is not primitive")]
    NonPrimitiveSeed(String),

    #[error("duplicate orbit: `{0}` and `{1}` are rotations of each other")]
    DuplicateOrbit(String, String),

    #[error("alphabet collision in union: symbol `{0}` appears in two parts")]
    AlphabetCollision(String),

    #[error("invalid spec at {pointer}: {message}")]
    InvalidSpec { pointer: String, message: String },

    #[error("search budget exceeded: {candidates} candidates exceeds budget {budget}")]
    SearchBudgetExceeded { candidates: String, budget: u64 },

    #[error("brute force budget exceeded: {points} points (limit {limit})")]
    BudgetExceeded { points: usize, limit: usize },

    #[error("invalid language table: {0}")]
    InvalidTable(String),

    #[error("invalid table cache: {0}")]
    InvalidCache(String),

    #[error("unknown builtin example `{0}`")]
    UnknownBuiltin(String),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    pub(crate) fn spec(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Error::InvalidSpec { pointer: pointer.into(), message: message.into() }
    }
}
