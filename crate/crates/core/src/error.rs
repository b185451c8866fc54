use thiserror::Error;

/// Errors raised by grammar construction, analysis and transformation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text input could not be parsed; `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("symbol `{0}` is declared both terminal and nonterminal")]
    KindConflict(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("`{0}` is not a nonterminal")]
    NotNonterminal(String),
    #[error("name `{0}` is already in use")]
    NameCollision(String),
    #[error("index {0} is undefined")]
    UndefinedIndex(String),
    #[error("no such production: {0}")]
    NoSuchProduction(String),
    #[error("occurrence not found: {0}")]
    NoSuchOccurrence(String),
    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A postcondition failed to hold; indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
