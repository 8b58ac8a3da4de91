use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid game space: {0}")]
    InvalidSpace(String),

    #[error("space cap exceeded: n*k = {nk} > cap {cap}")]
    SpaceCapExceeded { nk: usize, cap: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid mixed profile: {0}")]
    InvalidMixedProfile(String),

    #[error("invalid rational {0:?}")]
    InvalidRational(String),

    #[error("malformed game document: {0}")]
    Malformed(String),

    #[error("payoff count mismatch: {0}")]
    PayoffCountMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("too many strategic players for the subset-basis solve ({players} > {max})")]
    TooManyPlayers { players: usize, max: usize },

    #[error("unknown subspace kind {0:?}")]
    UnknownKind(String),

    #[error("internal error: {0}")]
    Internal(String),
}
