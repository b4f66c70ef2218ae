use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field characteristic {0} is not a prime below 2^31")]
    NotPrime(u32),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("word `{0}` is not a composable path")]
    NonComposable(String),

    #[error("relation terms are not parallel: `{0}` and `{1}` differ in source or target")]
    NonParallel(String, String),

    #[error("word `{0}` has length {1}; relations need paths of length at least 2")]
    NotAdmissible(String, usize),

    #[error("algebra is not finite-dimensional within length cap {0}: path `{1}` survives")]
    NotFiniteDimensional(usize, String),

    #[error("dimension {0} exceeds the limit of {1}")]
    DimensionOverflow(usize, usize),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("modules or maps live over different algebras")]
    AlgebraMismatch,

    #[error("endomorphism ring of summand {0} is not local and split")]
    NonSplitEndomorphism(usize),

    #[error("summands {0} and {1} are isomorphic")]
    IsomorphicSummands(usize, usize),

    #[error("summand {0} is the zero module")]
    ZeroSummand(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("no projective-injective modules; dominant dimension is below 1")]
    EmptyQ,

    #[error("orbit did not close within {0} steps")]
    OrbitCapExceeded(usize),

    #[error("module is not in the additive closure of the given summands")]
    NotInAdd,

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
