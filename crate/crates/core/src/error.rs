use alloc::string::String;

/// Errors raised by the torsion engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("boundary composite d_{degree} d_{} is nonzero", degree + 1)]
    NotAComplex { degree: usize },

    #[error("chain in degree {degree} is not a cycle")]
    NotACycle { degree: usize },

    #[error("vectors in degree {degree} do not form a homology basis")]
    NotAHomologyBasis { degree: usize },

    #[error("lifts in degree {degree} do not map onto a basis of the boundaries")]
    InvalidLifts { degree: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not unimodular")]
    NotUnimodular,

    #[error("vector is not in the span of the given basis")]
    NotInSpan,

    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),

    #[error("not a subcomplex: {0}")]
    NotASubcomplex(String),

    #[error("stratum has codimension {0}, at least 2 is required")]
    CodimensionTooSmall(usize),

    #[error("singular strata must be pairwise disjoint")]
    StrataNotDisjoint,

    #[error("invalid perversity: {0}")]
    InvalidPerversity(String),

    #[error("perversity is undefined at codimension {0}")]
    PerversityUndefined(usize),

    #[error("cover does not exhaust the space")]
    CoverNotExhaustive,

    #[error("cover is incompatible with intersection chains: {0}")]
    IncompatibleCover(String),

    #[error("sequence is not exact at position {0}")]
    NotExact(usize),

    #[error("inner product in degree {0} is not symmetric positive definite")]
    NotPositiveDefinite(usize),
}

pub type Result<T> = core::result::Result<T, Error>;
