use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    InvalidModulus(u64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("zero polynomial has no factorization")]
    ZeroPolynomial,

    #[error("structure constants are not associative at basis triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),

    #[error("unit element is not a two-sided identity (fails on basis element {0})")]
    BadUnit(usize),

    #[error("modulus {p} too small for radical computation (need p > {dim})")]
    ModulusTooSmall { p: u64, dim: usize },

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("quiver relations leave an infinite-dimensional algebra (path {0} can be pumped)")]
    InfiniteQuiver(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("modules are defined over different algebras")]
    AlgebraMismatch,

    #[error("matrix is not a module homomorphism (fails on basis element {0})")]
    NotIntertwiner(usize),

    #[error("endomorphism is not idempotent")]
    NotIdempotent,

    #[error("subspace is not a submodule: row {vector} leaves the span under basis element {basis_element}")]
    UnstableSubspace { vector: usize, basis_element: usize },

    #[error("morphism is not surjective (rank {rank} onto dimension {target_dim})")]
    NotSurjective { rank: usize, target_dim: usize },

    #[error("sequence is not exact: {0}")]
    NotExact(String),

    #[error("covers do not share the same target module")]
    TargetMismatch,

    #[error("randomized search exhausted after {0} attempts")]
    RetryExhausted(usize),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
