use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid spec `{0}`")]
    InvalidSpec(String),

    #[error("{what} = {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("element {0} out of range for group of order {1}")]
    ElementOutOfRange(usize, usize),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroup is not stable under conjugation by element {0}")]
    NotStable(usize),

    #[error("matrix for element {element} is not unitary (deviation {deviation:.3e})")]
    NotUnitary { element: usize, deviation: f64 },

    #[error("matrices for ({x}, {y}) are not projectively multiplicative: {reason}")]
    NotProjective { x: usize, y: usize, reason: String },

    #[error("cocycle identity fails at ({0}, {1}, {2})")]
    CocycleIdentity(usize, usize, usize),

    #[error("cocycles differ")]
    CocycleMismatch,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("representation is not irreducible (<chi,chi> = {0:.6})")]
    NotIrreducible(f64),

    #[error("representation is not projectively faithful (element {0} acts as a scalar)")]
    NotFaithful(usize),

    #[error("representation is not injective (elements {0} and {1} coincide)")]
    NotInjective(usize, usize),

    #[error("cocycle is not trivial")]
    NontrivialCocycle,

    #[error("{0}")]
    Precondition(String),

    #[error("value {0} is not within tolerance of an integer")]
    SnapFailure(f64),

    #[error("invalid probability distribution: {0}")]
    BadDistribution(String),

    #[error("code space must be nonzero with orthonormal columns: {0}")]
    InvalidCode(String),

    #[error("the code is not correctable: witness pair ({0}, {1})")]
    NotCorrectable(usize, usize),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
