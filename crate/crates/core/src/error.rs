use thiserror::Error;

/// Errors raised by constructions and verifiers in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("generator x{0} has no assigned value")]
    UnassignedGenerator(u32),

    #[error("polynomial is not homogeneous in x{var}")]
    NotHomogeneous { var: u32 },

    #[error("fresh index x{0} collides with a variable already in use")]
    IndexCollision(u32),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),

    #[error("cocycle identity f(ab,c) = f(a,bc) fails on basis triple ({0}, {1}, {2})")]
    CocycleViolation(usize, usize, usize),

    #[error("unit law fails on basis element {0}")]
    UnitViolation(usize),

    #[error("subspace is not a two-sided ideal: {0}")]
    NotAnIdeal(String),

    #[error("involution axioms fail: {0}")]
    NotAnInvolution(String),

    #[error("subspace is not closed under the Jordan product: {0}")]
    NotJordanClosed(String),

    #[error("subspace is not a subalgebra: {0}")]
    NotSubalgebra(String),

    #[error("map is not a Jordan homomorphism: {0}")]
    NotJordan(String),

    #[error("Leibniz rule fails on basis pair ({0}, {1})")]
    NotDerivation(usize, usize),

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("graded violation: relation ({0}, {1}) has unequal lengths")]
    Ungraded(String, String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse {
            position: e.column(),
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
