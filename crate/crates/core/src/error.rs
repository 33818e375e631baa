use thiserror::Error;

use crate::qcore::QubitId;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("register conflict: qubit {0} appears in both registers")]
    RegisterConflict(QubitId),

    #[error("qubit {0} is not in the register")]
    UnknownQubit(QubitId),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("empty target list")]
    EmptyTargets,

    #[error("bell measurement needs exactly 2 targets, got {0}")]
    BellArity(usize),

    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("zero vector cannot be normalized")]
    ZeroVector,

    #[error("state is not normalized: norm^2 = {0}")]
    NotNormalized(f64),

    #[error("matrix is not unitary: residual {0:e}")]
    NotUnitary(f64),

    #[error("not unimodular: |a|^2 + |b|^2 - 1 = {0:e}")]
    NotUnimodular(f64),

    #[error("axis is not a unit vector: norm = {0}")]
    NonUnitAxis(f64),

    #[error("degenerate probability vector: sum = {0}")]
    DegenerateDistribution(f64),

    #[error("qubit {qubit} is entangled with the rest of the register (purity {purity})")]
    Entangled { qubit: QubitId, purity: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("degenerate operator pair: U2^dag U1 is proportional to the identity (|sin lambda| = {0:e})")]
    DegeneratePair(f64),

    #[error("empty operator set")]
    EmptySet,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
