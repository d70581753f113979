use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("state vector has (near) zero norm")]
    ZeroState,
    #[error("amplitude vector length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("invalid qubit subset {keep:?} for a {n_qubits}-qubit system")]
    BadSubset { keep: Vec<usize>, n_qubits: usize },
    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    BadIndex { index: usize, n_qubits: usize },
    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),
    #[error("expected dimension {expected}, got {actual}")]
    WrongDim { expected: usize, actual: usize },
    #[error("not a density matrix: {0}")]
    NotDensityMatrix(String),
    #[error("expected {expected} qubits, got {actual}")]
    WrongQubitCount { expected: String, actual: usize },
    #[error("family parameters must be finite with magnitude <= 1e6")]
    InvalidParams,
    #[error("degenerate family: |a|^2+|b|^2+2|c|^2 = {0:e}")]
    DegenerateFamily(f64),
    #[error("unknown qubit pair {0}")]
    BadPair(String),
    #[error("power must be positive, got {0}")]
    BadPower(f64),
    #[error("least-squares design matrix is rank deficient")]
    SingularDesign,
    #[error("power window [{lo}, {hi}] does not bracket the sign change (holds at lo: {holds_at_lo}, holds at hi: {holds_at_hi})")]
    NotBracketed {
        lo: f64,
        hi: f64,
        holds_at_lo: bool,
        holds_at_hi: bool,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
