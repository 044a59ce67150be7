use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("operator degree {degree} exceeds the supported maximum 4")]
    Degree { degree: u32 },
    #[error("basis sizes must be at least 4 (got n_q = {n_q}, n_r = {n_r})")]
    BasisSize { n_q: usize, n_r: usize },
    #[error("the state vector is zero")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("no matrix eigenvalue within {tol} of predicted {re}{im:+}i (closest distance {distance})")]
    PairingFailure { re: f64, im: f64, tol: f64, distance: f64 },
    #[error("evolution time must be non-negative (got {t})")]
    NegativeTime { t: f64 },
    #[error(transparent)]
    Core(#[from] liouville_core::Error),
}

impl VerifyError {
    pub fn kind(&self) -> &'static str {
        match self {
            VerifyError::Degree { .. } => "DegreeError",
            VerifyError::BasisSize { .. } => "BasisSizeError",
            VerifyError::ZeroVector => "ZeroVector",
            VerifyError::Dimension { .. } => "DimensionError",
            VerifyError::PairingFailure { .. } => "PairingFailure",
            VerifyError::NegativeTime { .. } => "NegativeTime",
            VerifyError::Core(e) => e.kind(),
        }
    }
}

pub type Result<T> = std::result::Result<T, VerifyError>;
