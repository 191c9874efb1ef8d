use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("short-range boundary regime violated: {0}")]
    BoundaryRegime(String),

    #[error("numerical convergence failure: {0}")]
    Convergence(String),

    #[error("missed level between node counts {below} and {above} in bracket [{lo}, {hi}]")]
    MissedLevel { below: usize, above: usize, lo: f64, hi: f64 },

    #[error("divergent scattering length: short-range phase is a multiple of pi")]
    DivergentScatteringLength,

    #[error("quantum-defect phase at a pole of tan: {0}")]
    PhasePole(f64),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("basis truncation not converged: {0}")]
    TruncationNotConverged(String),

    #[error("degenerate root cluster at energies {0:?}")]
    DegenerateCluster(Vec<f64>),

    #[error("curve identification ambiguous near d = {0}")]
    AmbiguousCurve(f64),

    #[error("zero overlap: phase undefined")]
    ZeroOverlap,

    #[error("basis leakage: population {pop:.3e} in the highest shell exceeds {limit:.1e}")]
    BasisLeakage { pop: f64, limit: f64 },

    #[error("validation failure: {0}")]
    Validation(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code convention: 2 config, 3 numerical, 4 validation, 1 other.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::InvalidInput(_) => 2,
            Error::Convergence(_)
            | Error::MissedLevel { .. }
            | Error::TruncationNotConverged(_)
            | Error::BasisLeakage { .. }
            | Error::BoundaryRegime(_) => 3,
            Error::Validation(_) => 4,
            _ => 1,
        }
    }
}
