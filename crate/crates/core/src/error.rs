use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("quadratic tag mismatch: {0} vs {1}")]
    TagMismatch(String, String),
    #[error("element is not fixed by complex conjugation: {0}")]
    NotReal(String),
    #[error("zero input")]
    ZeroInput,
    #[error("element is not integral in Z[rho]: {0}")]
    NonIntegral(String),
    #[error("square-root test undecided for {0}")]
    Undecided(String),
    #[error("embedded discriminant is not positive: {0}")]
    NegativeDiscriminant(f64),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("singular system: {0}")]
    Singular(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("wreath variant mismatch: {0:?} vs {1:?}")]
    VariantMismatch(crate::galois::Variant, crate::galois::Variant),
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-norm {off_norm:e})")]
    NonConvergence { sweeps: usize, off_norm: f64 },
    #[error("spectrum mismatch: {0}")]
    SpectrumMismatch(String),
    #[error("Kummer certificate missing for subset {0}")]
    MissingCertificate(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
