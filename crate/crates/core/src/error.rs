use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("invalid input: {0}")]
    Precondition(String),

    #[error("root iteration did not converge (max residual {residual:.3e})")]
    RootsNotConverged { residual: f64 },

    #[error("zero set is not conjugate-closed (imaginary residue {residue:.3e})")]
    NotConjugateClosed { residue: f64 },

    #[error("ill-conditioned linear system (condition estimate {cond:.3e}): {hint}")]
    IllConditioned { cond: f64, hint: String },

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("iteration did not converge after {iterations} steps (residual {residual:.3e})")]
    NoConvergence { iterations: usize, residual: f64 },
}
