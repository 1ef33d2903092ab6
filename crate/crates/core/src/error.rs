use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian (max |h - h^dagger| = {0:e})")]
    NonHermitian(f64),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("expectation value has imaginary part {0:e}")]
    ComplexExpectation(f64),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("state vector not normalized (norm^2 = {0})")]
    NotNormalized(f64),

    #[error("invalid reservoir parameters: {0}")]
    InvalidParams(String),

    #[error("closed form requires equal damping rates, got {0:?}")]
    UnequalRates([f64; 3]),

    #[error("density matrix element rho[{row}{col}] has imaginary part {imag:e}")]
    ComplexElement { row: usize, col: usize, imag: f64 },

    #[error("no crossing of the {0} threshold inside the search window")]
    NoCrossing(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
