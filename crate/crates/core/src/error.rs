//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Numeric payloads are carried as `f64` regardless of the working scalar so
/// the enum stays object-safe and comparable.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cannot invert the zero quaternion")]
    ZeroQuaternion,

    #[error("operation requires a nonzero vector")]
    ZeroVector,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not 2x2 ({rows}x{cols})")]
    NotTwoByTwo { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not symplectic (max deviation {deviation:e})")]
    NotSymplectic { deviation: f64 },

    #[error("iteration did not converge within {iterations} steps")]
    NoConvergence { iterations: usize },

    #[error(
        "no conjugate partner within {tol:e} for eigenvalue {re}+{im}i (best distance {best:e})"
    )]
    PairingFailure { re: f64, im: f64, best: f64, tol: f64 },

    #[error("eigenvector reconstruction failed: {0}")]
    ReconstructionFailure(String),

    #[error("vector is not a critical point (gradient norm {gradient_norm:e})")]
    NotCritical { gradient_norm: f64 },

    #[error("vector is not tangent (real overlap {overlap:e})")]
    NotTangent { overlap: f64 },

    #[error("subspace has no basis vectors")]
    EmptySubspace,

    #[error("index {index} out of range ({limit} available)")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("no root with residual <= {tol:e} found (best {best:e})")]
    RootSolverFailure { best: f64, tol: f64 },

    #[error("value is not a left eigenvalue (kernel is trivial)")]
    NotLeftEigenvalue,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invariant falsified: {0}")]
    Falsified(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
