//! Quaternionic linear algebra.
//!
//! Matrices over the quaternions act on column vectors with scalars
//! multiplying on the right, so right eigenvalues come in similarity
//! classes while left eigenvalues live outside that structure entirely.
//! This crate computes both:
//!
//! * [`right_eigen_classes`] finds the similarity classes of any square
//!   matrix through its complex adjoint, and [`hermitian_right_eigen`]
//!   additionally reconstructs an orthonormal quaternionic eigenbasis.
//! * [`rayleigh`] evaluates the Rayleigh quotient of a Hermitian matrix,
//!   its spherical gradient and Hessian, saddle indices, subspace
//!   min-max bounds, and Monte Carlo sphere moments.
//! * [`lefteig`] solves the 2x2 left eigenvalue problem in closed form
//!   where possible (falling back to a damped Newton search on the
//!   quadratic), classifies the Hermitian and symplectic special cases
//!   with their one-parameter eigenvalue families, and checks how left
//!   eigenvalues sit against the right spectrum.
//!
//! Everything is generic over the scalar through [`Scalar`]; the `*32`
//! and `*64` aliases fix `f32` or `f64`.

pub mod ceig;
pub mod cmatrix;
pub mod elim;
pub mod error;
pub mod io;
pub mod lefteig;
pub mod matrix;
pub mod quat;
pub mod random;
pub mod rayleigh;
pub mod scalar;
pub mod subspace;
pub mod vector;

pub use ceig::{
    hermitian_right_eigen, right_eigen_classes, HermitianEigen, SimilarityClass,
};
pub use error::{Error, Result};
pub use lefteig::{left_eigs_2x2, Family, LeftSpectrum};
pub use matrix::QMatrix;
pub use quat::Quaternion;
pub use scalar::Scalar;
pub use subspace::{gram_schmidt, Subspace};
pub use vector::QVector;

pub type Quaternion32 = quat::Quaternion<f32>;
pub type Quaternion64 = quat::Quaternion<f64>;
pub type QVector32 = vector::QVector<f32>;
pub type QVector64 = vector::QVector<f64>;
pub type QMatrix32 = matrix::QMatrix<f32>;
pub type QMatrix64 = matrix::QMatrix<f64>;
pub type ComplexMatrix32 = cmatrix::ComplexMatrix<f32>;
pub type ComplexMatrix64 = cmatrix::ComplexMatrix<f64>;
pub type Subspace32 = subspace::Subspace<f32>;
pub type Subspace64 = subspace::Subspace<f64>;
