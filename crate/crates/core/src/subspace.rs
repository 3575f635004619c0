//! Right subspaces of `H^n`, carried as orthonormal bases.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::quat::Quaternion;
use crate::scalar::Scalar;
use crate::vector::QVector;

/// An orthonormally-based right subspace. Pairwise Hermitian products of
/// basis vectors stay below `1e-10` and every basis vector has unit norm;
/// [`gram_schmidt`] and the matrix kernels produce bases satisfying this.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct Subspace<T> {
    ambient_dim: usize,
    basis: Vec<QVector<T>>,
}

impl<T: Scalar> Subspace<T> {
    pub fn new(ambient_dim: usize, basis: Vec<QVector<T>>) -> Self {
        debug_assert!(basis.iter().all(|v| v.len() == ambient_dim));
        Subspace { ambient_dim, basis }
    }

    pub fn trivial(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    #[inline]
    pub fn basis(&self) -> &[QVector<T>] {
        &self.basis
    }

    /// Assembles the basis as the columns of an `n x k` matrix.
    pub fn basis_matrix(&self) -> Result<QMatrix<T>> {
        if self.basis.is_empty() {
            return Err(Error::EmptySubspace);
        }
        QMatrix::from_columns(&self.basis)
    }

    /// Orthogonal projection of `v` onto the subspace,
    /// `sum_i b_i <b_i, v>`.
    pub fn project(&self, v: &QVector<T>) -> Result<QVector<T>> {
        let mut out = QVector::zeros(self.ambient_dim);
        for b in &self.basis {
            let coef = b.hermitian_product(v)?;
            out = &out + &b.scale_right(coef);
        }
        Ok(out)
    }

    /// Sine of the angle between `v` and the subspace: `|v - proj v| / |v|`.
    /// Zero means `v` lies in the subspace.
    pub fn angular_distance(&self, v: &QVector<T>) -> Result<T> {
        let n = v.norm();
        if n == T::zero() {
            return Err(Error::ZeroVector);
        }
        let proj = self.project(v)?;
        Ok((v - &proj).norm() / n)
    }

    /// Largest deviation from orthonormality among basis pairs.
    pub fn orthonormality_deviation(&self) -> T {
        let mut dev = T::zero();
        for (a, u) in self.basis.iter().enumerate() {
            for (b, v) in self.basis.iter().enumerate() {
                let p = u.hermitian_product(v).expect("equal lengths");
                let expected = if a == b {
                    Quaternion::one()
                } else {
                    Quaternion::zero()
                };
                dev = dev.max(p.dist(&expected));
            }
        }
        dev
    }
}

/// Orthonormalizes `vectors` with the default rank tolerance
/// `1e-10 * (1 + max input norm)`.
///
/// Modified Gram-Schmidt with right-scalar coefficients and one full
/// re-orthogonalization pass per vector; near-dependent directions are
/// dropped, so the output dimension is the right rank of the input span.
pub fn gram_schmidt<T: Scalar>(vectors: &[QVector<T>]) -> Subspace<T> {
    let scale = vectors
        .iter()
        .fold(T::zero(), |acc, v| acc.max(v.norm()));
    gram_schmidt_with_tol(vectors, T::tol_floor(1e-10) * (T::one() + scale))
}

pub fn gram_schmidt_with_tol<T: Scalar>(vectors: &[QVector<T>], tol: T) -> Subspace<T> {
    let ambient = vectors.first().map_or(0, QVector::len);
    let mut basis: Vec<QVector<T>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        // two MGS passes keep orthogonality at working precision even for
        // nearly dependent inputs
        for _ in 0..2 {
            for b in &basis {
                let coef = b.hermitian_product(&w).expect("equal lengths");
                w = &w - &b.scale_right(coef);
            }
        }
        let n = w.norm();
        if n > tol {
            basis.push(w.scale(T::one() / n));
        }
    }
    Subspace::new(ambient, basis)
}
