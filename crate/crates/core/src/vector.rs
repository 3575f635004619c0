//! Column vectors over the quaternions.
//!
//! Scalars act on the right throughout (`v * q`), matching the convention
//! under which matrix kernels and eigenspaces are right subspaces.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quat::Quaternion;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
#[serde(transparent)]
pub struct QVector<T>(Vec<Quaternion<T>>);

impl<T: Scalar> QVector<T> {
    pub fn from_vec(entries: Vec<Quaternion<T>>) -> Self {
        QVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        QVector(vec![Quaternion::zero(); n])
    }

    /// Standard basis vector `e_idx`.
    pub fn basis(n: usize, idx: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[idx] = Quaternion::one();
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn entries(&self) -> &[Quaternion<T>] {
        &self.0
    }

    /// The Hermitian product `<u, v> = sum conj(u_l) v_l`, conjugate-linear
    /// in the first slot and right-linear in the second.
    pub fn hermitian_product(&self, other: &Self) -> Result<Quaternion<T>> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        let mut acc = Quaternion::zero();
        for (u, v) in self.0.iter().zip(&other.0) {
            acc = acc + u.conjugate() * *v;
        }
        Ok(acc)
    }

    /// Squared norm; real and computed without quaternion products.
    #[inline]
    pub fn norm_sqr(&self) -> T {
        self.0
            .iter()
            .fold(T::zero(), |acc, q| acc + q.norm_sqr())
    }

    #[inline]
    pub fn norm(&self) -> T {
        self.norm_sqr().sqrt()
    }

    /// Right scalar multiple `v * q`.
    pub fn scale_right(&self, q: Quaternion<T>) -> Self {
        QVector(self.0.iter().map(|e| *e * q).collect())
    }

    /// Multiple by a real scalar.
    pub fn scale(&self, s: T) -> Self {
        QVector(self.0.iter().map(|e| e.scale(s)).collect())
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == T::zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self.scale(T::one() / n))
    }

    /// Largest entry norm; scales tolerance decisions.
    pub fn max_entry_norm(&self) -> T {
        self.0
            .iter()
            .fold(T::zero(), |acc, q| acc.max(q.norm()))
    }

    pub fn dist(&self, other: &Self) -> T {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .fold(T::zero(), |acc, (a, b)| acc + (*a - *b).norm_sqr())
            .sqrt()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Quaternion<T>> {
        self.0.iter()
    }
}

impl<T: Scalar> Index<usize> for QVector<T> {
    type Output = Quaternion<T>;
    #[inline]
    fn index(&self, i: usize) -> &Quaternion<T> {
        &self.0[i]
    }
}

impl<T: Scalar> IndexMut<usize> for QVector<T> {
    #[inline]
    fn index_mut(&mut self, i: usize) -> &mut Quaternion<T> {
        &mut self.0[i]
    }
}

impl<T: Scalar> Add for &QVector<T> {
    type Output = QVector<T>;
    fn add(self, rhs: Self) -> QVector<T> {
        debug_assert_eq!(self.len(), rhs.len());
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| *a + *b).collect())
    }
}

impl<T: Scalar> Sub for &QVector<T> {
    type Output = QVector<T>;
    fn sub(self, rhs: Self) -> QVector<T> {
        debug_assert_eq!(self.len(), rhs.len());
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| *a - *b).collect())
    }
}

/// Right scalar multiplication `v * q`.
impl<T: Scalar> Mul<Quaternion<T>> for &QVector<T> {
    type Output = QVector<T>;
    fn mul(self, q: Quaternion<T>) -> QVector<T> {
        self.scale_right(q)
    }
}
