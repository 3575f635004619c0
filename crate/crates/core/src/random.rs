//! Seeded random generation of quaternionic test objects.
//!
//! Everything here is deterministic given the seed: the generator is
//! ChaCha8 and Gaussian components come from `rand_distr::StandardNormal`
//! sampled as `f64` and converted to the working scalar.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::matrix::QMatrix;
use crate::quat::Quaternion;
use crate::scalar::Scalar;
use crate::subspace::{gram_schmidt, Subspace};
use crate::vector::QVector;

/// The crate-wide deterministic generator.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// SplitMix64-style mix of a base seed and a stream index, used to derive
/// independent per-shard seeds.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn gaussian<T: Scalar, R: Rng>(rng: &mut R) -> T {
    let x: f64 = rng.sample(StandardNormal);
    T::from_f64(x)
}

pub fn random_quaternion<T: Scalar, R: Rng>(rng: &mut R) -> Quaternion<T> {
    Quaternion::new(gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng))
}

/// Uniform direction in the pure imaginary unit sphere.
pub fn random_pure_unit<T: Scalar, R: Rng>(rng: &mut R) -> Quaternion<T> {
    loop {
        let q = Quaternion::new(T::zero(), gaussian(rng), gaussian(rng), gaussian(rng));
        let n = q.norm();
        if n > T::from_f64(1e-6) {
            return q.scale(T::one() / n);
        }
    }
}

pub fn random_qvector<T: Scalar, R: Rng>(n: usize, rng: &mut R) -> QVector<T> {
    QVector::from_vec((0..n).map(|_| random_quaternion(rng)).collect())
}

pub fn random_qmatrix<T: Scalar, R: Rng>(rows: usize, cols: usize, rng: &mut R) -> QMatrix<T> {
    let mut m = QMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m[(r, c)] = random_quaternion(rng);
        }
    }
    m
}

/// Random Hermitian matrix `(G + G*) / 2`.
pub fn random_hermitian<T: Scalar, R: Rng>(n: usize, rng: &mut R) -> QMatrix<T> {
    let g = random_qmatrix(n, n, rng);
    g.hermitian_part().expect("square by construction")
}

/// Random symplectic matrix: Gram-Schmidt applied to a Gaussian matrix's
/// columns (a product of elementary column operations, hence unitary).
pub fn random_symplectic<T: Scalar, R: Rng>(n: usize, rng: &mut R) -> QMatrix<T> {
    loop {
        let g = random_qmatrix(n, n, rng);
        let cols: Vec<QVector<T>> = (0..n).map(|c| g.column(c)).collect();
        let ortho = gram_schmidt(&cols);
        if ortho.dim() == n {
            return QMatrix::from_columns(ortho.basis()).expect("full rank");
        }
    }
}

/// Random `k`-dimensional subspace of `H^n`, Gaussian basis orthonormalized.
pub fn random_subspace<T: Scalar, R: Rng>(n: usize, k: usize, rng: &mut R) -> Subspace<T> {
    loop {
        let cols: Vec<QVector<T>> = (0..k).map(|_| random_qvector(n, rng)).collect();
        let s = gram_schmidt(&cols);
        if s.dim() == k {
            return s;
        }
    }
}
