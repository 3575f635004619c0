//! The Rayleigh quotient of a Hermitian quaternionic matrix, viewed as a
//! smooth function on the unit sphere of `H^n`.
//!
//! For Hermitian `S` the quotient `R(v) = Re(v* S v) / |v|^2` is real,
//! constant on right scalar multiples of `v`, and its critical points are
//! exactly the right eigenvectors. The module computes the quotient, its
//! spherical gradient and Hessian, the Morse index at a critical point,
//! min-max bounds over random subspaces, and Monte Carlo estimates of the
//! quotient's moments over the uniform sphere measure.

use num_complex::Complex;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::ceig::jacobi::hermitian_complex_eigen;
use crate::ceig::{cluster_gap, hermitian_right_eigen};
use crate::cmatrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::quat::Quaternion;
use crate::random::{derive_seed, random_qvector, random_subspace, seeded_rng};
use crate::scalar::{two, Scalar};
use crate::subspace::Subspace;
use crate::vector::QVector;

fn ensure_hermitian<T: Scalar>(s: &QMatrix<T>) -> Result<()> {
    let dev = s.hermitian_deviation()?;
    if dev > T::tol_floor(1e-10) * (T::one() + s.max_entry_norm()) {
        return Err(Error::NotHermitian {
            deviation: dev.as_f64(),
        });
    }
    Ok(())
}

/// `Re(v* M v) / |v|^2` without any symmetry requirement on `M`. For a
/// general square matrix this equals the Rayleigh quotient of its
/// Hermitian part `(M + M*) / 2`.
pub fn rayleigh_re<T: Scalar>(m: &QMatrix<T>, v: &QVector<T>) -> Result<T> {
    let n2 = v.norm_sqr();
    if n2 == T::zero() {
        return Err(Error::ZeroVector);
    }
    let mv = m.apply(v)?;
    Ok(v.hermitian_product(&mv)?.w / n2)
}

/// The Rayleigh quotient `R(v) = Re(v* S v) / |v|^2` of a Hermitian matrix.
///
/// Hermiticity makes `v* S v` real on the nose; the real part only strips
/// roundoff.
pub fn rayleigh_quotient<T: Scalar>(s: &QMatrix<T>, v: &QVector<T>) -> Result<T> {
    ensure_hermitian(s)?;
    rayleigh_re(s, v)
}

/// Mean of `values` under nonnegative `weights`, as in the expansion of a
/// Rayleigh quotient over an eigenbasis with weights `|c_i|^2`.
pub fn weighted_mean<T: Scalar>(values: &[T], weights: &[T]) -> Result<T> {
    if values.len() != weights.len() {
        return Err(Error::DimensionMismatch {
            expected: values.len(),
            found: weights.len(),
        });
    }
    let total = weights.iter().fold(T::zero(), |acc, &w| acc + w);
    if total <= T::zero() || total.is_nan() {
        return Err(Error::Precondition(
            "weighted mean needs positive total weight".into(),
        ));
    }
    let dot = values
        .iter()
        .zip(weights)
        .fold(T::zero(), |acc, (&t, &w)| acc + t * w);
    Ok(dot / total)
}

/// Euclidean gradient of the Rayleigh quotient at `v`:
/// `(2 / |v|^2) (S v - v R(v))`. It is tangent to the sphere through `v`
/// and vanishes exactly at right eigenvectors.
pub fn gradient<T: Scalar>(s: &QMatrix<T>, v: &QVector<T>) -> Result<QVector<T>> {
    ensure_hermitian(s)?;
    let n2 = v.norm_sqr();
    if n2 == T::zero() {
        return Err(Error::ZeroVector);
    }
    let r = rayleigh_re(s, v)?;
    let sv = s.apply(v)?;
    Ok((&sv - &v.scale(r)).scale(two::<T>() / n2))
}

fn gradient_tol<T: Scalar>(s: &QMatrix<T>) -> T {
    T::tol_floor(1e-8) * (T::one() + s.frobenius_norm())
}

/// Sphere Hessian of the Rayleigh quotient at a critical point `v`,
/// applied to a tangent vector `w`:  `(2 / |v|^2) (S w - w R(v))`.
///
/// `v` must be critical (gradient below `1e-8` scaled by `1 + |S|_F`) and
/// `w` tangent (`Re <v, w>` below `1e-10` scaled); at such points the
/// result is tangent again without projection.
pub fn hessian_apply<T: Scalar>(
    s: &QMatrix<T>,
    v: &QVector<T>,
    w: &QVector<T>,
) -> Result<QVector<T>> {
    ensure_hermitian(s)?;
    let n2 = v.norm_sqr();
    if n2 == T::zero() {
        return Err(Error::ZeroVector);
    }
    let g = gradient(s, v)?.norm();
    if g > gradient_tol(s) {
        return Err(Error::NotCritical {
            gradient_norm: g.as_f64(),
        });
    }
    let overlap = v.hermitian_product(w)?.w.abs();
    if overlap > T::tol_floor(1e-10) * (T::one() + v.norm() * w.norm()) {
        return Err(Error::NotTangent {
            overlap: overlap.as_f64(),
        });
    }
    let r = rayleigh_re(s, v)?;
    let sw = s.apply(w)?;
    Ok((&sw - &w.scale(r)).scale(two::<T>() / n2))
}

/// Real coordinate vector: unit weight on component `c` (0 = real part,
/// 1..=3 the imaginary units) of entry `l`.
fn real_coordinate<T: Scalar>(n: usize, l: usize, c: usize) -> QVector<T> {
    let mut v = QVector::zeros(n);
    let one = T::one();
    v[l] = match c {
        0 => Quaternion::from_real(one),
        1 => Quaternion::new(T::zero(), one, T::zero(), T::zero()),
        2 => Quaternion::new(T::zero(), T::zero(), one, T::zero()),
        _ => Quaternion::new(T::zero(), T::zero(), T::zero(), one),
    };
    v
}

fn real_dot<T: Scalar>(u: &QVector<T>, v: &QVector<T>) -> T {
    (0..u.len()).fold(T::zero(), |acc, l| acc + u[l].dot(&v[l]))
}

/// Orthonormal real basis of the tangent space to the unit sphere of
/// `H^n ~ R^{4n}` at unit `v`: `4n - 1` vectors orthogonal to `v` in the
/// real inner product.
fn tangent_basis<T: Scalar>(v: &QVector<T>) -> Vec<QVector<T>> {
    let n = v.len();
    let dim = 4 * n;
    let mut basis: Vec<QVector<T>> = vec![v.clone()];
    for l in 0..n {
        for c in 0..4 {
            let mut cand = real_coordinate(n, l, c);
            for _ in 0..2 {
                for b in &basis {
                    let coef = real_dot(b, &cand);
                    cand = &cand - &b.scale(coef);
                }
            }
            let norm = real_dot(&cand, &cand).sqrt();
            if norm > T::from_f64(1e-4) {
                basis.push(cand.scale(T::one() / norm));
                if basis.len() == dim {
                    break;
                }
            }
        }
        if basis.len() == dim {
            break;
        }
    }
    debug_assert_eq!(basis.len(), dim);
    basis.remove(0);
    basis
}

/// Eigenvalues (ascending) of the sphere Hessian at a critical point,
/// computed over an explicit real orthonormal tangent basis. The list has
/// `4n - 1` entries.
pub fn tangent_hessian_eigs<T: Scalar>(s: &QMatrix<T>, v: &QVector<T>) -> Result<Vec<T>> {
    ensure_hermitian(s)?;
    let norm = v.norm();
    if norm == T::zero() {
        return Err(Error::ZeroVector);
    }
    let v = v.scale(T::one() / norm);
    let g = gradient(s, &v)?.norm();
    if g > gradient_tol(s) {
        return Err(Error::NotCritical {
            gradient_norm: g.as_f64(),
        });
    }
    let r = rayleigh_re(s, &v)?;
    let basis = tangent_basis(&v);
    let dim = basis.len();
    let images: Vec<QVector<T>> = basis
        .iter()
        .map(|w| -> Result<QVector<T>> {
            let sw = s.apply(w)?;
            Ok((&sw - &w.scale(r)).scale(two::<T>()))
        })
        .collect::<Result<_>>()?;
    let mut h = ComplexMatrix::zeros(dim, dim);
    for a in 0..dim {
        for b in a..dim {
            let entry = real_dot(&basis[a], &images[b]);
            h[(a, b)] = Complex::new(entry, T::zero());
            h[(b, a)] = Complex::new(entry, T::zero());
        }
    }
    let (eigs, _) = hermitian_complex_eigen(&h)?;
    Ok(eigs)
}

/// Morse index of the critical submanifold belonging to the `j`-th
/// distinct eigenvalue (ascending, 1-based): the number of strictly
/// smaller eigenvalues counted with quaternionic multiplicity, and the
/// same count of real descent directions (four per quaternionic one).
pub fn critical_index<T: Scalar>(s: &QMatrix<T>, j: usize) -> Result<(usize, usize)> {
    let eig = hermitian_right_eigen(s)?;
    let limit = eig.multiplicities.len();
    if j == 0 || j > limit {
        return Err(Error::IndexOutOfRange { index: j, limit });
    }
    let quaternionic: usize = eig.multiplicities[..j - 1].iter().sum();
    Ok((quaternionic, 4 * quaternionic))
}

/// Everything the sphere sees at one critical point of the Rayleigh
/// quotient.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct CriticalReport<T> {
    /// The critical point, normalized to the unit sphere.
    pub point: QVector<T>,
    /// Rayleigh quotient value, an eigenvalue of the matrix.
    pub value: T,
    pub gradient_norm: T,
    /// Morse index in quaternionic count: eigenvalues strictly below
    /// `value`, with multiplicity.
    pub index: usize,
    /// Real descent directions, `4 * index`.
    pub index_real: usize,
    /// Observed spectrum of the tangent Hessian, ascending, `4n - 1`
    /// entries.
    pub hessian_eigs: Vec<T>,
    /// Count of observed negative Hessian eigenvalues.
    pub hessian_negative: usize,
    /// Count of observed near-zero Hessian eigenvalues; the critical
    /// submanifold through an eigenvector of quaternionic multiplicity
    /// `l` contributes `4l - 1`.
    pub hessian_zero: usize,
}

/// Diagnoses the critical point `v` of the Rayleigh quotient of `s`:
/// value, gradient norm, predicted Morse index from the spectrum, and the
/// observed tangent Hessian spectrum with its negative and null counts.
pub fn critical_report<T: Scalar>(s: &QMatrix<T>, v: &QVector<T>) -> Result<CriticalReport<T>> {
    ensure_hermitian(s)?;
    let norm = v.norm();
    if norm == T::zero() {
        return Err(Error::ZeroVector);
    }
    let point = v.scale(T::one() / norm);
    let gradient_norm = gradient(s, &point)?.norm();
    if gradient_norm > gradient_tol(s) {
        return Err(Error::NotCritical {
            gradient_norm: gradient_norm.as_f64(),
        });
    }
    let value = rayleigh_re(s, &point)?;

    let eig = hermitian_right_eigen(s)?;
    let distinct = eig.distinct_values();
    let mut index = 0usize;
    for (t, l) in distinct.iter().zip(&eig.multiplicities) {
        if *t < value - cluster_gap(value) {
            index += l;
        }
    }

    let hessian_eigs = tangent_hessian_eigs(s, &point)?;
    let thresh = T::tol_floor(1e-6) * (T::one() + s.frobenius_norm());
    let hessian_negative = hessian_eigs.iter().filter(|&&t| t < -thresh).count();
    let hessian_zero = hessian_eigs.iter().filter(|&&t| t.abs() <= thresh).count();

    Ok(CriticalReport {
        point,
        value,
        gradient_norm,
        index,
        index_real: 4 * index,
        hessian_eigs,
        hessian_negative,
        hessian_zero,
    })
}

/// Extreme Rayleigh quotient values over a subspace: the spectrum edge of
/// the compression `B* S B` onto an orthonormal basis `B` of `E`.
pub fn subspace_extremes<T: Scalar>(s: &QMatrix<T>, e: &Subspace<T>) -> Result<(T, T)> {
    ensure_hermitian(s)?;
    if e.dim() == 0 {
        return Err(Error::EmptySubspace);
    }
    let b = e.basis_matrix()?;
    let compressed = b.adjoint().matmul(&s.matmul(&b)?)?;
    let compressed = compressed.hermitian_part()?;
    let eig = hermitian_right_eigen(&compressed)?;
    Ok((eig.values[0], *eig.values.last().expect("nonempty")))
}

/// Outcome of sampling the variational characterization of the `k`-th
/// eigenvalue over random `k`-dimensional subspaces.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct MinMaxReport<T> {
    pub k: usize,
    pub trials: usize,
    /// `k`-th smallest eigenvalue: the min-max value over `k`-dim subspaces.
    pub t_k: T,
    /// `(n - k + 1)`-th smallest: the max-min value over the same subspaces.
    pub t_nk1: T,
    /// Smallest sampled `max R` over the subspaces; at least `t_k`.
    pub min_of_max: T,
    /// Largest sampled `min R`; at most `t_nk1`.
    pub max_of_min: T,
    /// Sampled subspaces violating either bound beyond the tolerance.
    pub violations: usize,
    /// `|max R - t_k|` on the span of the bottom `k` eigenvectors, where
    /// the minimum is attained.
    pub attained_minmax_err: T,
    /// `|min R - t_nk1|` on the span of the top `k` eigenvectors.
    pub attained_maxmin_err: T,
}

/// Samples `trials` random `k`-dimensional subspaces and checks both
/// variational bounds: every subspace has `max R >= t_k` and
/// `min R <= t_{n-k+1}`, with equality attained on eigenvector spans.
pub fn minmax_verify<T: Scalar>(
    s: &QMatrix<T>,
    k: usize,
    trials: usize,
    seed: u64,
    tol: T,
) -> Result<MinMaxReport<T>> {
    let eig = hermitian_right_eigen(s)?;
    let n = eig.values.len();
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, limit: n });
    }
    let t_k = eig.values[k - 1];
    let t_nk1 = eig.values[n - k];

    let mut rng = seeded_rng(seed);
    let mut min_of_max = T::infinity();
    let mut max_of_min = T::neg_infinity();
    let mut violations = 0usize;
    for _ in 0..trials {
        let e = random_subspace(n, k, &mut rng);
        let (lo, hi) = subspace_extremes(s, &e)?;
        min_of_max = min_of_max.min(hi);
        max_of_min = max_of_min.max(lo);
        if hi < t_k - tol || lo > t_nk1 + tol {
            violations += 1;
        }
    }

    let bottom = Subspace::new(n, eig.basis.basis()[..k].to_vec());
    let top = Subspace::new(n, eig.basis.basis()[n - k..].to_vec());
    let attained_minmax_err = (subspace_extremes(s, &bottom)?.1 - t_k).abs();
    let attained_maxmin_err = (subspace_extremes(s, &top)?.0 - t_nk1).abs();

    Ok(MinMaxReport {
        k,
        trials,
        t_k,
        t_nk1,
        min_of_max,
        max_of_min,
        violations,
        attained_minmax_err,
        attained_maxmin_err,
    })
}

/// Uniform sample from the unit sphere of `H^n`: a Gaussian vector
/// normalized.
pub fn sphere_sample<T: Scalar, R: Rng>(n: usize, rng: &mut R) -> QVector<T> {
    loop {
        let v = random_qvector(n, rng);
        let norm = v.norm();
        if norm > T::from_f64(1e-6) {
            return v.scale(T::one() / norm);
        }
    }
}

/// Streaming accumulator for the first four central moments, mergeable so
/// that sampling can be sharded deterministically.
#[derive(Debug, Clone, Copy)]
pub struct MomentAccumulator<T> {
    count: usize,
    mean: T,
    m2: T,
    m3: T,
    m4: T,
}

impl<T: Scalar> Default for MomentAccumulator<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> MomentAccumulator<T> {
    pub fn new() -> Self {
        MomentAccumulator {
            count: 0,
            mean: T::zero(),
            m2: T::zero(),
            m3: T::zero(),
            m4: T::zero(),
        }
    }

    pub fn update(&mut self, x: T) {
        let n1 = T::from_f64(self.count as f64);
        self.count += 1;
        let n = T::from_f64(self.count as f64);
        let delta = x - self.mean;
        let delta_n = delta / n;
        let delta_n2 = delta_n * delta_n;
        let term1 = delta * delta_n * n1;
        self.mean = self.mean + delta_n;
        let three = T::from_f64(3.0);
        let four = T::from_f64(4.0);
        let six = T::from_f64(6.0);
        self.m4 = self.m4
            + term1 * delta_n2 * (n * n - three * n + three)
            + six * delta_n2 * self.m2
            - four * delta_n * self.m3;
        self.m3 = self.m3 + term1 * delta_n * (n - two::<T>()) - three * delta_n * self.m2;
        self.m2 = self.m2 + term1;
    }

    /// Combines two accumulators as if their samples had been seen by one.
    pub fn merge(&self, other: &Self) -> Self {
        if self.count == 0 {
            return *other;
        }
        if other.count == 0 {
            return *self;
        }
        let na = T::from_f64(self.count as f64);
        let nb = T::from_f64(other.count as f64);
        let n = na + nb;
        let delta = other.mean - self.mean;
        let delta2 = delta * delta;
        let three = T::from_f64(3.0);
        let four = T::from_f64(4.0);
        let six = T::from_f64(6.0);

        let mean = self.mean + delta * nb / n;
        let m2 = self.m2 + other.m2 + delta2 * na * nb / n;
        let m3 = self.m3
            + other.m3
            + delta2 * delta * na * nb * (na - nb) / (n * n)
            + three * delta * (na * other.m2 - nb * self.m2) / n;
        let m4 = self.m4
            + other.m4
            + delta2 * delta2 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n)
            + six * delta2 * (na * na * other.m2 + nb * nb * self.m2) / (n * n)
            + four * delta * (na * other.m3 - nb * self.m3) / n;

        MomentAccumulator {
            count: self.count + other.count,
            mean,
            m2,
            m3,
            m4,
        }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn mean(&self) -> T {
        self.mean
    }

    /// Second central moment (population variance).
    pub fn second_central(&self) -> T {
        if self.count == 0 {
            return T::zero();
        }
        self.m2 / T::from_f64(self.count as f64)
    }

    pub fn third_central(&self) -> T {
        if self.count == 0 {
            return T::zero();
        }
        self.m3 / T::from_f64(self.count as f64)
    }

    pub fn fourth_central(&self) -> T {
        if self.count == 0 {
            return T::zero();
        }
        self.m4 / T::from_f64(self.count as f64)
    }

    /// Standard error of the sample mean.
    pub fn stderr_mean(&self) -> T {
        if self.count < 2 {
            return T::infinity();
        }
        let n = T::from_f64(self.count as f64);
        (self.m2 / (n * (n - T::one()))).sqrt()
    }

    /// Standard error of the second central moment estimate.
    pub fn stderr_second(&self) -> T {
        if self.count < 2 {
            return T::infinity();
        }
        let n = T::from_f64(self.count as f64);
        let m2 = self.m2 / n;
        let m4 = self.m4 / n;
        ((m4 - m2 * m2).max(T::zero()) / n).sqrt()
    }
}

/// Monte Carlo estimates of the Rayleigh quotient's sphere moments next
/// to their closed forms.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct MomentReport<T> {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub mean_estimate: T,
    pub second_central_estimate: T,
    /// `tr S / n`: the exact sphere mean.
    pub exact_mean: T,
    /// `sigma^2 / (2n + 1)` with `sigma^2` the spectral variance: the
    /// exact sphere variance.
    pub exact_second_central: T,
    pub stderr_mean: T,
    pub stderr_second: T,
}

const MOMENT_SHARD: usize = 65536;

/// Estimates the sphere mean and variance of the Rayleigh quotient of `s`
/// by Monte Carlo and pairs them with their exact values.
///
/// Sampling is sharded: shard `i` draws from a generator seeded by
/// `derive_seed(seed, i)` and the shard accumulators merge in order, so
/// results are reproducible for a given `(seed, samples)` and shards
/// could be evaluated independently.
pub fn moments<T: Scalar>(s: &QMatrix<T>, samples: usize, seed: u64) -> Result<MomentReport<T>> {
    ensure_hermitian(s)?;
    if !s.is_square() {
        return Err(Error::NotSquare {
            rows: s.rows(),
            cols: s.cols(),
        });
    }
    if samples == 0 {
        return Err(Error::Precondition("moment estimation needs samples".into()));
    }
    let n = s.rows();

    let eig = hermitian_right_eigen(s)?;
    let nt = T::from_f64(n as f64);
    let exact_mean = eig.values.iter().fold(T::zero(), |acc, &t| acc + t) / nt;
    let spectral_var = eig
        .values
        .iter()
        .fold(T::zero(), |acc, &t| acc + (t - exact_mean) * (t - exact_mean))
        / nt;
    let exact_second_central = spectral_var / (two::<T>() * nt + T::one());

    let mut total = MomentAccumulator::new();
    let shards = samples.div_ceil(MOMENT_SHARD);
    for shard in 0..shards {
        let mut rng = seeded_rng(derive_seed(seed, shard as u64));
        let mut acc = MomentAccumulator::new();
        let quota = MOMENT_SHARD.min(samples - shard * MOMENT_SHARD);
        for _ in 0..quota {
            let v = sphere_sample::<T, _>(n, &mut rng);
            acc.update(rayleigh_re(s, &v)?);
        }
        total = total.merge(&acc);
    }

    Ok(MomentReport {
        n,
        samples,
        seed,
        mean_estimate: total.mean(),
        second_central_estimate: total.second_central(),
        exact_mean,
        exact_second_central,
        stderr_mean: total.stderr_mean(),
        stderr_second: total.stderr_second(),
    })
}
