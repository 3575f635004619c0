//! Right eigenvalue structure of quaternionic matrices through the complex
//! adjoint.
//!
//! A square quaternionic matrix acts on `H^n` with scalars on the right;
//! its right eigenvalues fill similarity classes, one class per conjugate
//! pair of eigenvalues of the `2n x 2n` complex adjoint. For Hermitian
//! matrices the classes are real and quaternionic eigenvectors can be
//! reconstructed from the complex ones.

pub mod jacobi;
pub mod qr;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

pub use jacobi::hermitian_complex_eigen;
pub use qr::general_complex_eigenvalues;

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::scalar::{half, Scalar};
use crate::subspace::{gram_schmidt_with_tol, Subspace};
use crate::vector::QVector;

/// Default absolute tolerance for matching conjugate pairs in the spectrum
/// of a complex adjoint.
pub fn default_pairing_tol<T: Scalar>() -> T {
    T::tol_floor(1e-6)
}

/// Gap threshold below which two (real) eigenvalues belong to one cluster.
pub fn cluster_gap<T: Scalar>(t: T) -> T {
    T::tol_floor(1e-7) * (T::one() + t.abs())
}

/// A similarity class of right eigenvalues, canonically represented by
/// `real_part + imag_norm * i` with `imag_norm >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct SimilarityClass<T> {
    pub real_part: T,
    pub imag_norm: T,
    /// How many of the returned classes coincide with this one (clustered
    /// at the gap threshold); equal classes all carry the cluster size.
    pub multiplicity: usize,
}

impl<T: Scalar> SimilarityClass<T> {
    pub fn representative(&self) -> Complex<T> {
        Complex::new(self.real_part, self.imag_norm)
    }

    /// Norm shared by every member of the class.
    pub fn norm(&self) -> T {
        (self.real_part * self.real_part + self.imag_norm * self.imag_norm).sqrt()
    }
}

/// Eigendecomposition of a Hermitian quaternionic matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct HermitianEigen<T> {
    /// The `n` eigenvalues ascending, repeated per multiplicity.
    pub values: Vec<T>,
    /// Orthonormal quaternionic eigenvectors, `basis.basis()[i]` belonging
    /// to `values[i]`.
    pub basis: Subspace<T>,
    /// Cluster sizes of the distinct eigenvalues, summing to `n`.
    pub multiplicities: Vec<usize>,
}

impl<T: Scalar> HermitianEigen<T> {
    /// One representative value per distinct cluster, ascending.
    pub fn distinct_values(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.multiplicities.len());
        let mut idx = 0;
        for &l in &self.multiplicities {
            out.push(self.values[idx]);
            idx += l;
        }
        out
    }
}

/// The right eigenvalue classes of a square quaternionic matrix: exactly
/// `n` entries counted with multiplicity, ascending by real part then by
/// imaginary norm.
///
/// The spectrum of the complex adjoint is closed under conjugation; each
/// conjugate pair collapses to one class, symmetrizing the pair against
/// roundoff.
pub fn right_eigen_classes<T: Scalar>(m: &QMatrix<T>) -> Result<Vec<SimilarityClass<T>>> {
    let c = m.complex_adjoint()?;
    let values = general_complex_eigenvalues(&c)?;
    let mut reps = pair_conjugates(values, default_pairing_tol::<T>())?;
    reps.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));

    let mut classes: Vec<SimilarityClass<T>> = reps
        .into_iter()
        .map(|(real_part, imag_norm)| SimilarityClass {
            real_part,
            imag_norm,
            multiplicity: 1,
        })
        .collect();

    // annotate clusters of coinciding classes
    let mut start = 0;
    while start < classes.len() {
        let mut end = start + 1;
        while end < classes.len() {
            let gap = cluster_gap(classes[start].real_part);
            let same = (classes[end].real_part - classes[end - 1].real_part).abs() <= gap
                && (classes[end].imag_norm - classes[end - 1].imag_norm).abs() <= gap;
            if !same {
                break;
            }
            end += 1;
        }
        for item in &mut classes[start..end] {
            item.multiplicity = end - start;
        }
        start = end;
    }
    Ok(classes)
}

/// Greedily matches each spectrum point with its complex conjugate,
/// starting from the largest imaginary part; a miss beyond `tol` is a
/// [`Error::PairingFailure`]. Returns `(real part, imaginary norm)` for
/// each pair.
pub fn pair_conjugates<T: Scalar>(
    values: Vec<Complex<T>>,
    tol: T,
) -> Result<Vec<(T, T)>> {
    let mut pool = values;
    let mut out = Vec::with_capacity(pool.len() / 2);
    while !pool.is_empty() {
        // the unpaired value farthest from the real axis anchors the pair
        let mut anchor_idx = 0;
        for i in 1..pool.len() {
            let better = pool[i].im.abs() > pool[anchor_idx].im.abs()
                || (pool[i].im.abs() == pool[anchor_idx].im.abs()
                    && (pool[i].re, pool[i].im) > (pool[anchor_idx].re, pool[anchor_idx].im));
            if better {
                anchor_idx = i;
            }
        }
        let z = pool.swap_remove(anchor_idx);
        if pool.is_empty() {
            return Err(Error::PairingFailure {
                re: z.re.as_f64(),
                im: z.im.as_f64(),
                best: f64::INFINITY,
                tol: tol.as_f64(),
            });
        }
        let target = z.conj();
        let mut best_idx = 0;
        let mut best = (target - pool[0]).norm();
        for (i, p) in pool.iter().enumerate().skip(1) {
            let d = (target - *p).norm();
            if d < best {
                best = d;
                best_idx = i;
            }
        }
        if best > tol {
            return Err(Error::PairingFailure {
                re: z.re.as_f64(),
                im: z.im.as_f64(),
                best: best.as_f64(),
                tol: tol.as_f64(),
            });
        }
        let w = pool.swap_remove(best_idx);
        out.push((
            (z.re + w.re) * half::<T>(),
            (z.im.abs() + w.im.abs()) * half::<T>(),
        ));
    }
    Ok(out)
}

/// Hermitian eigendecomposition over the quaternions.
///
/// The complex adjoint is diagonalized by Jacobi rotations; its spectrum
/// carries each quaternionic eigenvalue twice, and the complex eigenvector
/// pairs of a cluster reconstruct a quaternionic orthonormal eigenbasis by
/// unstacking `(a; b) -> a + j b` and orthonormalizing.
pub fn hermitian_right_eigen<T: Scalar>(s: &QMatrix<T>) -> Result<HermitianEigen<T>> {
    let dev = s.hermitian_deviation()?;
    let herm_tol = T::tol_floor(1e-10) * (T::one() + s.max_entry_norm());
    if dev > herm_tol {
        return Err(Error::NotHermitian {
            deviation: dev.as_f64(),
        });
    }
    let n = s.rows();
    let c = s.complex_adjoint()?;
    let (cvals, cvecs) = hermitian_complex_eigen(&c)?;

    let mut values: Vec<T> = Vec::with_capacity(n);
    let mut multiplicities: Vec<usize> = Vec::new();
    let mut basis: Vec<QVector<T>> = Vec::with_capacity(n);

    let resid_tol = T::tol_floor(1e-9) * (T::one() + s.frobenius_norm());
    let mut start = 0usize;
    while start < cvals.len() {
        let mut end = start + 1;
        while end < cvals.len() && (cvals[end] - cvals[end - 1]).abs() <= cluster_gap(cvals[start])
        {
            end += 1;
        }
        let size = end - start;
        if !size.is_multiple_of(2) {
            return Err(Error::ReconstructionFailure(format!(
                "eigenvalue cluster at {} has odd complex multiplicity {}",
                cvals[start], size
            )));
        }
        let l = size / 2;
        let mean = cvals[start..end]
            .iter()
            .fold(T::zero(), |acc, &t| acc + t)
            / T::from_f64(size as f64);

        // every complex eigenvector in the cluster unstacks into the
        // quaternionic eigenspace, which has right dimension l
        let candidates: Vec<QVector<T>> = (start..end)
            .map(|col| QMatrix::unstack_complex(&cvecs.column(col)))
            .collect();
        let ortho = gram_schmidt_with_tol(&candidates, T::from_f64(1e-6));
        if ortho.dim() != l {
            return Err(Error::ReconstructionFailure(format!(
                "cluster at {} reconstructed rank {} instead of {}",
                mean,
                ortho.dim(),
                l
            )));
        }
        for u in ortho.basis() {
            let su = s.apply(u)?;
            let resid = (&su - &u.scale(mean)).norm();
            if resid > resid_tol {
                return Err(Error::ReconstructionFailure(format!(
                    "eigenvector residual {} exceeds {} at eigenvalue {}",
                    resid, resid_tol, mean
                )));
            }
            basis.push(u.clone());
            values.push(mean);
        }
        multiplicities.push(l);
        start = end;
    }

    debug_assert_eq!(values.len(), n);
    Ok(HermitianEigen {
        values,
        basis: Subspace::new(n, basis),
        multiplicities,
    })
}

/// Spectral range helper: `(min, max)` eigenvalue of a Hermitian matrix.
pub fn hermitian_extremes<T: Scalar>(s: &QMatrix<T>) -> Result<(T, T)> {
    let eig = hermitian_right_eigen(s)?;
    let lo = *eig.values.first().ok_or(Error::EmptySubspace)?;
    let hi = *eig.values.last().expect("nonempty");
    Ok((lo, hi))
}

/// Largest `|t|` over the spectrum of a Hermitian matrix.
pub fn spectral_radius<T: Scalar>(values: &[T]) -> T {
    values.iter().fold(T::zero(), |acc, t| acc.max(t.abs()))
}
