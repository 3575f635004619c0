//! Cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! Each rotation first strips the phase of the target off-diagonal entry
//! (a unitary diagonal similarity), then applies the classical real Jacobi
//! rotation that annihilates it. Sweeps run over all `p < q` in row order
//! until the off-diagonal Frobenius mass falls below `1e-13 * |H|_F`
//! (floored near machine epsilon for coarser scalars).

use num_complex::Complex;

use crate::cmatrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::{two, Scalar};

const MAX_SWEEPS: usize = 64;

/// Full eigendecomposition of a Hermitian matrix: ascending eigenvalues and
/// a unitary matrix of eigenvector columns in matching order.
pub fn hermitian_complex_eigen<T: Scalar>(
    h: &ComplexMatrix<T>,
) -> Result<(Vec<T>, ComplexMatrix<T>)> {
    if !h.is_square() {
        return Err(Error::NotSquare {
            rows: h.rows(),
            cols: h.cols(),
        });
    }
    let dev = h.hermitian_deviation();
    let herm_tol = T::tol_floor(1e-10) * (T::one() + h.max_abs());
    if dev > herm_tol {
        return Err(Error::NotHermitian {
            deviation: dev.as_f64(),
        });
    }

    let n = h.rows();
    let mut a = h.clone();
    let mut v = ComplexMatrix::identity(n);
    if n <= 1 {
        let vals = (0..n).map(|d| a[(d, d)].re).collect();
        return Ok((vals, v));
    }

    let norm0 = a.frobenius_norm();
    let target = T::tol_floor(1e-13) * norm0;
    let mut converged = norm0 == T::zero() || off_diagonal_mass(&a) <= target;

    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        converged = off_diagonal_mass(&a) <= target;
    }
    if !converged {
        return Err(Error::NoConvergence {
            iterations: MAX_SWEEPS,
        });
    }

    // ascending, permuting eigenvector columns alongside
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(i, i)]
            .re
            .partial_cmp(&a[(j, j)].re)
            .expect("eigenvalues are finite")
    });
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (new_c, &old_c) in order.iter().enumerate() {
        for r in 0..n {
            vectors[(r, new_c)] = v[(r, old_c)];
        }
    }
    Ok((values, vectors))
}

fn off_diagonal_mass<T: Scalar>(a: &ComplexMatrix<T>) -> T {
    let n = a.rows();
    let mut acc = T::zero();
    for r in 0..n {
        for c in 0..n {
            if r != c {
                acc = acc + a[(r, c)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Annihilates `a[p][q]` (and its mirror) by a unitary similarity, updating
/// the eigenvector accumulator `v` on the right.
fn rotate<T: Scalar>(a: &mut ComplexMatrix<T>, v: &mut ComplexMatrix<T>, p: usize, q: usize) {
    let n = a.rows();
    let apq = a[(p, q)];
    let m = apq.norm();
    if m == T::zero() {
        return;
    }

    // diagonal phase W = diag(.., u_bar at q ..) with u = apq / m turns the
    // target entry real: row q scales by u, column q by conj(u)
    let u = apq / m;
    let ubar = u.conj();
    for c in 0..n {
        a[(q, c)] = u * a[(q, c)];
    }
    for r in 0..n {
        a[(r, q)] = a[(r, q)] * ubar;
    }
    for r in 0..n {
        v[(r, q)] = v[(r, q)] * ubar;
    }

    // classical real rotation zeroing the now-real entry
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (two::<T>() * m);
    let sign = if tau < T::zero() { -T::one() } else { T::one() };
    let t = sign / (tau.abs() + (T::one() + tau * tau).sqrt());
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;

    for col in 0..n {
        let old_p = a[(p, col)];
        let old_q = a[(q, col)];
        a[(p, col)] = old_p.scale(c) - old_q.scale(s);
        a[(q, col)] = old_p.scale(s) + old_q.scale(c);
    }
    for row in 0..n {
        let old_p = a[(row, p)];
        let old_q = a[(row, q)];
        a[(row, p)] = old_p.scale(c) - old_q.scale(s);
        a[(row, q)] = old_p.scale(s) + old_q.scale(c);
    }
    for row in 0..n {
        let old_p = v[(row, p)];
        let old_q = v[(row, q)];
        v[(row, p)] = old_p.scale(c) - old_q.scale(s);
        v[(row, q)] = old_p.scale(s) + old_q.scale(c);
    }

    // exact zeros where the rotation mathematically puts them, and a real
    // diagonal, keep roundoff from accumulating asymmetry
    a[(p, q)] = Complex::new(T::zero(), T::zero());
    a[(q, p)] = Complex::new(T::zero(), T::zero());
    a[(p, p)].im = T::zero();
    a[(q, q)].im = T::zero();
}
