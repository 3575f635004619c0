//! Kernel computation by Gaussian elimination over the quaternions.
//!
//! Row operations act by left multiplication, so they preserve the solution
//! set of `M v = 0`, and that solution set is a right subspace because the
//! unknowns are multiplied by scalars on the right.

use crate::matrix::QMatrix;
use crate::quat::Quaternion;
use crate::scalar::Scalar;
use crate::subspace::{gram_schmidt_with_tol, Subspace};
use crate::vector::QVector;

/// Default rank tolerance for `M`: `1e-10 * max(1, largest entry norm)`.
pub fn default_rank_tol<T: Scalar>(m: &QMatrix<T>) -> T {
    T::tol_floor(1e-10) * T::one().max(m.max_entry_norm())
}

/// Orthonormal basis of `{ v : M v = 0 }`, pivoting on the largest-norm
/// entry remaining in each working column. Entries with norm at or below
/// `tol` are treated as zero, which is what decides the rank.
pub fn null_space<T: Scalar>(m: &QMatrix<T>, tol: T) -> Subspace<T> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut pivots: Vec<(usize, usize)> = Vec::new();

    for pc in 0..cols {
        let pr = pivots.len();
        if pr == rows {
            break;
        }
        // largest-norm pivot among the remaining rows of this column
        let mut best = pr;
        let mut best_norm = a[(pr, pc)].norm();
        for r in (pr + 1)..rows {
            let n = a[(r, pc)].norm();
            if n > best_norm {
                best = r;
                best_norm = n;
            }
        }
        if best_norm <= tol {
            continue; // free column
        }
        if best != pr {
            for c in 0..cols {
                let tmp = a[(pr, c)];
                a[(pr, c)] = a[(best, c)];
                a[(best, c)] = tmp;
            }
        }
        // normalize the pivot row: row <- p^-1 * row
        let pinv = a[(pr, pc)].inverse().expect("pivot norm exceeds tol");
        for c in 0..cols {
            a[(pr, c)] = pinv * a[(pr, c)];
        }
        a[(pr, pc)] = Quaternion::one();
        // eliminate the column everywhere else: row_r <- row_r - f * row_pr
        for r in 0..rows {
            if r == pr {
                continue;
            }
            let f = a[(r, pc)];
            if f.is_zero() {
                continue;
            }
            for c in 0..cols {
                let sub = f * a[(pr, c)];
                a[(r, c)] = a[(r, c)] - sub;
            }
            a[(r, pc)] = Quaternion::zero();
        }
        pivots.push((pr, pc));
    }

    // one basis vector per free column: unit there, minus the reduced
    // column at the pivot coordinates
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis: Vec<QVector<T>> = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = QVector::zeros(cols);
        v[free] = Quaternion::one();
        for &(r, c) in &pivots {
            v[c] = -a[(r, free)];
        }
        basis.push(v);
    }

    // the vectors are independent by construction (distinct unit slots);
    // orthonormalize with a tolerance that cannot drop any of them
    gram_schmidt_with_tol(&basis, T::from_f64(0.5))
}

/// [`null_space`] at the default tolerance.
pub fn null_space_default<T: Scalar>(m: &QMatrix<T>) -> Subspace<T> {
    null_space(m, default_rank_tol(m))
}

/// `cols - dim null_space`, the right rank.
pub fn rank<T: Scalar>(m: &QMatrix<T>, tol: T) -> usize {
    m.cols() - null_space(m, tol).dim()
}
