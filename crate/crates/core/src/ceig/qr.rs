//! Eigenvalues of general complex matrices: Householder reduction to upper
//! Hessenberg form, then shifted QR iteration with deflation.
//!
//! Values only; no eigenvectors are accumulated. Windows that shrink to
//! `2 x 2` are solved in closed form, larger ones take Wilkinson-shifted
//! explicit QR steps built from Givens rotations, with an exceptional shift
//! thrown in when a window refuses to deflate.

use num_complex::Complex;

use crate::cmatrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::{half, Scalar};

/// Iteration budget per unit of dimension.
const STEPS_PER_DIM: usize = 100;
/// A window this many steps without deflating gets an exceptional shift.
const STALL_PERIOD: usize = 13;

pub fn general_complex_eigenvalues<T: Scalar>(
    m: &ComplexMatrix<T>,
) -> Result<Vec<Complex<T>>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Vec::new());
    }

    let mut h = m.clone();
    hessenberg_in_place(&mut h);
    let hnorm = h.frobenius_norm();

    let mut eigs: Vec<Complex<T>> = Vec::with_capacity(n);
    let budget = STEPS_PER_DIM * n;
    let mut used = 0usize;
    let mut stall = 0usize;
    let mut hi = n; // rows [0, hi) remain active

    let negligible = |h: &ComplexMatrix<T>, i: usize| -> bool {
        let s = h[(i - 1, i - 1)].norm() + h[(i, i)].norm();
        let scale = if s > T::zero() { s } else { hnorm };
        h[(i, i - 1)].norm() <= T::epsilon() * scale
    };

    while hi > 0 {
        if hi == 1 {
            eigs.push(h[(0, 0)]);
            hi = 0;
            continue;
        }
        if negligible(&h, hi - 1) {
            eigs.push(h[(hi - 1, hi - 1)]);
            hi -= 1;
            stall = 0;
            continue;
        }
        // the fully coupled window [lo, hi)
        let mut lo = hi - 1;
        while lo > 0 && !negligible(&h, lo) {
            lo -= 1;
        }
        if hi - lo == 2 {
            let (e1, e2) = eigen2(h[(lo, lo)], h[(lo, lo + 1)], h[(lo + 1, lo)], h[(lo + 1, lo + 1)]);
            eigs.push(e1);
            eigs.push(e2);
            hi -= 2;
            stall = 0;
            continue;
        }
        if used >= budget {
            return Err(Error::NoConvergence { iterations: budget });
        }
        used += 1;
        stall += 1;
        let shift = if stall.is_multiple_of(STALL_PERIOD) {
            // eigenvalue estimates are stuck; kick the iteration with a
            // magnitude drawn from the subdiagonal
            let kick = h[(hi - 1, hi - 2)].norm()
                + if hi >= 3 && hi - 2 > lo {
                    h[(hi - 2, hi - 3)].norm()
                } else {
                    T::zero()
                };
            h[(hi - 1, hi - 1)] + Complex::new(kick, T::zero())
        } else {
            wilkinson_shift(&h, hi)
        };
        qr_step(&mut h, lo, hi, shift);
    }

    eigs.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .expect("eigenvalues are finite")
    });
    Ok(eigs)
}

/// Householder similarity reduction to upper Hessenberg form.
fn hessenberg_in_place<T: Scalar>(h: &mut ComplexMatrix<T>) {
    let n = h.rows();
    if n < 3 {
        return;
    }
    for k in 0..n - 2 {
        let mut v: Vec<Complex<T>> = (k + 1..n).map(|r| h[(r, k)]).collect();
        let xnorm = v
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt();
        if xnorm == T::zero() {
            continue;
        }
        let x0 = v[0];
        let phase = if x0.norm() == T::zero() {
            Complex::new(T::one(), T::zero())
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * xnorm;
        v[0] = v[0] - alpha;
        let vnorm2 = v.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr());
        if vnorm2 <= T::epsilon() * T::epsilon() * xnorm * xnorm {
            continue;
        }
        let scale = two_over(vnorm2);

        // rows k+1..n: H <- (I - 2 v v^H / |v|^2) H
        for c in 0..n {
            let mut dot = Complex::new(T::zero(), T::zero());
            for (off, vr) in v.iter().enumerate() {
                dot = dot + vr.conj() * h[(k + 1 + off, c)];
            }
            let dot = dot.scale(scale);
            for (off, vr) in v.iter().enumerate() {
                h[(k + 1 + off, c)] = h[(k + 1 + off, c)] - *vr * dot;
            }
        }
        // columns k+1..n: H <- H (I - 2 v v^H / |v|^2)
        for r in 0..n {
            let mut dot = Complex::new(T::zero(), T::zero());
            for (off, vc) in v.iter().enumerate() {
                dot = dot + h[(r, k + 1 + off)] * *vc;
            }
            let dot = dot.scale(scale);
            for (off, vc) in v.iter().enumerate() {
                h[(r, k + 1 + off)] = h[(r, k + 1 + off)] - dot * vc.conj();
            }
        }
        // the column is now exactly the reflection target
        h[(k + 1, k)] = alpha;
        for r in k + 2..n {
            h[(r, k)] = Complex::new(T::zero(), T::zero());
        }
    }
}

#[inline]
fn two_over<T: Scalar>(x: T) -> T {
    (T::one() + T::one()) / x
}

/// Closed-form eigenvalues of `[[a, b], [c, d]]`.
fn eigen2<T: Scalar>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    d: Complex<T>,
) -> (Complex<T>, Complex<T>) {
    let mean = (a + d).scale(half::<T>());
    let diff = (a - d).scale(half::<T>());
    let disc = (diff * diff + b * c).sqrt();
    (mean + disc, mean - disc)
}

/// The eigenvalue of the trailing `2 x 2` block closer to the corner entry.
fn wilkinson_shift<T: Scalar>(h: &ComplexMatrix<T>, hi: usize) -> Complex<T> {
    let corner = h[(hi - 1, hi - 1)];
    let (e1, e2) = eigen2(
        h[(hi - 2, hi - 2)],
        h[(hi - 2, hi - 1)],
        h[(hi - 1, hi - 2)],
        corner,
    );
    if (e1 - corner).norm() <= (e2 - corner).norm() {
        e1
    } else {
        e2
    }
}

/// One explicit shifted QR step on the window `[lo, hi)`:
/// factor `H - mu I = Q R` by Givens rotations down the subdiagonal, then
/// form `R Q + mu I`.
fn qr_step<T: Scalar>(h: &mut ComplexMatrix<T>, lo: usize, hi: usize, mu: Complex<T>) {
    for d in lo..hi {
        h[(d, d)] = h[(d, d)] - mu;
    }
    let mut rotations: Vec<(T, Complex<T>)> = Vec::with_capacity(hi - lo - 1);
    for i in lo..hi - 1 {
        let (c, s) = givens(h[(i, i)], h[(i + 1, i)]);
        for col in i..hi {
            let top = h[(i, col)];
            let bot = h[(i + 1, col)];
            h[(i, col)] = top.scale(c) + s * bot;
            h[(i + 1, col)] = -s.conj() * top + bot.scale(c);
        }
        h[(i + 1, i)] = Complex::new(T::zero(), T::zero());
        rotations.push((c, s));
    }
    for (idx, (c, s)) in rotations.into_iter().enumerate() {
        let i = lo + idx;
        for row in lo..=(i + 1).min(hi - 1) {
            let left = h[(row, i)];
            let right = h[(row, i + 1)];
            h[(row, i)] = left.scale(c) + right * s.conj();
            h[(row, i + 1)] = -left * s + right.scale(c);
        }
    }
    for d in lo..hi {
        h[(d, d)] = h[(d, d)] + mu;
    }
}

/// Rotation `[[c, s], [-conj(s), c]]` with real `c` sending `(f, g)` to
/// `(r, 0)`.
fn givens<T: Scalar>(f: Complex<T>, g: Complex<T>) -> (T, Complex<T>) {
    let gn = g.norm();
    if gn == T::zero() {
        return (T::one(), Complex::new(T::zero(), T::zero()));
    }
    let fn_ = f.norm();
    if fn_ == T::zero() {
        return (T::zero(), g.conj() / gn);
    }
    let denom = (fn_ * fn_ + gn * gn).sqrt();
    let c = fn_ / denom;
    let s = (f / fn_) * g.conj() / denom;
    (c, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ceig::jacobi::hermitian_complex_eigen;
    use crate::matrix::QMatrix;
    use crate::quat::Quaternion;
    use crate::random::{random_qmatrix, seeded_rng};
    use rand::Rng;

    type C = Complex<f64>;
    type M = ComplexMatrix<f64>;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    // multiset comparison: every expected value claims its nearest
    // computed value (sort order is unreliable when real parts tie at
    // roundoff level)
    fn assert_spectra_match(got: &[C], want: &mut [C], tol: f64) {
        assert_eq!(got.len(), want.len());
        let mut pool: Vec<C> = got.to_vec();
        for w in want.iter() {
            let (idx, dist) = pool
                .iter()
                .enumerate()
                .map(|(i, g)| (i, (g - w).norm()))
                .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .expect("nonempty pool");
            assert!(dist <= tol, "no eigenvalue near {w} (closest off by {dist})");
            pool.swap_remove(idx);
        }
    }

    #[test]
    fn diagonal_and_triangular() {
        let d = M::from_rows(vec![
            vec![c(2.0, 1.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(-1.0, 3.0)],
        ])
        .unwrap();
        let got = general_complex_eigenvalues(&d).unwrap();
        assert_spectra_match(&got, &mut [c(2.0, 1.0), c(-1.0, 3.0)], 1e-14);

        let t = M::from_rows(vec![
            vec![c(1.0, 0.0), c(5.0, -2.0), c(0.5, 0.0)],
            vec![c(0.0, 0.0), c(4.0, 0.0), c(1.0, 1.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, -2.0)],
        ])
        .unwrap();
        let got = general_complex_eigenvalues(&t).unwrap();
        assert_spectra_match(&got, &mut [c(1.0, 0.0), c(4.0, 0.0), c(0.0, -2.0)], 1e-12);
    }

    #[test]
    fn embedding_of_ji_fixture() {
        // the complex adjoint of [[0, j], [i, 0]] has the four unit
        // eigenvalues (+-1 + i)/sqrt(2) and conjugates
        let m = QMatrix::from_rows(vec![
            vec![Quaternion::<f64>::zero(), Quaternion::j()],
            vec![Quaternion::i(), Quaternion::zero()],
        ])
        .unwrap();
        let got = general_complex_eigenvalues(&m.complex_adjoint().unwrap()).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut want = vec![c(s, s), c(s, -s), c(-s, s), c(-s, -s)];
        assert_spectra_match(&got, &mut want, 1e-8);
        for z in &got {
            assert!((z.norm() - 1.0).abs() <= 1e-10);
        }
    }

    #[test]
    fn companion_double_root() {
        // companion matrix of x^2 - 2x + 1; the double root at 1 is the
        // ill-conditioned stress case, so verify through the polynomial
        let m = M::from_rows(vec![
            vec![c(2.0, 0.0), c(-1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let got = general_complex_eigenvalues(&m).unwrap();
        assert_eq!(got.len(), 2);
        for z in &got {
            let p = z * z - z.scale(2.0) + c(1.0, 0.0);
            assert!(p.norm() <= 1e-12, "char poly residual {} at {z}", p.norm());
            assert!((z - c(1.0, 0.0)).norm() <= 1e-6);
        }
    }

    #[test]
    fn agrees_with_jacobi_on_hermitian_input() {
        let mut rng = seeded_rng(29);
        for n in 2..=5 {
            let s = random_qmatrix::<f64, _>(n, n, &mut rng)
                .hermitian_part()
                .unwrap();
            let h = s.complex_adjoint().unwrap();
            let (jac, _) = hermitian_complex_eigen(&h).unwrap();
            let qr = general_complex_eigenvalues(&h).unwrap();
            let scale = 1.0 + h.frobenius_norm();
            for (a, b) in qr.iter().zip(jac.iter()) {
                // QR sorts by (re, im); Jacobi ascending: same order here
                assert!((a.re - b).abs() <= 1e-9 * scale, "{a} vs {b} at n={n}");
                assert!(a.im.abs() <= 1e-9 * scale);
            }
        }
    }

    #[test]
    fn similarity_invariance() {
        let mut rng = seeded_rng(31);
        let n = 4;
        // random complex matrix and a random similarity by a unitary factor
        let mut a = M::zeros(n, n);
        for r in 0..n {
            for col in 0..n {
                a[(r, col)] = c(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5);
            }
        }
        // unitary factor from the Jacobi eigenvectors of a random Hermitian
        let s = random_qmatrix::<f64, _>(2, 2, &mut rng).hermitian_part().unwrap();
        let (_, u) = hermitian_complex_eigen(&s.complex_adjoint().unwrap()).unwrap();
        let b = u.adjoint().matmul(&a).unwrap().matmul(&u).unwrap();

        let ea = general_complex_eigenvalues(&a).unwrap();
        let mut eb = general_complex_eigenvalues(&b).unwrap();
        assert_spectra_match(&ea, &mut eb, 1e-8);
    }

    #[test]
    fn rotation_rich_spectra_converge() {
        // unitary companion-like matrix: eigenvalues are the 6th roots of
        // unity, all on the unit circle (shift strategy stress case)
        let n = 6;
        let mut m = M::zeros(n, n);
        for r in 0..n - 1 {
            m[(r + 1, r)] = c(1.0, 0.0);
        }
        m[(0, n - 1)] = c(1.0, 0.0);
        let got = general_complex_eigenvalues(&m).unwrap();
        for z in &got {
            let p = z.powu(6) - c(1.0, 0.0);
            assert!(p.norm() <= 1e-9, "z^6 - 1 = {} at {z}", p.norm());
        }
        let mut want: Vec<C> = (0..n)
            .map(|k| {
                let th = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                c(th.cos(), th.sin())
            })
            .collect();
        assert_spectra_match(&got, &mut want, 1e-8);
    }
}
