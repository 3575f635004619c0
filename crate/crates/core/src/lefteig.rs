//! Left eigenvalues of 2x2 quaternionic matrices and their relationship
//! to the right spectrum.
//!
//! A left eigenvalue solves `A v = lambda v` with the scalar on the left.
//! Unlike right eigenvalues, left ones do not form similarity classes and
//! are not preserved by unitary conjugation. For a 2x2 matrix with
//! nonzero upper-right entry `b`, every left eigenvalue is `a + b x` for
//! a root `x` of the quadratic `x^2 + a1 x + a0` with `a1 = b^{-1}(a - d)`
//! and `a0 = -b^{-1} c`; the spectrum is infinite exactly when `a1` and
//! `a0` are real with `a1^2 - 4 a0 < 0`, in which case it is a round
//! 2-sphere of quaternions.

use serde::{Deserialize, Serialize};

use crate::ceig::{cluster_gap, hermitian_right_eigen, right_eigen_classes, SimilarityClass};
use crate::elim::null_space;
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::quat::Quaternion;
use crate::random::{random_qvector, seeded_rng};
use crate::rayleigh::{rayleigh_quotient, rayleigh_re};
use crate::scalar::{half, two, Scalar};
use crate::subspace::Subspace;

/// A 2-sphere of left eigenvalues: `base + coeff * omega * radius` as
/// `omega` runs over the pure unit quaternions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct Family<T> {
    pub base: Quaternion<T>,
    pub coeff: Quaternion<T>,
    pub radius: T,
}

impl<T: Scalar> Family<T> {
    /// The member reached by the pure unit direction `omega`.
    pub fn member(&self, omega: Quaternion<T>) -> Quaternion<T> {
        self.base + (self.coeff * omega).scale(self.radius)
    }

    pub fn members(&self, omegas: &[Quaternion<T>]) -> Vec<Quaternion<T>> {
        omegas.iter().map(|&w| self.member(w)).collect()
    }

    /// Whether `lambda` lies on the sphere, within `tol`.
    pub fn contains(&self, lambda: Quaternion<T>, tol: T) -> bool {
        let shifted = lambda - self.base;
        let reach = self.coeff.norm() * self.radius;
        if reach <= tol {
            return shifted.norm() <= tol;
        }
        let mu = match self.coeff.inverse() {
            Ok(inv) => inv * shifted,
            Err(_) => return false,
        };
        // mu must be omega * radius for a pure unit omega
        let scale = T::one() + self.radius;
        mu.w.abs() <= tol * scale && (mu.pure_norm() - self.radius).abs() <= tol * scale
    }

    /// Whether the two spheres coincide as point sets. Left factors that
    /// differ by sign or describe the split between `coeff` and `radius`
    /// differently still give the same set.
    pub fn same_set(&self, other: &Family<T>, tol: T) -> bool {
        if self.base.dist(&other.base) > tol {
            return false;
        }
        let ra = self.coeff.norm() * self.radius;
        let rb = other.coeff.norm() * other.radius;
        if (ra - rb).abs() > tol * (T::one() + ra) {
            return false;
        }
        if ra <= tol {
            return true;
        }
        let u = self.coeff.scale(T::one() / self.coeff.norm());
        let v = other.coeff.scale(T::one() / other.coeff.norm());
        u.dist(&v).min((u + v).norm()) <= tol
    }
}

/// The left spectrum of a 2x2 matrix: either finitely many values (one
/// or two) or a whole sphere.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(
    tag = "kind",
    content = "value",
    rename_all = "snake_case",
    bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>")
)]
pub enum LeftSpectrum<T> {
    Finite(Vec<Quaternion<T>>),
    Infinite(Family<T>),
}

impl<T: Scalar> LeftSpectrum<T> {
    pub fn is_infinite(&self) -> bool {
        matches!(self, LeftSpectrum::Infinite(_))
    }

    pub fn contains(&self, lambda: Quaternion<T>, tol: T) -> bool {
        match self {
            LeftSpectrum::Finite(vals) => vals.iter().any(|v| v.dist(&lambda) <= tol),
            LeftSpectrum::Infinite(family) => family.contains(lambda, tol),
        }
    }
}

fn lex_sort<T: Scalar>(roots: &mut [Quaternion<T>]) {
    roots.sort_by(|p, q| {
        (p.w, p.x, p.y, p.z)
            .partial_cmp(&(q.w, q.x, q.y, q.z))
            .expect("finite components")
    });
}

fn dedup_roots<T: Scalar>(mut roots: Vec<Quaternion<T>>, tol: T) -> Vec<Quaternion<T>> {
    lex_sort(&mut roots);
    let mut out: Vec<Quaternion<T>> = Vec::with_capacity(roots.len());
    for r in roots {
        if out.iter().all(|kept| kept.dist(&r) > tol) {
            out.push(r);
        }
    }
    out
}

/// Left eigenvalues of a 2x2 quaternionic matrix.
///
/// Triangular matrices read their left spectrum `{a, d}` off the
/// diagonal. Otherwise the quadratic in the module description decides:
/// real coefficients give a closed form (two reals, a double real, or
/// the infinite sphere), anything else goes to the Newton search of
/// [`quaternion_quadratic_roots`].
pub fn left_eigs_2x2<T: Scalar>(m: &QMatrix<T>) -> Result<LeftSpectrum<T>> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::NotTwoByTwo {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let (a, b, c, d) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
    let scale = T::one() + m.max_entry_norm();
    let dedup_tol = T::tol_floor(1e-6) * scale;

    if b.is_zero() || c.is_zero() {
        return Ok(LeftSpectrum::Finite(dedup_roots(vec![a, d], dedup_tol)));
    }

    let b_inv = b.inverse()?;
    let a1 = b_inv * (a - d);
    let a0 = -(b_inv * c);
    let coef_scale = T::one() + a1.norm() + a0.norm();
    let real_tol = T::tol_floor(1e-10) * coef_scale;

    if a1.pure_norm() <= real_tol && a0.pure_norm() <= real_tol {
        let (p, q) = (a1.w, a0.w);
        let disc = p * p - T::from_f64(4.0) * q;
        if disc < T::zero() {
            // the root set is the sphere  -p/2 + omega sqrt(-disc)/2,
            // carried to eigenvalues by lambda = a + b x
            return Ok(LeftSpectrum::Infinite(Family {
                base: a - b.scale(p * half::<T>()),
                coeff: b.scale(half::<T>()),
                radius: disc.abs().sqrt(),
            }));
        }
        let s = disc.sqrt();
        let x_lo = (-p - s) * half::<T>();
        let x_hi = (-p + s) * half::<T>();
        let roots = vec![a + b.scale(x_lo), a + b.scale(x_hi)];
        return Ok(LeftSpectrum::Finite(dedup_roots(roots, dedup_tol)));
    }

    let xs = quaternion_quadratic_roots(a1, a0)?;
    let lambdas = xs.into_iter().map(|x| a + b * x).collect();
    Ok(LeftSpectrum::Finite(dedup_roots(lambdas, dedup_tol)))
}

// 4x4 matrix of left multiplication by q on (w, x, y, z) coordinates
fn left_mult_matrix<T: Scalar>(q: Quaternion<T>) -> [[T; 4]; 4] {
    [
        [q.w, -q.x, -q.y, -q.z],
        [q.x, q.w, -q.z, q.y],
        [q.y, q.z, q.w, -q.x],
        [q.z, -q.y, q.x, q.w],
    ]
}

// and of right multiplication by q
fn right_mult_matrix<T: Scalar>(q: Quaternion<T>) -> [[T; 4]; 4] {
    [
        [q.w, -q.x, -q.y, -q.z],
        [q.x, q.w, q.z, -q.y],
        [q.y, -q.z, q.w, q.x],
        [q.z, q.y, -q.x, q.w],
    ]
}

fn solve4<T: Scalar>(mut m: [[T; 4]; 4], mut rhs: [T; 4]) -> Option<[T; 4]> {
    let scale = m
        .iter()
        .flatten()
        .fold(T::zero(), |acc, &x| acc.max(x.abs()));
    let cutoff = T::tol_floor(1e-13) * (T::one() + scale);
    for col in 0..4 {
        let pivot_row = (col..4)
            .max_by(|&r1, &r2| m[r1][col].abs().partial_cmp(&m[r2][col].abs()).unwrap())?;
        if m[pivot_row][col].abs() <= cutoff {
            return None;
        }
        m.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        let inv = T::one() / m[col][col];
        let pivot = m[col];
        for r in 0..4 {
            if r == col {
                continue;
            }
            let factor = m[r][col] * inv;
            for (x, p) in m[r].iter_mut().zip(&pivot).skip(col) {
                *x = *x - factor * *p;
            }
            rhs[r] = rhs[r] - factor * rhs[col];
        }
    }
    Some([
        rhs[0] / m[0][0],
        rhs[1] / m[1][1],
        rhs[2] / m[2][2],
        rhs[3] / m[3][3],
    ])
}

fn quadratic_value<T: Scalar>(x: Quaternion<T>, a1: Quaternion<T>, a0: Quaternion<T>) -> Quaternion<T> {
    x * x + a1 * x + a0
}

/// All roots of `x^2 + a1 x + a0 = 0` with quaternionic coefficients,
/// found by a damped Newton iteration from a fixed grid of 81 starting
/// points. Intended for the finitely-many-roots regime (at most two);
/// when no start converges the error carries the best residual seen.
///
/// The derivative of the quadratic at `x` is the real-linear map
/// `h -> x h + h x + a1 h`, inverted as a 4x4 real system.
pub fn quaternion_quadratic_roots<T: Scalar>(
    a1: Quaternion<T>,
    a0: Quaternion<T>,
) -> Result<Vec<Quaternion<T>>> {
    let sigma = T::one() + a1.norm() + a0.norm().sqrt();
    let residual_tol = T::tol_floor(1e-10) * (T::one() + sigma * sigma);
    let mut roots: Vec<Quaternion<T>> = Vec::new();
    let mut best = T::infinity();

    let grid = [-two::<T>(), T::zero(), two::<T>()];
    for &gw in &grid {
        for &gx in &grid {
            for &gy in &grid {
                for &gz in &grid {
                    let start = Quaternion::new(gw, gx, gy, gz).scale(sigma);
                    if let Some((root, resid)) =
                        newton_quadratic(start, a1, a0, residual_tol)
                    {
                        roots.push(root);
                        best = best.min(resid);
                    } else {
                        best = best.min(quadratic_value(start, a1, a0).norm());
                    }
                }
            }
        }
    }

    if roots.is_empty() {
        return Err(Error::RootSolverFailure {
            best: best.as_f64(),
            tol: residual_tol.as_f64(),
        });
    }
    Ok(dedup_roots(roots, T::tol_floor(1e-6) * sigma))
}

fn newton_quadratic<T: Scalar>(
    start: Quaternion<T>,
    a1: Quaternion<T>,
    a0: Quaternion<T>,
    residual_tol: T,
) -> Option<(Quaternion<T>, T)> {
    let mut x = start;
    let mut fx = quadratic_value(x, a1, a0);
    for _ in 0..60 {
        if fx.norm() <= residual_tol {
            return Some((x, fx.norm()));
        }
        let jac = add4(
            add4(left_mult_matrix(x), right_mult_matrix(x)),
            left_mult_matrix(a1),
        );
        let h = solve4(jac, [-fx.w, -fx.x, -fx.y, -fx.z])?;
        let step = Quaternion::new(h[0], h[1], h[2], h[3]);
        let mut alpha = T::one();
        let mut advanced = false;
        for _ in 0..8 {
            let cand = x + step.scale(alpha);
            let fc = quadratic_value(cand, a1, a0);
            if fc.norm() < fx.norm() {
                x = cand;
                fx = fc;
                advanced = true;
                break;
            }
            alpha = alpha * half::<T>();
        }
        if !advanced {
            break;
        }
    }
    if fx.norm() <= residual_tol {
        Some((x, fx.norm()))
    } else {
        None
    }
}

fn add4<T: Scalar>(a: [[T; 4]; 4], b: [[T; 4]; 4]) -> [[T; 4]; 4] {
    let mut out = a;
    for r in 0..4 {
        for c in 0..4 {
            out[r][c] = a[r][c] + b[r][c];
        }
    }
    out
}

/// Structure of a Hermitian 2x2 matrix `[[s, b], [conj b, s']]`: its two
/// real right eigenvalues, and its sphere of non-real left eigenvalues
/// when one exists (exactly for `b` pure nonzero and `s = s'`, giving
/// `lambda = s + b omega`).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct Hermitian2x2<T> {
    /// Right eigenvalues ascending; also the real left eigenvalues.
    pub real_eigs: [T; 2],
    pub family: Option<Family<T>>,
}

pub fn hermitian_2x2_classify<T: Scalar>(m: &QMatrix<T>) -> Result<Hermitian2x2<T>> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::NotTwoByTwo {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let scale = T::one() + m.max_entry_norm();
    let dev = m.hermitian_deviation()?;
    if dev > T::tol_floor(1e-10) * scale {
        return Err(Error::NotHermitian {
            deviation: dev.as_f64(),
        });
    }
    let s = m[(0, 0)].w;
    let s2 = m[(1, 1)].w;
    let b = m[(0, 1)];

    let mean = (s + s2) * half::<T>();
    let gap = (s - s2) * half::<T>();
    let disc = (gap * gap + b.norm_sqr()).sqrt();
    let real_eigs = [mean - disc, mean + disc];

    let tol = T::tol_floor(1e-10) * scale;
    let family = if b.norm() > tol && b.w.abs() <= tol && (s - s2).abs() <= tol {
        Some(Family {
            base: Quaternion::from_real(mean),
            coeff: b.scale(half::<T>()),
            radius: two::<T>(),
        })
    } else {
        None
    };
    Ok(Hermitian2x2 { real_eigs, family })
}

/// The rotation form `r [[cos t, -sin t], [sin t, cos t]]` with `|r| = 1`.
pub fn assemble_rotation<T: Scalar>(r: Quaternion<T>, theta: T) -> QMatrix<T> {
    let c = theta.cos();
    let s = theta.sin();
    QMatrix::from_rows(vec![
        vec![r.scale(c), -r.scale(s)],
        vec![r.scale(s), r.scale(c)],
    ])
    .expect("rectangular by construction")
}

/// Recognizes a 2x2 matrix in rotation form and recovers `(r, theta)`
/// with `theta` in the open interval `(0, pi)`. Matrices off the form,
/// including diagonal ones (`theta` at the interval ends), give `None`.
pub fn symplectic_2x2_detect<T: Scalar>(
    m: &QMatrix<T>,
    tol: T,
) -> Result<Option<(Quaternion<T>, T)>> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::NotTwoByTwo {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let scale = T::one() + m.max_entry_norm();
    let (a11, a12, a21, a22) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
    if a11.dist(&a22) > tol * scale || (a21 + a12).norm() > tol * scale {
        return Ok(None);
    }
    let sn = a21.norm();
    if sn <= tol * scale {
        return Ok(None);
    }
    let r = a21.scale(T::one() / sn);
    let theta = sn.atan2(a11.dot(&r));
    let rebuilt = assemble_rotation(r, theta);
    let dev = rebuilt.sub(m)?.max_entry_norm();
    if dev > tol * scale * T::from_f64(4.0) {
        return Ok(None);
    }
    Ok(Some((r, theta)))
}

/// Both spectra of the rotation form.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct SymplecticSpectra<T> {
    /// The two right eigenvalue classes, ascending.
    pub right: [SimilarityClass<T>; 2],
    /// The sphere of left eigenvalues `r cos t + r sin t omega`.
    pub family: Family<T>,
    /// Unit direction of the pure part of `r`, which singles out the
    /// right classes in closed form; `None` when `r` is real and every
    /// pure direction works equally well.
    pub rho: Option<Quaternion<T>>,
}

/// Right classes and left eigenvalue sphere of the rotation form with
/// parameters `(r, theta)`, `|r| = 1` and `theta` strictly inside
/// `(0, pi)`.
///
/// For `r` with a pure part, the right classes are represented by
/// `r (cos t +- sin t rho)` with `rho` the unit pure direction of `r`.
/// A real `r` commutes with everything and the classes come from the
/// numeric right-spectrum solver instead.
pub fn symplectic_2x2_spectra<T: Scalar>(
    r: Quaternion<T>,
    theta: T,
) -> Result<SymplecticSpectra<T>> {
    if (r.norm() - T::one()).abs() > T::tol_floor(1e-8) {
        return Err(Error::Precondition(format!(
            "rotation parameter must be a unit quaternion, |r| = {}",
            r.norm()
        )));
    }
    if !(theta > T::zero() && theta < T::from_f64(std::f64::consts::PI)) {
        return Err(Error::Precondition(format!(
            "rotation angle {theta} outside (0, pi)"
        )));
    }
    let c = theta.cos();
    let s = theta.sin();
    let family = Family {
        base: r.scale(c),
        coeff: r.scale(s),
        radius: T::one(),
    };

    let im = r.pure_norm();
    if im <= T::tol_floor(1e-9) {
        let classes = right_eigen_classes(&assemble_rotation(r, theta))?;
        return Ok(SymplecticSpectra {
            right: [classes[0], classes[1]],
            family,
            rho: None,
        });
    }

    let rho = r.pure_part().scale(T::one() / im);
    let q_plus = r * (Quaternion::from_real(c) + rho.scale(s));
    let q_minus = r * (Quaternion::from_real(c) - rho.scale(s));
    let mut reps = [
        (q_minus.w, q_minus.pure_norm()),
        (q_plus.w, q_plus.pure_norm()),
    ];
    reps.sort_by(|x, y| x.partial_cmp(y).expect("finite"));
    let gap = cluster_gap(reps[0].0);
    let coincide =
        (reps[1].0 - reps[0].0).abs() <= gap && (reps[1].1 - reps[0].1).abs() <= gap;
    let multiplicity = if coincide { 2 } else { 1 };
    let right = [
        SimilarityClass {
            real_part: reps[0].0,
            imag_norm: reps[0].1,
            multiplicity,
        },
        SimilarityClass {
            real_part: reps[1].0,
            imag_norm: reps[1].1,
            multiplicity,
        },
    ];
    Ok(SymplecticSpectra {
        right,
        family,
        rho: Some(rho),
    })
}

/// Tests `lambda` for membership in the left spectrum of `m` by the rank
/// of `m - lambda I`, returning the left eigenspace alongside. `tol`
/// scales the rank decision.
pub fn left_membership<T: Scalar>(
    m: &QMatrix<T>,
    lambda: Quaternion<T>,
    tol: T,
) -> Result<(bool, Subspace<T>)> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let shifted = m.sub_scalar_diag(lambda)?;
    let effective = tol * (T::one() + shifted.max_entry_norm());
    let kernel = null_space(&shifted, effective);
    Ok((kernel.dim() > 0, kernel))
}

/// Membership tolerance used by the bound checks below.
pub fn membership_tol<T: Scalar>() -> T {
    T::tol_floor(1e-8)
}

/// Comparison tolerance for the eigenvalue bounds themselves.
pub fn bound_tol<T: Scalar>() -> T {
    T::tol_floor(1e-9)
}

/// How a left eigenvalue of a Hermitian matrix sits against the right
/// spectrum `t_1 <= ... <= t_n`: with left eigenspace dimension `k`,
/// its real part lies in `[t_k, t_{n-k+1}]` and its norm below the
/// spectral radius.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct BoundReport<T> {
    pub lambda: Quaternion<T>,
    /// Quaternionic dimension of the left eigenspace.
    pub eig_dim: usize,
    /// `t_k`.
    pub lower: T,
    /// `t_{n-k+1}`.
    pub upper: T,
    pub real_part: T,
    pub bounds_hold: bool,
    pub lambda_norm: T,
    pub spectral_radius: T,
    pub norm_holds: bool,
    /// Largest deviation of the Rayleigh quotient from `Re lambda` over
    /// the eigenspace basis; the quotient is constant there.
    pub rayleigh_dev: T,
}

pub fn hermitian_bound_check<T: Scalar>(
    s: &QMatrix<T>,
    lambda: Quaternion<T>,
) -> Result<BoundReport<T>> {
    let dev = s.hermitian_deviation()?;
    if dev > T::tol_floor(1e-10) * (T::one() + s.max_entry_norm()) {
        return Err(Error::NotHermitian {
            deviation: dev.as_f64(),
        });
    }
    let (member, kernel) = left_membership(s, lambda, membership_tol::<T>())?;
    if !member {
        return Err(Error::NotLeftEigenvalue);
    }
    let k = kernel.dim();
    let eig = hermitian_right_eigen(s)?;
    let n = eig.values.len();
    let lower = eig.values[k - 1];
    let upper = eig.values[n - k];
    let spectral_radius = eig
        .values
        .iter()
        .fold(T::zero(), |acc, t| acc.max(t.abs()));
    let btol = bound_tol::<T>() * (T::one() + spectral_radius);

    let mut rayleigh_dev = T::zero();
    for v in kernel.basis() {
        let r = rayleigh_quotient(s, v)?;
        rayleigh_dev = rayleigh_dev.max((r - lambda.w).abs());
    }

    let lambda_norm = lambda.norm();
    Ok(BoundReport {
        lambda,
        eig_dim: k,
        lower,
        upper,
        real_part: lambda.w,
        bounds_hold: lower - btol <= lambda.w && lambda.w <= upper + btol,
        lambda_norm,
        spectral_radius,
        norm_holds: lambda_norm <= spectral_radius + btol,
        rayleigh_dev,
    })
}

/// What a large left eigenspace forces on the right spectrum: dimension
/// `k > n/2` pins `t_{n-k+1} = ... = t_k`, so `Re lambda` is a right
/// eigenvalue of multiplicity at least `2k - n`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct MultiplicityReport<T> {
    pub n: usize,
    pub eig_dim: usize,
    /// Whether the hypothesis `2 eig_dim > n` is met; when it is not,
    /// the conclusion is vacuous and `holds` is true.
    pub met: bool,
    pub required: usize,
    /// Right multiplicity of the eigenvalue at `Re lambda`.
    pub multiplicity: usize,
    /// `t_{n-k+1} - t_k` band width (nonpositive means pinched).
    pub band_gap: T,
    pub holds: bool,
}

pub fn multiplicity_corollary_check<T: Scalar>(
    s: &QMatrix<T>,
    lambda: Quaternion<T>,
) -> Result<MultiplicityReport<T>> {
    let dev = s.hermitian_deviation()?;
    if dev > T::tol_floor(1e-10) * (T::one() + s.max_entry_norm()) {
        return Err(Error::NotHermitian {
            deviation: dev.as_f64(),
        });
    }
    let (member, kernel) = left_membership(s, lambda, membership_tol::<T>())?;
    if !member {
        return Err(Error::NotLeftEigenvalue);
    }
    let k = kernel.dim();
    let eig = hermitian_right_eigen(s)?;
    let n = eig.values.len();
    let met = 2 * k > n;
    let required = (2 * k).saturating_sub(n);
    let gap = cluster_gap(lambda.w);
    let multiplicity = eig
        .values
        .iter()
        .filter(|&&t| (t - lambda.w).abs() <= gap)
        .count();
    let band_gap = eig.values[n - k] - eig.values[k - 1];
    let btol = bound_tol::<T>() * (T::one() + lambda.w.abs());
    let holds = if met {
        band_gap.abs() <= btol && multiplicity >= required
    } else {
        true
    };
    Ok(MultiplicityReport {
        n,
        eig_dim: k,
        met,
        required,
        multiplicity,
        band_gap,
        holds,
    })
}

/// A left eigenvalue of a symplectic matrix against that matrix's right
/// classes: unit norm, and real part between the `k`-th and
/// `(n-k+1)`-th class real parts. The real part is also the Rayleigh
/// quotient of the Hermitian part on the eigenspace.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct SymplecticBoundReport<T> {
    pub lambda: Quaternion<T>,
    pub eig_dim: usize,
    /// Real part of the `k`-th right class.
    pub lower: T,
    /// Real part of the `(n-k+1)`-th.
    pub upper: T,
    pub real_part: T,
    pub bounds_hold: bool,
    pub lambda_norm: T,
    pub unit_norm_holds: bool,
    /// Largest deviation of the Hermitian part's Rayleigh quotient from
    /// `Re lambda` over the eigenspace basis.
    pub rayleigh_dev: T,
    /// Largest observed gap between `Re <v, A v>` and the Hermitian
    /// part's quotient on a fixed set of random probe vectors; the two
    /// agree identically.
    pub probe_dev: T,
}

pub fn symplectic_bound_check<T: Scalar>(
    a: &QMatrix<T>,
    lambda: Quaternion<T>,
) -> Result<SymplecticBoundReport<T>> {
    let dev = a.symplectic_deviation()?;
    if dev > T::tol_floor(1e-8) * (T::one() + a.max_entry_norm()) {
        return Err(Error::NotSymplectic {
            deviation: dev.as_f64(),
        });
    }
    let (member, kernel) = left_membership(a, lambda, membership_tol::<T>())?;
    if !member {
        return Err(Error::NotLeftEigenvalue);
    }
    let k = kernel.dim();
    let classes = right_eigen_classes(a)?;
    let n = classes.len();
    let lower = classes[k - 1].real_part;
    let upper = classes[n - k].real_part;
    let btol = bound_tol::<T>() * two::<T>();

    let h = a.hermitian_part()?;
    let mut rayleigh_dev = T::zero();
    for v in kernel.basis() {
        let r = rayleigh_quotient(&h, v)?;
        rayleigh_dev = rayleigh_dev.max((r - lambda.w).abs());
    }

    let mut probe_dev = T::zero();
    let mut rng = seeded_rng(0xA5);
    for _ in 0..8 {
        let v = random_qvector::<T, _>(n, &mut rng);
        let direct = rayleigh_re(a, &v)?;
        let through_h = rayleigh_quotient(&h, &v)?;
        probe_dev = probe_dev.max((direct - through_h).abs());
    }

    let lambda_norm = lambda.norm();
    Ok(SymplecticBoundReport {
        lambda,
        eig_dim: k,
        lower,
        upper,
        real_part: lambda.w,
        bounds_hold: lower - btol <= lambda.w && lambda.w <= upper + btol,
        lambda_norm,
        unit_norm_holds: (lambda_norm - T::one()).abs() <= btol,
        rayleigh_dev,
        probe_dev,
    })
}

/// Eigenvalues of the Hermitian part of a symplectic matrix, which must
/// reproduce the real parts of the matrix's right classes. A multiset
/// mismatch is reported as [`Error::Falsified`].
pub fn hermitian_part_classes<T: Scalar>(a: &QMatrix<T>) -> Result<Vec<T>> {
    let dev = a.symplectic_deviation()?;
    if dev > T::tol_floor(1e-8) * (T::one() + a.max_entry_norm()) {
        return Err(Error::NotSymplectic {
            deviation: dev.as_f64(),
        });
    }
    let classes = right_eigen_classes(a)?;
    let h = a.hermitian_part()?;
    let eig = hermitian_right_eigen(&h)?;
    for (t, class) in eig.values.iter().zip(&classes) {
        if (*t - class.real_part).abs() > T::tol_floor(1e-8) * two::<T>() {
            return Err(Error::Falsified(format!(
                "Hermitian part eigenvalue {} does not match right class real part {}",
                t, class.real_part
            )));
        }
    }
    Ok(eig.values)
}
