//! Acceptance gate: ten criteria covering the worked examples, the
//! statistical and variational properties, and the CLI contract. Each
//! test checks one criterion against pinned tolerances and prints a
//! single pass line with the measured numbers (visible under
//! `cargo test -- --nocapture`).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use quatlin::ceig::general_complex_eigenvalues;
use quatlin::io::write_qmatrix_text;
use quatlin::lefteig::{
    hermitian_2x2_classify, hermitian_bound_check, hermitian_part_classes, left_membership,
    symplectic_2x2_detect, symplectic_2x2_spectra, symplectic_bound_check, LeftSpectrum,
};
use quatlin::quat::pure_unit_probes;
use quatlin::random::{derive_seed, random_hermitian, random_qmatrix, random_qvector, seeded_rng};
use quatlin::rayleigh::{
    critical_report, gradient, minmax_verify, moments, rayleigh_quotient, sphere_sample,
    tangent_hessian_eigs, MomentAccumulator,
};
use quatlin::{
    hermitian_right_eigen, left_eigs_2x2, right_eigen_classes, QMatrix, QVector, Quaternion,
};

type Q = Quaternion<f64>;
type M = QMatrix<f64>;
type V = QVector<f64>;

const SQRT2: f64 = std::f64::consts::SQRT_2;
const FRAC_1_SQRT2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// `[[0, j], [i, 0]]`: the mixed off-diagonal with classes at the
/// eighth roots of unity.
fn swap_fixture() -> M {
    M::from_rows(vec![
        vec![Q::zero(), Q::j()],
        vec![Q::i(), Q::zero()],
    ])
    .unwrap()
}

/// `[[0, 1+i], [1-i, 0]]`: Hermitian with exactly two left eigenvalues.
fn finite_fixture() -> M {
    M::from_rows(vec![
        vec![Q::zero(), Q::new(1.0, 1.0, 0.0, 0.0)],
        vec![Q::new(1.0, -1.0, 0.0, 0.0), Q::zero()],
    ])
    .unwrap()
}

/// `[[0, i], [-i, 0]]`: Hermitian with the whole sphere `i w` of left
/// eigenvalues.
fn sphere_fixture() -> M {
    M::from_rows(vec![
        vec![Q::zero(), Q::i()],
        vec![-Q::i(), Q::zero()],
    ])
    .unwrap()
}

/// `(sqrt2/2) j [[1, -1], [1, 1]]`: the quaternionic rotation with
/// axis j and angle pi/4.
fn rotation_fixture() -> M {
    let c = Q::j().scale(FRAC_1_SQRT2);
    M::from_rows(vec![vec![c, -c], vec![c, c]]).unwrap()
}

fn left_scale(lambda: Q, v: &V) -> V {
    V::from_vec(v.iter().map(|&q| lambda * q).collect())
}

#[test]
fn criterion_01_right_eigenvalue_classes() {
    let start = Instant::now();
    let classes = right_eigen_classes(&swap_fixture()).unwrap();
    let elapsed = start.elapsed().as_secs_f64();

    assert_eq!(classes.len(), 2);
    assert!((classes[0].real_part + FRAC_1_SQRT2).abs() <= 1e-8);
    assert!((classes[1].real_part - FRAC_1_SQRT2).abs() <= 1e-8);
    for c in &classes {
        assert!((c.norm() - 1.0).abs() <= 1e-8);
    }
    assert!(elapsed < 1.0, "took {elapsed:.3} s");
    println!(
        "criterion 01 right eigenvalue classes: pass (real parts -+1/sqrt2 and unit norms within 1e-8, {:.0} ms)",
        elapsed * 1e3
    );
}

#[test]
fn criterion_02_finite_left_spectrum() {
    let spectrum = left_eigs_2x2(&finite_fixture()).unwrap();
    assert!(!spectrum.is_infinite());
    let vals = match spectrum {
        LeftSpectrum::Finite(vals) => vals,
        LeftSpectrum::Infinite(_) => unreachable!(),
    };
    assert_eq!(vals.len(), 2);
    let mut errs = [0.0f64; 2];
    for (v, want) in vals.iter().zip([-SQRT2, SQRT2]) {
        let err = (*v - Q::from_real(want)).norm();
        assert!(err <= 1e-8, "|{v} - {want}| = {err:e}");
        errs[usize::from(want > 0.0)] = err;
    }
    println!(
        "criterion 02 finite left spectrum: pass (-+sqrt2 within 1e-8, errors {:.1e} and {:.1e}, no family)",
        errs[0], errs[1]
    );
}

#[test]
fn criterion_03_infinite_left_family() {
    let m = sphere_fixture();
    let classify = hermitian_2x2_classify(&m).unwrap();
    assert!((classify.real_eigs[0] + 1.0).abs() <= 1e-8);
    assert!((classify.real_eigs[1] - 1.0).abs() <= 1e-8);

    let spectrum = left_eigs_2x2(&m).unwrap();
    let family = match spectrum {
        LeftSpectrum::Infinite(f) => f,
        LeftSpectrum::Finite(_) => panic!("expected an infinite family"),
    };
    let members = family.members(&pure_unit_probes::<f64>());
    assert_eq!(members.len(), 16);

    let mut worst_residual = 0.0f64;
    for lambda in &members {
        let (member, kernel) = left_membership(&m, *lambda, 1e-8).unwrap();
        assert!(member && kernel.dim() >= 1);
        for v in kernel.basis() {
            let residual = (&m.apply(v).unwrap() - &left_scale(*lambda, v)).norm();
            assert!(residual <= 1e-8, "residual {residual:e}");
            worst_residual = worst_residual.max(residual);
        }
        assert!(lambda.w.abs() <= 1.0 + 1e-12);
        assert!((lambda.norm() - 1.0).abs() <= 1e-12);
    }
    println!(
        "criterion 03 infinite left family: pass (real eigenvalues -+1, 16 members with kernel residual <= {worst_residual:.1e}, Re in [-1,1], unit norm)"
    );
}

#[test]
fn criterion_04_sphere_moments() {
    let start = Instant::now();
    let mut rng = seeded_rng(0xACC4);
    let mut worst_z = 0.0f64;
    for idx in 0..10u64 {
        let n = 2 + (idx as usize) % 3;
        let s = random_hermitian::<f64, _>(n, &mut rng);
        let rep = moments(&s, 1_000_000, derive_seed(0xACC4, idx)).unwrap();
        let mean_z = (rep.mean_estimate - rep.exact_mean).abs() / rep.stderr_mean;
        let second_z =
            (rep.second_central_estimate - rep.exact_second_central).abs() / rep.stderr_second;
        assert!(mean_z <= 3.0, "matrix {idx}: mean off by {mean_z:.2} stderr");
        assert!(second_z <= 3.0, "matrix {idx}: variance off by {second_z:.2} stderr");
        worst_z = worst_z.max(mean_z).max(second_z);
    }

    // Fourth and cross moments of raw sphere coordinates in R^(4n).
    let mut worst_raw_z = 0.0f64;
    for n in [2usize, 3, 4] {
        let dim = (4 * n) as f64;
        let exact_fourth = 3.0 / (dim * (dim + 2.0));
        let exact_cross = 1.0 / (dim * (dim + 2.0));
        let mut fourth = MomentAccumulator::new();
        let mut cross = MomentAccumulator::new();
        let mut rng = seeded_rng(derive_seed(0xC0, n as u64));
        for _ in 0..1_000_000 {
            let v = sphere_sample::<f64, _>(n, &mut rng);
            let (x, y) = (v[0].w, v[0].x);
            fourth.update(x * x * x * x);
            cross.update(x * x * y * y);
        }
        let fourth_z = (fourth.mean() - exact_fourth).abs() / fourth.stderr_mean();
        let cross_z = (cross.mean() - exact_cross).abs() / cross.stderr_mean();
        assert!(fourth_z <= 3.0, "n = {n}: fourth moment off by {fourth_z:.2} stderr");
        assert!(cross_z <= 3.0, "n = {n}: cross moment off by {cross_z:.2} stderr");
        worst_raw_z = worst_raw_z.max(fourth_z).max(cross_z);
    }

    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 120.0, "took {elapsed:.1} s");
    println!(
        "criterion 04 sphere moments: pass (10 matrices x 1e6 samples, worst |z| {worst_z:.2}; raw fourth/cross worst |z| {worst_raw_z:.2}; {elapsed:.1} s)"
    );
}

/// Real-orthonormal basis of the tangent space of the unit sphere of
/// `H^n` at unit `v`: 4n-1 vectors with `Re <v, d> = 0`.
fn real_tangent_basis(v: &V) -> Vec<V> {
    let n = v.len();
    let units = [
        Q::one(),
        Q::i(),
        Q::j(),
        Q::k(),
    ];
    let mut frame: Vec<V> = vec![v.clone()];
    for c in 0..n {
        for unit in units {
            let mut cand = V::zeros(n);
            cand[c] = unit;
            for b in &frame {
                let overlap = b.hermitian_product(&cand).unwrap().w;
                cand = &cand - &b.scale(overlap);
            }
            let norm = cand.norm();
            if norm > 1e-6 {
                frame.push(cand.scale(1.0 / norm));
            }
        }
    }
    assert_eq!(frame.len(), 4 * n);
    frame.remove(0);
    frame
}

#[test]
fn criterion_05_gradient_and_hessian() {
    let mut rng = seeded_rng(0xACC5);
    let mut worst_grad = 0.0f64;
    let mut worst_hessian = 0.0f64;
    let mut q_negatives = 0usize;
    let mut real_negatives = 0usize;
    let h = 1e-5f64;

    for idx in 0..50 {
        let n = 2 + idx % 3;
        let s = random_hermitian::<f64, _>(n, &mut rng);
        let v = random_qvector::<f64, _>(n, &mut rng).normalized().unwrap();

        // analytic gradient against central differences along great
        // circles through every tangent frame direction
        let analytic = gradient(&s, &v).unwrap();
        let mut fd = V::zeros(n);
        for d in real_tangent_basis(&v) {
            let plus = &v.scale(h.cos()) + &d.scale(h.sin());
            let minus = &v.scale(h.cos()) - &d.scale(h.sin());
            let slope = (rayleigh_quotient(&s, &plus).unwrap()
                - rayleigh_quotient(&s, &minus).unwrap())
                / (2.0 * h);
            fd = &fd + &d.scale(slope);
        }
        let rel = (&fd - &analytic).norm() / (1.0 + analytic.norm());
        assert!(rel <= 1e-6, "sample {idx}: gradient mismatch {rel:e}");
        worst_grad = worst_grad.max(rel);

        // at each eigenvector the tangent Hessian spectrum is the doubled
        // gap multiset, minus the one radial zero
        let eig = hermitian_right_eigen(&s).unwrap();
        for (j, u) in eig.basis.basis().iter().enumerate() {
            let mut want: Vec<f64> = Vec::with_capacity(4 * n - 1);
            for &t in &eig.values {
                for _ in 0..4 {
                    want.push(2.0 * (t - eig.values[j]));
                }
            }
            let radial = want
                .iter()
                .position(|&x| x == 0.0)
                .expect("the eigenvalue itself contributes zeros");
            want.remove(radial);
            want.sort_by(|a, b| a.partial_cmp(b).unwrap());

            let mut got = tangent_hessian_eigs(&s, u).unwrap();
            got.sort_by(|a, b| a.partial_cmp(b).unwrap());
            assert_eq!(got.len(), want.len());
            for (g, w) in got.iter().zip(&want) {
                let err = (g - w).abs();
                assert!(err <= 1e-7, "sample {idx} vector {j}: hessian eigenvalue off by {err:e}");
                worst_hessian = worst_hessian.max(err);
            }

            let report = critical_report(&s, u).unwrap();
            let below = eig
                .values
                .iter()
                .filter(|&&t| t < eig.values[j] - 1e-9)
                .count();
            assert_eq!(report.index, below);
            assert_eq!(report.index_real, 4 * below);
            assert_eq!(report.hessian_negative, 4 * below);
            q_negatives += report.index;
            real_negatives += report.hessian_negative;
        }
    }
    println!(
        "criterion 05 gradient and hessian: pass (50 samples, gradient fd error <= {worst_grad:.1e}, hessian multiset error <= {worst_hessian:.1e}, descent counts {q_negatives} quaternionic / {real_negatives} real)"
    );
}

#[test]
fn criterion_06_minmax_bounds() {
    let mut rng = seeded_rng(0xACC6);
    let s = random_hermitian::<f64, _>(4, &mut rng);
    let mut worst_attained = 0.0f64;
    for k in 1..=4 {
        let rep = minmax_verify(&s, k, 200, derive_seed(0xACC6, k as u64), 1e-8).unwrap();
        assert_eq!(rep.violations, 0, "k = {k}");
        assert!(rep.min_of_max >= rep.t_k - 1e-8);
        assert!(rep.max_of_min <= rep.t_nk1 + 1e-8);
        assert!(rep.attained_minmax_err <= 1e-9, "k = {k}: {:e}", rep.attained_minmax_err);
        assert!(rep.attained_maxmin_err <= 1e-9, "k = {k}: {:e}", rep.attained_maxmin_err);
        worst_attained = worst_attained
            .max(rep.attained_minmax_err)
            .max(rep.attained_maxmin_err);
    }
    println!(
        "criterion 06 minmax bounds: pass (k = 1..4, 200 subspaces each, zero violations at 1e-8, attained error <= {worst_attained:.1e})"
    );
}

#[test]
fn criterion_07_direct_sum_left_bounds() {
    let s = sphere_fixture();
    let m = M::direct_sum(&s, &s);
    let lambda = Q::j();

    let (member, kernel) = left_membership(&m, lambda, 1e-8).unwrap();
    assert!(member);
    assert_eq!(kernel.dim(), 2);

    let eig = hermitian_right_eigen(&m).unwrap();
    for (t, want) in eig.values.iter().zip([-1.0, -1.0, 1.0, 1.0]) {
        assert!((t - want).abs() <= 1e-8);
    }
    assert!(eig.values[1] <= 0.0 && 0.0 <= eig.values[2]);

    let rep = hermitian_bound_check(&m, lambda).unwrap();
    assert_eq!(rep.eig_dim, 2);
    assert!(rep.bounds_hold && rep.norm_holds);

    let family = match left_eigs_2x2(&s).unwrap() {
        LeftSpectrum::Infinite(f) => f,
        LeftSpectrum::Finite(_) => panic!("expected an infinite family"),
    };
    let members = family.members(&pure_unit_probes::<f64>());
    assert_eq!(members.len(), 16);
    for member in &members {
        let rep = hermitian_bound_check(&m, *member).unwrap();
        assert!(rep.eig_dim >= 1);
        assert!(rep.bounds_hold && rep.norm_holds, "member {member}");
    }
    println!(
        "criterion 07 direct sum left bounds: pass (dim V(j) = 2, spectrum (-1,-1,1,1), t_2 <= 0 <= t_3, 16 family members inside the band)"
    );
}

#[test]
fn criterion_08_symplectic_rotation_suite() {
    let a = rotation_fixture();
    let (r, theta) = symplectic_2x2_detect(&a, 1e-8).unwrap().expect("rotation form");
    assert!((r - Q::j()).norm() <= 1e-8);
    assert!((theta - std::f64::consts::FRAC_PI_4).abs() <= 1e-8);

    let spectra = symplectic_2x2_spectra(r, theta).unwrap();
    let classes = right_eigen_classes(&a).unwrap();
    for (cls, want) in classes.iter().zip([-FRAC_1_SQRT2, FRAC_1_SQRT2]) {
        assert!((cls.real_part - want).abs() <= 1e-8);
    }
    for (closed, numeric) in spectra.right.iter().zip(&classes) {
        assert!((closed.real_part - numeric.real_part).abs() <= 1e-8);
        assert!((closed.imag_norm - numeric.imag_norm).abs() <= 1e-8);
    }
    let parts = hermitian_part_classes(&a).unwrap();
    for (p, want) in parts.iter().zip([-FRAC_1_SQRT2, FRAC_1_SQRT2]) {
        assert!((p - want).abs() <= 1e-8);
    }

    let members = spectra.family.members(&pure_unit_probes::<f64>());
    assert_eq!(members.len(), 16);
    let h = a.hermitian_part().unwrap();
    let mut escaped = 0usize;
    for member in &members {
        let rep = symplectic_bound_check(&a, *member).unwrap();
        assert!(rep.bounds_hold && rep.unit_norm_holds, "member {member}");
        assert!((rep.lambda_norm - 1.0).abs() <= 1e-8);
        let (of_h, _) = left_membership(&h, *member, 1e-8).unwrap();
        if !of_h {
            escaped += 1;
        }
    }
    assert!(escaped >= 1);
    println!(
        "criterion 08 symplectic rotation suite: pass (detected (j, pi/4), class real parts -+1/sqrt2, 16 unit members inside the band, {escaped}/16 not left eigenvalues of the Hermitian part)"
    );
}

#[test]
fn criterion_09_complex_adjoint_morphism() {
    let mut rng = seeded_rng(0xACC9);
    let mut worst_product = 0.0f64;
    let mut worst_adjoint = 0.0f64;
    let mut worst_pairing = 0.0f64;
    for idx in 0..100 {
        let n = 1 + idx % 5;
        let m = random_qmatrix::<f64, _>(n, n, &mut rng);
        let other = random_qmatrix::<f64, _>(n, n, &mut rng);

        let lhs = m.matmul(&other).unwrap().complex_adjoint().unwrap();
        let rhs = m
            .complex_adjoint()
            .unwrap()
            .matmul(&other.complex_adjoint().unwrap())
            .unwrap();
        let product_err = lhs.sub(&rhs).max_abs();
        assert!(product_err <= 1e-12, "pair {idx}: product image off by {product_err:e}");
        worst_product = worst_product.max(product_err);

        let adjoint_err = m
            .adjoint()
            .complex_adjoint()
            .unwrap()
            .sub(&m.complex_adjoint().unwrap().adjoint())
            .max_abs();
        assert!(adjoint_err <= 1e-12, "pair {idx}: adjoint image off by {adjoint_err:e}");
        worst_adjoint = worst_adjoint.max(adjoint_err);

        let spectrum = general_complex_eigenvalues(&m.complex_adjoint().unwrap()).unwrap();
        for z in &spectrum {
            let gap = spectrum
                .iter()
                .map(|w| ((w.re - z.re).powi(2) + (w.im + z.im).powi(2)).sqrt())
                .fold(f64::INFINITY, f64::min);
            let scaled = 1e-6 * (1.0 + (z.re * z.re + z.im * z.im).sqrt());
            assert!(gap <= scaled, "pair {idx}: conjugate of {z} missing by {gap:e}");
            worst_pairing = worst_pairing.max(gap);
        }
    }
    println!(
        "criterion 09 complex adjoint morphism: pass (100 pairs up to n = 5, product error <= {worst_product:.1e}, adjoint error <= {worst_adjoint:.1e}, conjugate gap <= {worst_pairing:.1e})"
    );
}

fn write_fixture(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path
}

fn check_exit(bin: &str, input: &Path) -> i32 {
    Command::new(bin)
        .args(["check", input.to_str().unwrap()])
        .output()
        .unwrap()
        .status
        .code()
        .unwrap()
}

#[test]
fn criterion_10_cli_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_quatlin");
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    fs::create_dir_all(&dir).unwrap();

    let good = [
        write_fixture(&dir, "swap.txt", &write_qmatrix_text(&swap_fixture())),
        write_fixture(&dir, "finite.txt", &write_qmatrix_text(&finite_fixture())),
        write_fixture(&dir, "sphere.txt", &write_qmatrix_text(&sphere_fixture())),
        write_fixture(&dir, "rotation.txt", &write_qmatrix_text(&rotation_fixture())),
    ];
    for path in &good {
        assert_eq!(check_exit(bin, path), 0, "{}", path.display());
    }

    let corrupt = write_fixture(&dir, "corrupt.txt", "2 2\n1 i\n-i+0.001j 2\n");
    assert_eq!(check_exit(bin, &corrupt), 1);

    let garbage = write_fixture(&dir, "garbage.txt", "this is not a matrix\n");
    assert_eq!(check_exit(bin, &garbage), 2);

    println!(
        "criterion 10 cli exit codes: pass (check exits 0 on the four worked fixtures, 1 on a corrupted Hermitian, 2 on garbage)"
    );
}
