//! The `check` command: decide what the matrix is, then verify every
//! invariant that structure implies.
//!
//! Detection is deliberately loose (1e-2 relative) so that a matrix
//! *claiming* a structure is still routed into that branch, where the
//! first proposition re-checks the claim strictly. A corrupted
//! Hermitian matrix therefore fails the adjoint proposition instead of
//! silently skipping the whole branch.

use quatlin::lefteig::{
    hermitian_2x2_classify, hermitian_bound_check, hermitian_part_classes, left_eigs_2x2,
    left_membership, multiplicity_corollary_check, symplectic_2x2_detect, symplectic_2x2_spectra,
    symplectic_bound_check, LeftSpectrum,
};
use quatlin::quat::pure_unit_probes;
use quatlin::random::{random_qvector, seeded_rng};
use quatlin::rayleigh::rayleigh_quotient;
use quatlin::{
    hermitian_right_eigen, right_eigen_classes, QMatrix, Quaternion, Scalar, SimilarityClass,
};

use crate::report::{map_core, CheckReport, Failure, Proposition, SCHEMA_VERSION};

fn prop(name: &'static str, holds: bool, detail: String) -> Proposition {
    Proposition { name, holds, detail }
}

fn class_list(classes: &[SimilarityClass<f64>]) -> String {
    classes
        .iter()
        .map(|c| format!("{}+{}i (x{})", c.real_part, c.imag_norm, c.multiplicity))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn run_check(
    m: &QMatrix<f64>,
    lambda: Option<Quaternion<f64>>,
    tol: f64,
) -> Result<CheckReport, Failure> {
    if !m.is_square() {
        return Err(Failure::Precondition(format!(
            "check needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let scale = 1.0 + m.max_entry_norm();
    let loose = 1e-2 * scale;
    let herm_dev = m.hermitian_deviation().map_err(map_core)?;
    let symp_dev = m.symplectic_deviation().map_err(map_core)?;
    let hermitian = herm_dev <= loose;
    let symplectic = symp_dev <= loose;

    let mut props: Vec<Proposition> = Vec::new();

    let classes = right_eigen_classes(m).map_err(map_core)?;
    let canonical = classes.len() == n
        && classes.windows(2).all(|p| {
            (p[0].real_part, p[0].imag_norm) <= (p[1].real_part, p[1].imag_norm)
        })
        && classes.iter().all(|c| c.imag_norm >= 0.0);
    props.push(prop(
        "right spectrum pairs into canonical similarity classes",
        canonical,
        class_list(&classes),
    ));

    if hermitian {
        check_hermitian(m, n, scale, herm_dev, lambda, &mut props);
    }
    if symplectic {
        check_symplectic(m, n, scale, symp_dev, &classes, hermitian, lambda, &mut props);
    }
    if !hermitian && !symplectic {
        check_plain(m, n, tol, lambda, &mut props);
    }

    let all_hold = props.iter().all(|p| p.holds);
    Ok(CheckReport {
        schema_version: SCHEMA_VERSION,
        command: "check",
        n,
        hermitian,
        symplectic,
        propositions: props,
        all_hold,
    })
}

fn check_hermitian(
    m: &QMatrix<f64>,
    n: usize,
    scale: f64,
    herm_dev: f64,
    lambda: Option<Quaternion<f64>>,
    props: &mut Vec<Proposition>,
) {
    let strict = <f64 as Scalar>::tol_floor(1e-10) * scale;
    props.push(prop(
        "matrix equals its adjoint",
        herm_dev <= strict,
        format!("deviation {herm_dev:e}"),
    ));
    if herm_dev > strict {
        return;
    }

    let eig = match hermitian_right_eigen(m) {
        Ok(eig) => eig,
        Err(e) => {
            props.push(prop(
                "orthonormal eigenbasis with real eigenvalues",
                false,
                e.to_string(),
            ));
            return;
        }
    };
    let mut residual = 0.0f64;
    for (v, t) in eig.basis.basis().iter().zip(&eig.values) {
        if let Ok(sv) = m.apply(v) {
            residual = residual.max((&sv - &v.scale(*t)).norm());
        }
    }
    let values = eig
        .values
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    props.push(prop(
        "orthonormal eigenbasis with real eigenvalues",
        residual <= 1e-8 * (1.0 + m.frobenius_norm())
            && eig.basis.orthonormality_deviation() <= 1e-8,
        format!("values [{values}], residual {residual:e}"),
    ));

    let (lo, hi) = (eig.values[0], *eig.values.last().expect("nonempty"));
    let mut rng = seeded_rng(7);
    let edge_tol = 1e-9 * (1.0 + lo.abs().max(hi.abs()));
    let mut inside = true;
    for _ in 0..16 {
        let v = random_qvector::<f64, _>(n, &mut rng);
        match rayleigh_quotient(m, &v) {
            Ok(r) => inside &= r >= lo - edge_tol && r <= hi + edge_tol,
            Err(_) => inside = false,
        }
    }
    props.push(prop(
        "sampled Rayleigh quotients stay between the extreme eigenvalues",
        inside,
        format!("range [{lo}, {hi}]"),
    ));

    if n == 2 {
        match hermitian_2x2_classify(m) {
            Ok(rep) => {
                let agree = (rep.real_eigs[0] - eig.values[0]).abs()
                    <= 1e-8 * (1.0 + eig.values[0].abs())
                    && (rep.real_eigs[1] - eig.values[1]).abs()
                        <= 1e-8 * (1.0 + eig.values[1].abs());
                props.push(prop(
                    "closed-form 2x2 eigenvalues match the eigensolver",
                    agree,
                    format!("{} and {}", rep.real_eigs[0], rep.real_eigs[1]),
                ));
                if let Some(family) = rep.family {
                    let members = family.members(&pure_unit_probes::<f64>());
                    let mut all_pass = true;
                    for member in &members {
                        match hermitian_bound_check(m, *member) {
                            Ok(b) => all_pass &= b.bounds_hold && b.norm_holds,
                            Err(_) => all_pass = false,
                        }
                    }
                    props.push(prop(
                        "sampled members of the infinite left family are left eigenvalues inside the eigenvalue band",
                        all_pass,
                        format!(
                            "{} members of {} + ({}) w {}",
                            members.len(),
                            family.base,
                            family.coeff,
                            family.radius
                        ),
                    ));
                } else {
                    let finite_ok = match left_eigs_2x2(m) {
                        Ok(LeftSpectrum::Finite(vals)) => vals.iter().all(|v| {
                            v.pure_norm() <= 1e-8 * scale
                                && eig
                                    .values
                                    .iter()
                                    .any(|t| (t - v.w).abs() <= 1e-7 * (1.0 + t.abs()))
                        }),
                        _ => false,
                    };
                    props.push(prop(
                        "finite left spectrum consists of the real right eigenvalues",
                        finite_ok,
                        format!("values [{values}]"),
                    ));
                }
            }
            Err(e) => props.push(prop(
                "closed-form 2x2 eigenvalues match the eigensolver",
                false,
                e.to_string(),
            )),
        }
    }

    if let Some(lambda) = lambda {
        match hermitian_bound_check(m, lambda) {
            Ok(b) => {
                props.push(prop(
                    "asserted left eigenvalue has its real part inside the eigenvalue band",
                    b.bounds_hold,
                    format!(
                        "dim {}: {} <= {} <= {}",
                        b.eig_dim, b.lower, b.real_part, b.upper
                    ),
                ));
                props.push(prop(
                    "asserted left eigenvalue has norm below the spectral radius",
                    b.norm_holds,
                    format!("|lambda| = {}, radius {}", b.lambda_norm, b.spectral_radius),
                ));
            }
            Err(e) => props.push(prop(
                "asserted left eigenvalue has its real part inside the eigenvalue band",
                false,
                e.to_string(),
            )),
        }
        match multiplicity_corollary_check(m, lambda) {
            Ok(rep) => props.push(prop(
                "large left eigenspace forces a matching right multiplicity",
                rep.holds,
                if rep.met {
                    format!(
                        "dim {} of {}: multiplicity {} >= {}",
                        rep.eig_dim, rep.n, rep.multiplicity, rep.required
                    )
                } else {
                    format!("dim {} of {}: hypothesis not met, vacuous", rep.eig_dim, rep.n)
                },
            )),
            Err(e) => props.push(prop(
                "large left eigenspace forces a matching right multiplicity",
                false,
                e.to_string(),
            )),
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn check_symplectic(
    m: &QMatrix<f64>,
    n: usize,
    scale: f64,
    symp_dev: f64,
    classes: &[SimilarityClass<f64>],
    hermitian: bool,
    lambda: Option<Quaternion<f64>>,
    props: &mut Vec<Proposition>,
) {
    let strict = <f64 as Scalar>::tol_floor(1e-8) * scale;
    props.push(prop(
        "adjoint inverts the matrix",
        symp_dev <= strict,
        format!("deviation {symp_dev:e}"),
    ));
    if symp_dev > strict {
        return;
    }

    let unit = classes
        .iter()
        .all(|c| (c.norm() - 1.0).abs() <= 1e-8);
    props.push(prop(
        "right classes lie on the unit sphere",
        unit,
        class_list(classes),
    ));

    match hermitian_part_classes(m) {
        Ok(values) => props.push(prop(
            "Hermitian part spectrum equals the class real parts",
            true,
            values
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(", "),
        )),
        Err(e) => props.push(prop(
            "Hermitian part spectrum equals the class real parts",
            false,
            e.to_string(),
        )),
    }

    if n == 2 {
        match symplectic_2x2_detect(m, 1e-8) {
            Ok(Some((r, theta))) => {
                props.push(prop(
                    "rotation form detected",
                    true,
                    format!("r = {r}, theta = {theta}"),
                ));
                match symplectic_2x2_spectra(r, theta) {
                    Ok(spectra) => {
                        let agree = spectra.right.iter().zip(classes).all(|(a, b)| {
                            (a.real_part - b.real_part).abs() <= 1e-8
                                && (a.imag_norm - b.imag_norm).abs() <= 1e-8
                        });
                        props.push(prop(
                            "closed-form right classes match the numeric spectrum",
                            agree,
                            class_list(&spectra.right),
                        ));

                        let members = spectra.family.members(&pure_unit_probes::<f64>());
                        let mut all_pass = true;
                        for member in &members {
                            match symplectic_bound_check(m, *member) {
                                Ok(b) => {
                                    all_pass &= b.bounds_hold && b.unit_norm_holds;
                                }
                                Err(_) => all_pass = false,
                            }
                        }
                        props.push(prop(
                            "sampled left family members have unit norm and bounded real part",
                            all_pass,
                            format!("{} members", members.len()),
                        ));

                        if !hermitian {
                            let h = match m.hermitian_part() {
                                Ok(h) => h,
                                Err(_) => return,
                            };
                            let escaped = members
                                .iter()
                                .filter(|member| {
                                    !matches!(
                                        left_membership(&h, **member, 1e-8),
                                        Ok((true, _))
                                    )
                                })
                                .count();
                            props.push(prop(
                                "left spectrum is not determined by the Hermitian part",
                                escaped >= 1,
                                format!(
                                    "{escaped} of {} sampled members are not left eigenvalues of it",
                                    members.len()
                                ),
                            ));
                        }
                    }
                    Err(e) => props.push(prop(
                        "closed-form right classes match the numeric spectrum",
                        false,
                        e.to_string(),
                    )),
                }
            }
            Ok(None) => {
                if let Ok(LeftSpectrum::Finite(vals)) = left_eigs_2x2(m) {
                    let mut all_pass = !vals.is_empty();
                    for v in &vals {
                        match symplectic_bound_check(m, *v) {
                            Ok(b) => all_pass &= b.bounds_hold && b.unit_norm_holds,
                            Err(_) => all_pass = false,
                        }
                    }
                    props.push(prop(
                        "finite left eigenvalues have unit norm and bounded real part",
                        all_pass,
                        vals.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(", "),
                    ));
                }
            }
            Err(e) => props.push(prop(
                "rotation form detected",
                false,
                e.to_string(),
            )),
        }
    }

    if let Some(lambda) = lambda {
        match symplectic_bound_check(m, lambda) {
            Ok(b) => props.push(prop(
                "asserted left eigenvalue has unit norm and bounded real part",
                b.bounds_hold && b.unit_norm_holds,
                format!(
                    "dim {}: {} <= {} <= {}, |lambda| = {}",
                    b.eig_dim, b.lower, b.real_part, b.upper, b.lambda_norm
                ),
            )),
            Err(e) => props.push(prop(
                "asserted left eigenvalue has unit norm and bounded real part",
                false,
                e.to_string(),
            )),
        }
    }
}

fn check_plain(
    m: &QMatrix<f64>,
    n: usize,
    tol: f64,
    lambda: Option<Quaternion<f64>>,
    props: &mut Vec<Proposition>,
) {
    if n == 2 {
        match left_eigs_2x2(m) {
            Ok(spectrum) => {
                let samples: Vec<Quaternion<f64>> = match &spectrum {
                    LeftSpectrum::Finite(vals) => vals.clone(),
                    LeftSpectrum::Infinite(f) => f.members(&pure_unit_probes::<f64>()),
                };
                let mut all_member = !samples.is_empty();
                for s in &samples {
                    all_member &= matches!(left_membership(m, *s, 1e-7), Ok((true, _)));
                }
                props.push(prop(
                    "computed left eigenvalues have nontrivial kernels",
                    all_member,
                    format!("{} value(s) checked", samples.len()),
                ));
            }
            Err(e) => props.push(prop(
                "computed left eigenvalues have nontrivial kernels",
                false,
                e.to_string(),
            )),
        }
    }

    if let Some(lambda) = lambda {
        match left_membership(m, lambda, tol) {
            Ok((member, kernel)) => props.push(prop(
                "asserted value is a left eigenvalue",
                member,
                format!("eigenspace dimension {}", kernel.dim()),
            )),
            Err(e) => props.push(prop(
                "asserted value is a left eigenvalue",
                false,
                e.to_string(),
            )),
        }
    }
}
