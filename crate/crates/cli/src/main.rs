//! Command line front end for the quaternionic eigenvalue toolkit.
//!
//! Every command reads one matrix file (text or JSON), prints one report
//! to standard output, and exits 0. The other exit codes are part of the
//! contract: 1 means an invariant was checked and found false, 2 means
//! the input could not be parsed, 3 means a precondition failed (wrong
//! shape, missing structure, solver breakdown).

mod check;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use quatlin::io::{parse_qmatrix, parse_qvector_list};
use quatlin::lefteig::{left_eigs_2x2, left_membership, LeftSpectrum};
use quatlin::quat::pure_unit_probes;
use quatlin::rayleigh::{critical_report, gradient, minmax_verify, moments, rayleigh_quotient};
use quatlin::{right_eigen_classes, Error, QMatrix, Quaternion};

use report::{
    map_core, Failure, LeftEigsReport, MinmaxReport, MomentsReport, OutputMode, RayleighReport,
    Report, RightEigsReport, SCHEMA_VERSION,
};

#[derive(Parser)]
#[command(name = "quatlin", version, about = "Eigenvalue computations over the quaternions")]
struct Cli {
    /// Report format on standard output.
    #[arg(long, global = true, value_enum, default_value = "human")]
    output: OutputMode,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Right eigenvalue similarity classes of a square matrix.
    RightEigs {
        /// Matrix file, text or JSON.
        input: PathBuf,
    },
    /// Left eigenvalues of a 2x2 matrix, or a membership test with --lambda.
    LeftEigs {
        input: PathBuf,
        /// Candidate left eigenvalue, e.g. "1+2i-0.5k".
        #[arg(long)]
        lambda: Option<String>,
        /// Kernel detection tolerance.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Rayleigh quotient of a Hermitian matrix at a point, with critical
    /// point diagnosis when the gradient vanishes.
    Rayleigh {
        input: PathBuf,
        /// Evaluation point: comma-separated quaternions.
        #[arg(long)]
        vector: String,
    },
    /// Monte Carlo sphere moments of the Rayleigh quotient next to their
    /// closed forms.
    Moments {
        input: PathBuf,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Sample count, at least 1000.
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
    },
    /// Sampled variational bounds for the k-th smallest eigenvalue.
    Minmax {
        input: PathBuf,
        /// Eigenvalue index, 1-based ascending.
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of random subspaces to test.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Allowed slack on the sampled bounds.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Detect Hermitian or symplectic structure and verify everything it
    /// implies; exits 1 if any proposition fails.
    Check {
        input: PathBuf,
        /// Left eigenvalue whose implied properties should be verified too.
        #[arg(long)]
        lambda: Option<String>,
        /// Membership tolerance for --lambda on unstructured matrices.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            report.print(cli.output);
            ExitCode::from(report.exit_code())
        }
        Err(failure) => {
            eprintln!("{}: {}", failure.kind(), failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::RightEigs { input } => right_eigs(&load_matrix(&input)?),
        Command::LeftEigs { input, lambda, tol } => {
            let lambda = parse_lambda(lambda.as_deref())?;
            left_eigs(&load_matrix(&input)?, lambda, tol)
        }
        Command::Rayleigh { input, vector } => rayleigh(&load_matrix(&input)?, &vector),
        Command::Moments {
            input,
            seed,
            samples,
        } => moments_cmd(&load_matrix(&input)?, seed, samples),
        Command::Minmax {
            input,
            k,
            seed,
            samples,
            tol,
        } => minmax(&load_matrix(&input)?, k, seed, samples, tol),
        Command::Check { input, lambda, tol } => {
            let lambda = parse_lambda(lambda.as_deref())?;
            check::run_check(&load_matrix(&input)?, lambda, tol).map(Report::Check)
        }
    }
}

fn load_matrix(path: &Path) -> Result<QMatrix<f64>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_qmatrix(&text).map_err(map_core)
}

fn parse_lambda(arg: Option<&str>) -> Result<Option<Quaternion<f64>>, Failure> {
    arg.map(|s| s.parse::<Quaternion<f64>>().map_err(map_core))
        .transpose()
}

fn require_square(m: &QMatrix<f64>, what: &str) -> Result<usize, Failure> {
    if !m.is_square() {
        return Err(Failure::Precondition(format!(
            "{what} needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m.rows())
}

fn right_eigs(m: &QMatrix<f64>) -> Result<Report, Failure> {
    let n = require_square(m, "right-eigs")?;
    let classes = right_eigen_classes(m).map_err(map_core)?;
    Ok(Report::RightEigs(RightEigsReport {
        schema_version: SCHEMA_VERSION,
        command: "right-eigs",
        n,
        classes,
    }))
}

fn left_eigs(
    m: &QMatrix<f64>,
    lambda: Option<Quaternion<f64>>,
    tol: f64,
) -> Result<Report, Failure> {
    let n = require_square(m, "left-eigs")?;
    let mut report = LeftEigsReport {
        schema_version: SCHEMA_VERSION,
        command: "left-eigs",
        n,
        spectrum: None,
        members: None,
        lambda: None,
        is_member: None,
        eigenspace_dim: None,
    };
    if n == 2 {
        let spectrum = left_eigs_2x2(m).map_err(map_core)?;
        if let LeftSpectrum::Infinite(f) = &spectrum {
            report.members = Some(f.members(&pure_unit_probes::<f64>()));
        }
        report.spectrum = Some(spectrum);
    } else if lambda.is_none() {
        return Err(Failure::Precondition(
            "only 2x2 spectra are computed in full; pass --lambda for a membership test".into(),
        ));
    }
    if let Some(lambda) = lambda {
        let (member, kernel) = left_membership(m, lambda, tol).map_err(map_core)?;
        report.lambda = Some(lambda);
        report.is_member = Some(member);
        report.eigenspace_dim = Some(kernel.dim());
    }
    Ok(Report::LeftEigs(report))
}

fn rayleigh(m: &QMatrix<f64>, vector: &str) -> Result<Report, Failure> {
    let n = require_square(m, "rayleigh")?;
    let v = parse_qvector_list::<f64>(vector).map_err(map_core)?;
    let norm = v.norm();
    if norm == 0.0 {
        return Err(Failure::Precondition(
            "the evaluation point must be nonzero".into(),
        ));
    }
    let unit = v.scale(1.0 / norm);
    let quotient = rayleigh_quotient(m, &unit).map_err(map_core)?;
    let gradient_norm = gradient(m, &unit).map_err(map_core)?.norm();
    let critical = match critical_report(m, &unit) {
        Ok(c) => Some(c),
        Err(Error::NotCritical { .. }) => None,
        Err(e) => return Err(map_core(e)),
    };
    Ok(Report::Rayleigh(RayleighReport {
        schema_version: SCHEMA_VERSION,
        command: "rayleigh",
        n,
        quotient,
        gradient_norm,
        critical: critical.is_some(),
        critical_report: critical,
    }))
}

fn z_score(deviation: f64, stderr: f64) -> f64 {
    if stderr > 0.0 {
        deviation / stderr
    } else if deviation == 0.0 {
        0.0
    } else {
        f64::INFINITY
    }
}

fn moments_cmd(m: &QMatrix<f64>, seed: u64, samples: usize) -> Result<Report, Failure> {
    require_square(m, "moments")?;
    if samples < 1000 {
        return Err(Failure::Precondition(format!(
            "moment estimation needs at least 1000 samples, got {samples}"
        )));
    }
    let report = moments(m, samples, seed).map_err(map_core)?;
    let mean_z = z_score(report.mean_estimate - report.exact_mean, report.stderr_mean);
    let second_z = z_score(
        report.second_central_estimate - report.exact_second_central,
        report.stderr_second,
    );
    Ok(Report::Moments(MomentsReport {
        schema_version: SCHEMA_VERSION,
        command: "moments",
        report,
        mean_z,
        second_z,
    }))
}

fn minmax(
    m: &QMatrix<f64>,
    k: usize,
    seed: u64,
    samples: usize,
    tol: f64,
) -> Result<Report, Failure> {
    let n = require_square(m, "minmax")?;
    if k == 0 || k > n {
        return Err(Failure::Precondition(format!(
            "k must be between 1 and {n}, got {k}"
        )));
    }
    let report = minmax_verify(m, k, samples, seed, tol).map_err(map_core)?;
    let scale = 1.0 + report.t_k.abs().max(report.t_nk1.abs());
    let holds = report.violations == 0
        && report.attained_minmax_err <= tol * scale
        && report.attained_maxmin_err <= tol * scale;
    Ok(Report::Minmax(MinmaxReport {
        schema_version: SCHEMA_VERSION,
        command: "minmax",
        n,
        report,
        holds,
    }))
}
