//! Report payloads and rendering.
//!
//! Every command produces exactly one report on standard output. The
//! structured form is a single JSON document with a `schema_version`
//! field, byte-identical across runs for the same command and input;
//! the human form is a few readable lines. Failures print a diagnostic
//! to standard error instead and map onto the exit code contract:
//! 1 falsified invariant, 2 parse error, 3 precondition violation.

use std::fmt::Write as _;
use std::io::{self, Write as _};

use clap::ValueEnum;
use serde::Serialize;

use quatlin::lefteig::LeftSpectrum;
use quatlin::rayleigh::{CriticalReport, MinMaxReport, MomentReport};
use quatlin::{Error, Quaternion, SimilarityClass};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Human,
    Structured,
}

/// A command outcome that still deserves a report; the exit code rides
/// along (`check` and `minmax` report falsification through it).
pub enum Report {
    RightEigs(RightEigsReport),
    LeftEigs(LeftEigsReport),
    Rayleigh(RayleighReport),
    Moments(MomentsReport),
    Minmax(MinmaxReport),
    Check(CheckReport),
}

#[derive(Serialize)]
pub struct RightEigsReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub n: usize,
    pub classes: Vec<SimilarityClass<f64>>,
}

#[derive(Serialize)]
pub struct LeftEigsReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<LeftSpectrum<f64>>,
    /// Deterministic members sampled from an infinite family.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<Quaternion<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Quaternion<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_member: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenspace_dim: Option<usize>,
}

#[derive(Serialize)]
pub struct RayleighReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub n: usize,
    pub quotient: f64,
    pub gradient_norm: f64,
    pub critical: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub critical_report: Option<CriticalReport<f64>>,
}

#[derive(Serialize)]
pub struct MomentsReport {
    pub schema_version: u32,
    pub command: &'static str,
    #[serde(flatten)]
    pub report: MomentReport<f64>,
    /// Deviation of the mean estimate in standard errors.
    pub mean_z: f64,
    /// Deviation of the second central moment estimate in standard errors.
    pub second_z: f64,
}

#[derive(Serialize)]
pub struct MinmaxReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub n: usize,
    #[serde(flatten)]
    pub report: MinMaxReport<f64>,
    /// No sampled violations and equality attained at the eigenvector spans.
    pub holds: bool,
}

#[derive(Serialize)]
pub struct CheckReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub n: usize,
    pub hermitian: bool,
    pub symplectic: bool,
    pub propositions: Vec<Proposition>,
    pub all_hold: bool,
}

#[derive(Serialize)]
pub struct Proposition {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        match self {
            Report::Check(r) if !r.all_hold => 1,
            Report::Minmax(r) if !r.holds => 1,
            _ => 0,
        }
    }

    /// Writes the report to standard output. A closed pipe downstream is
    /// not an error worth dying over, so write failures are ignored.
    pub fn print(&self, mode: OutputMode) {
        let text = match mode {
            OutputMode::Structured => {
                let mut json = self.to_json();
                json.push('\n');
                json
            }
            OutputMode::Human => self.render_human(),
        };
        let _ = io::stdout().write_all(text.as_bytes());
    }

    fn to_json(&self) -> String {
        let out = match self {
            Report::RightEigs(r) => serde_json::to_string(r),
            Report::LeftEigs(r) => serde_json::to_string(r),
            Report::Rayleigh(r) => serde_json::to_string(r),
            Report::Moments(r) => serde_json::to_string(r),
            Report::Minmax(r) => serde_json::to_string(r),
            Report::Check(r) => serde_json::to_string(r),
        };
        out.expect("report serialization cannot fail")
    }

    fn render_human(&self) -> String {
        let mut out = String::new();
        match self {
            Report::RightEigs(r) => {
                let _ = writeln!(out, "right eigenvalue classes ({}x{}):", r.n, r.n);
                for c in &r.classes {
                    let _ = writeln!(out, 
                        "  {} + {}i  (norm {}, multiplicity {})",
                        c.real_part,
                        c.imag_norm,
                        c.norm(),
                        c.multiplicity
                    );
                }
            }
            Report::LeftEigs(r) => {
                match &r.spectrum {
                    Some(LeftSpectrum::Finite(vals)) => {
                        let _ = writeln!(out, "left spectrum: finite, {} value(s):", vals.len());
                        for v in vals {
                            let _ = writeln!(out, "  {v}");
                        }
                    }
                    Some(LeftSpectrum::Infinite(f)) => {
                        let _ = writeln!(out, 
                            "left spectrum: infinite family {} + ({}) w {}, pure unit w",
                            f.base, f.coeff, f.radius
                        );
                        if let Some(members) = &r.members {
                            let _ = writeln!(out, "  sampled members:");
                            for m in members {
                                let _ = writeln!(out, "    {m}");
                            }
                        }
                    }
                    None => {}
                }
                if let (Some(lambda), Some(member)) = (&r.lambda, r.is_member) {
                    let dim = r.eigenspace_dim.unwrap_or(0);
                    if member {
                        let _ = writeln!(out, "{lambda} is a left eigenvalue (eigenspace dimension {dim})");
                    } else {
                        let _ = writeln!(out, "{lambda} is not a left eigenvalue");
                    }
                }
            }
            Report::Rayleigh(r) => {
                let _ = writeln!(out, "Rayleigh quotient: {}", r.quotient);
                let _ = writeln!(out, "gradient norm:     {}", r.gradient_norm);
                if let Some(c) = &r.critical_report {
                    let _ = writeln!(out, 
                        "critical point: eigenvalue {}, index {} ({} real), hessian {} negative / {} zero of {}",
                        c.value,
                        c.index,
                        c.index_real,
                        c.hessian_negative,
                        c.hessian_zero,
                        c.hessian_eigs.len()
                    );
                } else {
                    let _ = writeln!(out, "not a critical point");
                }
            }
            Report::Moments(r) => {
                let m = &r.report;
                let _ = writeln!(out, 
                    "sphere mean:     {} (exact {}, {:.2} stderr off)",
                    m.mean_estimate, m.exact_mean, r.mean_z
                );
                let _ = writeln!(out, 
                    "sphere variance: {} (exact {}, {:.2} stderr off)",
                    m.second_central_estimate, m.exact_second_central, r.second_z
                );
                let _ = writeln!(out, "samples {} seed {}", m.samples, m.seed);
            }
            Report::Minmax(r) => {
                let m = &r.report;
                let _ = writeln!(out, 
                    "eigenvalue {} of {}: t_k = {}, t_(n-k+1) = {}",
                    m.k, r.n, m.t_k, m.t_nk1
                );
                let _ = writeln!(out, 
                    "sampled {} subspaces: min of max = {}, max of min = {}, {} violation(s)",
                    m.trials, m.min_of_max, m.max_of_min, m.violations
                );
                let _ = writeln!(out, 
                    "attained equality error: {} (min-max), {} (max-min)",
                    m.attained_minmax_err, m.attained_maxmin_err
                );
                let _ = writeln!(out, "{}", if r.holds { "bounds hold" } else { "BOUNDS FALSIFIED" });
            }
            Report::Check(r) => {
                let mut kinds: Vec<&str> = Vec::new();
                if r.hermitian {
                    kinds.push("hermitian");
                }
                if r.symplectic {
                    kinds.push("symplectic");
                }
                let kinds = if kinds.is_empty() {
                    "no special structure".to_string()
                } else {
                    kinds.join(" + ")
                };
                let _ = writeln!(out, "check: {}x{} matrix, {}", r.n, r.n, kinds);
                for p in &r.propositions {
                    let mark = if p.holds { "ok  " } else { "FAIL" };
                    let _ = writeln!(out, "  [{mark}] {}: {}", p.name, p.detail);
                }
                let _ = writeln!(out, 
                    "{} of {} propositions hold",
                    r.propositions.iter().filter(|p| p.holds).count(),
                    r.propositions.len()
                );
            }
        }
        out
    }
}

/// Failures that preempt the report, carrying their exit code.
pub enum Failure {
    Falsified(String),
    Parse(String),
    Precondition(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Falsified(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Falsified(m) | Failure::Parse(m) | Failure::Precondition(m) => m,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Failure::Falsified(_) => "falsified",
            Failure::Parse(_) => "parse",
            Failure::Precondition(_) => "precondition",
        }
    }
}

/// Library errors keep their exit-code class: explicit falsifications
/// exit 1, parse problems 2, everything else is a precondition the
/// input failed to meet.
pub fn map_core(e: Error) -> Failure {
    match e {
        Error::Parse(msg) => Failure::Parse(msg),
        Error::Falsified(msg) => Failure::Falsified(msg),
        other => Failure::Precondition(other.to_string()),
    }
}
