//! The `conevol` command line.
//!
//! [`run`] takes the full argument vector (program name first) and returns
//! the exit code with the text that would go to stdout and stderr, so the
//! binary is a thin wrapper and tests can drive every verb in-process.

mod format;
mod table;
mod verify;

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::conevolume::{
    self, alpha0, classify_regime, cover_volume, rm_roots, select_geometric_root, Regime,
    VolumeResult,
};
use crate::Error;

pub use format::format_sig;
pub use table::{emit_table, TableRow, TableSpec, CSV_HEADER};
pub use verify::{run_verify, CheckOutcome};

pub const EXIT_OK: i32 = 0;
/// The input angle or parameter is outside the problem's domain.
pub const EXIT_DOMAIN: i32 = 1;
/// Root finding, quadrature or a verification check failed.
pub const EXIT_NUMERIC: i32 = 2;
/// Malformed command line (`EX_USAGE`).
pub const EXIT_USAGE: i32 = 64;
/// Output file could not be written (`EX_IOERR`).
pub const EXIT_IO: i32 = 74;

/// Looser than the library default to keep `table` quick.
pub const CLI_TOL: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(
    name = "conevol",
    version,
    about = "Volumes of 7^2_3 link cone-manifolds and their cyclic covers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Volume of X(alpha).
    Volume {
        /// Cone angle, radians unless --deg.
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long)]
        deg: bool,
        #[arg(long, default_value_t = CLI_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Threshold angle where the structure turns Euclidean.
    Alpha0 {
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Volume of the k-fold cyclic branched cover, k * Vol(X(2pi/k)).
    Cover {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, default_value_t = CLI_TOL)]
        tol: f64,
    },
    /// CSV of alpha, A, V, integrand, volume, regime on a uniform grid.
    Table {
        #[arg(long, allow_hyphen_values = true)]
        min: f64,
        #[arg(long, allow_hyphen_values = true)]
        max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = CLI_TOL)]
        tol: f64,
    },
    /// All five roots of P(V, cot(alpha/2)) with residuals.
    Roots {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long)]
        deg: bool,
    },
    /// Exact and numerical identity checks.
    Verify {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Machine-readable form of a [`VolumeResult`]; the JSON keys are fixed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VolumeRecord {
    pub alpha: f64,
    /// `null` at `α = 0`, where `A` is infinite.
    #[serde(rename = "A")]
    pub a: Option<f64>,
    #[serde(rename = "V_re")]
    pub v_re: Option<f64>,
    #[serde(rename = "V_im")]
    pub v_im: Option<f64>,
    pub volume: f64,
    pub err_estimate: f64,
    pub regime: Regime,
}

impl From<&VolumeResult> for VolumeRecord {
    fn from(r: &VolumeResult) -> Self {
        Self {
            alpha: r.alpha,
            a: r.a.is_finite().then_some(r.a),
            v_re: r.v.map(|v| v.re),
            v_im: r.v.map(|v| v.im),
            volume: r.volume,
            err_estimate: r.err_estimate,
            regime: r.regime,
        }
    }
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io { .. } => EXIT_IO,
        e if e.is_domain() => EXIT_DOMAIN,
        _ => EXIT_NUMERIC,
    }
}

fn error_outcome(err: Error) -> Outcome {
    Outcome::fail(exit_code(&err), format!("error: {err}\n"))
}

pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::fail(EXIT_USAGE, text),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => error_outcome(e),
    }
}

fn check_tol(tol: f64) -> Result<f64, Outcome> {
    if tol > 0.0 && tol.is_finite() {
        Ok(tol)
    } else {
        Err(Outcome::fail(
            EXIT_USAGE,
            format!("error: --tol must be a positive number, got {tol}\n"),
        ))
    }
}

fn dispatch(command: Command) -> crate::Result<Outcome> {
    let usage = |o: Outcome| Ok(o);
    match command {
        Command::Volume {
            alpha,
            deg,
            tol,
            format,
        } => {
            let tol = match check_tol(tol) {
                Ok(t) => t,
                Err(o) => return usage(o),
            };
            let alpha = if deg { alpha.to_radians() } else { alpha };
            let result = conevolume::volume(alpha, tol)?;
            Ok(Outcome::ok(match format {
                OutputFormat::Json => {
                    let record = VolumeRecord::from(&result);
                    serde_json::to_string(&record).expect("serializable record") + "\n"
                }
                OutputFormat::Text => volume_text(&result),
            }))
        }
        Command::Alpha0 { tol } => {
            if !(tol >= 0.0) {
                return usage(Outcome::fail(
                    EXIT_USAGE,
                    format!("error: --tol must be nonnegative, got {tol}\n"),
                ));
            }
            let a0 = alpha0(tol)?;
            Ok(Outcome::ok(format!("{}\n", format_sig(a0, 15))))
        }
        Command::Cover { k, tol } => {
            let tol = match check_tol(tol) {
                Ok(t) => t,
                Err(o) => return usage(o),
            };
            let k = u32::try_from(k).map_err(|_| {
                Error::InvalidInput(format!("cover degree k = {k} must be at least 3"))
            })?;
            let result = cover_volume(k, tol)?;
            let mut out = String::new();
            writeln!(out, "k            = {k}").unwrap();
            writeln!(out, "alpha        = {}", format_sig(result.alpha, 12)).unwrap();
            writeln!(out, "volume       = {}", format_sig(result.volume, 12)).unwrap();
            writeln!(out, "err_estimate = {}", format_sig(result.err_estimate, 3)).unwrap();
            Ok(Outcome::ok(out))
        }
        Command::Table {
            min,
            max,
            steps,
            out,
            tol,
        } => {
            let tol = match check_tol(tol) {
                Ok(t) => t,
                Err(o) => return usage(o),
            };
            let spec = TableSpec {
                min,
                max,
                steps,
                tol,
            };
            let threads = match std::env::var("CONEVOL_THREADS") {
                Ok(s) => match s.trim().parse::<usize>() {
                    Ok(n) if n > 0 => Some(n),
                    _ => {
                        return usage(Outcome::fail(
                            EXIT_USAGE,
                            format!(
                                "error: CONEVOL_THREADS must be a positive integer, got {s:?}\n"
                            ),
                        ))
                    }
                },
                Err(_) => None,
            };
            let csv = emit_table(&spec, threads)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, &csv).map_err(|e| Error::Io {
                        path: path.display().to_string(),
                        message: e.to_string(),
                    })?;
                    Ok(Outcome::ok(format!(
                        "wrote {} rows to {}\n",
                        steps,
                        path.display()
                    )))
                }
                None => Ok(Outcome::ok(csv)),
            }
        }
        Command::Roots { alpha, deg } => {
            let alpha = if deg { alpha.to_radians() } else { alpha };
            Ok(Outcome::ok(roots_text(alpha)?))
        }
        Command::Verify { samples, seed } => {
            let outcomes = run_verify(samples, seed);
            let mut text = String::new();
            for o in &outcomes {
                writeln!(text, "{o}").unwrap();
            }
            let passed = outcomes.iter().filter(|o| o.passed).count();
            writeln!(text, "{passed}/{} checks passed", outcomes.len()).unwrap();
            let code = if passed == outcomes.len() {
                EXIT_OK
            } else {
                EXIT_NUMERIC
            };
            Ok(Outcome {
                code,
                stdout: text,
                stderr: String::new(),
            })
        }
    }
}

fn complex_text(re: f64, im: f64) -> String {
    let sign = if im < 0.0 { '-' } else { '+' };
    format!(
        "{} {} {}i",
        format_sig(re, 12),
        sign,
        format_sig(im.abs(), 12)
    )
}

fn volume_text(r: &VolumeResult) -> String {
    let mut out = String::new();
    writeln!(out, "alpha        = {}", format_sig(r.alpha, 12)).unwrap();
    writeln!(out, "A            = {}", format_sig(r.a, 12)).unwrap();
    match r.v {
        Some(v) => writeln!(out, "V            = {}", complex_text(v.re, v.im)).unwrap(),
        None => writeln!(out, "V            = none").unwrap(),
    }
    writeln!(out, "volume       = {}", format_sig(r.volume, 12)).unwrap();
    writeln!(out, "err_estimate = {}", format_sig(r.err_estimate, 3)).unwrap();
    writeln!(out, "regime       = {}", r.regime).unwrap();
    out
}

fn roots_text(alpha: f64) -> crate::Result<String> {
    if !(alpha > 0.0 && alpha <= PI) {
        return Err(Error::InvalidInput(format!(
            "cone angle {alpha} outside (0, pi]"
        )));
    }
    let (a, mut roots) = rm_roots(alpha)?;
    roots.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
    let regime = classify_regime(alpha)?;
    let selected = match regime {
        Regime::Hyperbolic => Some(select_geometric_root(&roots, alpha)?.v),
        _ => None,
    };
    let poly = conevolume::rm_poly_at(a)?;
    let mut out = String::new();
    writeln!(out, "alpha  = {}", format_sig(alpha, 12)).unwrap();
    writeln!(out, "A      = {}", format_sig(a, 12)).unwrap();
    writeln!(out, "regime = {regime}").unwrap();
    for (k, r) in roots.iter().enumerate() {
        let mark = if Some(*r) == selected {
            "  <- geometric"
        } else {
            ""
        };
        writeln!(
            out,
            "V[{k}] = {}  residual = {}{mark}",
            complex_text(r.re, r.im),
            format_sig(poly.relative_residual(*r), 3)
        )
        .unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("conevol").chain(args.iter().copied()))
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&[]).code, EXIT_USAGE);
        assert_eq!(run_args(&["volume"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["volume", "--alpha", "x"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["alpha0", "--bogus"]).code, EXIT_USAGE);
        assert_eq!(
            run_args(&["volume", "--alpha", "1", "--tol", "-1"]).code,
            EXIT_USAGE
        );
        assert_eq!(run_args(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn domain_errors() {
        assert_eq!(run_args(&["volume", "--alpha", "4"]).code, EXIT_DOMAIN);
        assert_eq!(run_args(&["volume", "--alpha", "-0.5"]).code, EXIT_DOMAIN);
        assert_eq!(run_args(&["cover", "--k", "2"]).code, EXIT_DOMAIN);
        assert_eq!(run_args(&["cover", "--k", "-3"]).code, EXIT_DOMAIN);
        assert_eq!(run_args(&["roots", "--alpha", "0"]).code, EXIT_DOMAIN);
    }

    #[test]
    fn threshold_and_spherical_volume() {
        let out = run_args(&["alpha0"]);
        assert_eq!(out.code, EXIT_OK);
        let a0: f64 = out.stdout.trim().parse().unwrap();
        assert!((a0 - 2.83003).abs() < 5e-5);

        let out = run_args(&["volume", "--alpha", "3.0", "--format", "json"]);
        assert_eq!(out.code, EXIT_OK);
        let rec: VolumeRecord = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!((rec.volume, rec.regime), (0.0, Regime::Spherical));
    }

    #[test]
    fn degrees_flag() {
        let rad = run_args(&[
            "volume",
            "--alpha",
            "1.5707963267948966",
            "--format",
            "json",
        ]);
        let deg = run_args(&["volume", "--alpha", "90", "--deg", "--format", "json"]);
        let (r, d): (VolumeRecord, VolumeRecord) = (
            serde_json::from_str(&rad.stdout).unwrap(),
            serde_json::from_str(&deg.stdout).unwrap(),
        );
        assert!((r.volume - d.volume).abs() < 1e-12);
    }

    #[test]
    fn roots_listing_flags_the_geometric_root() {
        let out = run_args(&["roots", "--alpha", "2.0943951023931953"]);
        assert_eq!(out.code, EXIT_OK);
        assert_eq!(out.stdout.matches("V[").count(), 5);
        assert_eq!(out.stdout.matches("<- geometric").count(), 1);
        let out = run_args(&["roots", "--alpha", "3.0"]);
        assert_eq!(out.stdout.matches("<- geometric").count(), 0);
    }
}
