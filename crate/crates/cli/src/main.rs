use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use nilcert::format::{format_matrix, parse_matrix};
use nilcert::fuzz::{self, FuzzConfig, Property};
use nilcert::report;
use nilcert_core::gallery::{self, GALLERY_VERSION};
use nilcert_core::nilpotency::nilpotency_index;
use nilcert_core::spectral::hermitian_spectrum;
use nilcert_core::theorems::{analyze, non_nilpotence_certificate};
use nilcert_core::volterra::{volterra_matrix, volterra_report};
use nilcert_core::{ComplexMatrix, Tolerances};

const EXIT_FILE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NO_CERTIFICATE: u8 = 3;
const EXIT_CHECK_FAILED: u8 = 4;

/// Certificates and oracles for nilpotent complex matrices.
#[derive(Parser)]
#[command(name = "nilcert", version)]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: decomposition, spectra, nilpotency, certificates, oracles.
    Analyze {
        file: PathBuf,
        /// Relative eigenvalue resolution (default 1e-8).
        #[arg(long, value_parser = tolerance)]
        tol: Option<f64>,
    },
    /// Nilpotency index (or "none") followed by the power-norm trail.
    Nilindex {
        file: PathBuf,
        /// Relative nilpotency tolerance (default 1e-10).
        #[arg(long, value_parser = tolerance)]
        tol: Option<f64>,
    },
    /// Non-nilpotence certificate; exit 0 if found, 3 if not.
    Certify {
        file: PathBuf,
        /// Relative eigenvalue resolution (default 1e-8).
        #[arg(long, value_parser = tolerance)]
        tol: Option<f64>,
    },
    /// Writes Re T and Im T as cmat files.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        out_re: PathBuf,
        #[arg(long)]
        out_im: PathBuf,
    },
    /// Named fixture matrices.
    Gallery {
        #[command(subcommand)]
        action: GalleryAction,
    },
    /// Trapezoid Volterra discretization report.
    Volterra {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4096))]
        n: u32,
        /// Also write the matrix as a cmat file.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Seeded property suite; exit 0 iff no trial fails.
    Fuzz(FuzzArgs),
}

#[derive(Subcommand)]
enum GalleryAction {
    List,
    /// Expectations and the matrix in cmat format.
    Show {
        name: String,
    },
    /// Analyze and diff against the recorded expectations.
    Verify {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        name: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long, value_enum)]
    property: Property,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
    dim: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn tolerance(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x >= 0.0 => Ok(x),
        _ => Err(format!("`{s}` is not a finite nonnegative number")),
    }
}

/// An error with its exit code.
struct Failure(u8, anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(EXIT_FILE, e.into())
    }
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure(EXIT_USAGE, e.into())
}

fn load(path: &Path) -> Result<ComplexMatrix> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_matrix(&text).with_context(|| format!("parsing {}", path.display()))
}

fn save(path: &Path, m: &ComplexMatrix) -> Result<()> {
    fs::write(path, format_matrix(m)).with_context(|| format!("writing {}", path.display()))
}

fn emit(json_mode: bool, doc: Value, text: String) {
    let out = if json_mode {
        serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
    } else {
        text
    };
    // A closed pipe (`| head`) is not an error worth reporting.
    let _ = io::stdout().lock().write_all(out.as_bytes());
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let json_mode = cli.json;
    match cli.command {
        Command::Analyze { file, tol } => {
            let t = load(&file)?;
            let tol = tol.map_or_else(Tolerances::default, Tolerances::with_spectral);
            let r = analyze(&t, &tol)?;
            let doc = json!({ "command": "analyze", "input": file, "report": r });
            emit(json_mode, doc, report::analysis(&r));
            Ok(0)
        }
        Command::Nilindex { file, tol } => {
            let t = load(&file)?;
            let r = nilpotency_index(&t, tol.unwrap_or(Tolerances::default().nilpotency));
            let doc = json!({ "command": "nilindex", "input": file, "nilpotency": r });
            emit(json_mode, doc, report::nilpotency(&r));
            Ok(0)
        }
        Command::Certify { file, tol } => {
            let t = load(&file)?;
            let tol = tol.map_or_else(Tolerances::default, Tolerances::with_spectral);
            let c = non_nilpotence_certificate(&t, &tol)?;
            let doc = json!({
                "command": "certify",
                "input": file,
                "certified": c.is_some(),
                "certificate": c,
            });
            emit(json_mode, doc, report::certificate(c.as_ref()));
            Ok(if c.is_some() { 0 } else { EXIT_NO_CERTIFICATE })
        }
        Command::Decompose { file, out_re, out_im } => {
            let t = load(&file)?;
            let parts = t.cartesian_decompose();
            save(&out_re, &parts.re)?;
            save(&out_im, &parts.im)?;
            let re = hermitian_spectrum(&parts.re)?;
            let im = hermitian_spectrum(&parts.im)?;
            let doc = json!({
                "command": "decompose",
                "input": file,
                "out_re": out_re,
                "out_im": out_im,
                "re_definiteness": re.definiteness(),
                "im_definiteness": im.definiteness(),
            });
            let text = format!(
                "Re T -> {} ({})\nIm T -> {} ({})\n",
                out_re.display(),
                re.definiteness().as_str(),
                out_im.display(),
                im.definiteness().as_str()
            );
            emit(json_mode, doc, text);
            Ok(0)
        }
        Command::Gallery { action } => gallery_command(json_mode, action),
        Command::Volterra { n, export } => {
            let n = n as usize;
            if let Some(path) = &export {
                save(path, &volterra_matrix(n)?)?;
            }
            let r = volterra_report(n)?;
            let doc = json!({ "command": "volterra", "report": r, "export": export });
            emit(json_mode, doc, report::volterra(&r));
            Ok(0)
        }
        Command::Fuzz(args) => {
            let cfg = FuzzConfig {
                property: args.property,
                trials: args.trials,
                dim: args.dim as usize,
                seed: args.seed,
                tolerances: Tolerances::default(),
            };
            let s = fuzz::run(&cfg).map_err(usage)?;
            let doc = json!({ "command": "fuzz", "summary": s, "ok": s.ok() });
            emit(json_mode, doc, report::fuzz(&s));
            Ok(if s.ok() { 0 } else { EXIT_CHECK_FAILED })
        }
    }
}

fn gallery_command(json_mode: bool, action: GalleryAction) -> Result<u8, Failure> {
    match action {
        GalleryAction::List => {
            let entries = gallery::entries();
            let text: String = entries
                .iter()
                .map(|e| format!("{:<16}{}\n", e.name, e.summary))
                .collect();
            let doc = json!({ "command": "gallery", "action": "list", "version": GALLERY_VERSION, "entries": entries });
            emit(json_mode, doc, text);
            Ok(0)
        }
        GalleryAction::Show { name } => {
            let entry = gallery::get(&name).map_err(usage)?;
            let matrix = format_matrix(&entry.matrix);
            let text = report::gallery_entry(&entry, &matrix);
            let doc = json!({
                "command": "gallery",
                "action": "show",
                "version": GALLERY_VERSION,
                "entry": entry,
                "matrix": matrix,
            });
            emit(json_mode, doc, text);
            Ok(0)
        }
        GalleryAction::Verify { name, .. } => {
            let names: Vec<&str> = match &name {
                Some(n) => vec![n.as_str()],
                None => gallery::list().to_vec(),
            };
            let mut results = Vec::new();
            for n in names {
                results.push(gallery::verify(n).map_err(|e| match e {
                    gallery::GalleryError::UnknownEntry(_) => usage(e),
                    other => Failure::from(other),
                })?);
            }
            let passed = results.iter().all(|v| v.passed);
            let text: String = results.iter().map(report::verification).collect();
            let doc = json!({
                "command": "gallery",
                "action": "verify",
                "version": GALLERY_VERSION,
                "passed": passed,
                "results": results,
            });
            emit(json_mode, doc, text);
            Ok(if passed { 0 } else { EXIT_CHECK_FAILED })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
