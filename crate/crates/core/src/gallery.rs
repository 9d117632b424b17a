//! Named fixture matrices with their recorded verdicts.
//!
//! | name | matrix | what it shows |
//! |---|---|---|
//! | `jordan2` | `[[0,1],[0,0]]` | nonzero with `T² = 0`; `Re T` has spectrum `{±1/2}` |
//! | `example_pp` | 4×4 with a zero last row/column | `T³ = 0`, `T² ≠ 0`, yet `σ(A) ∩ σ(-A) = {0}` |
//! | `diag_counter` | `diag(0, 3, -2, -1)` | Hermitian, trace 0, `σ ∩ -σ = {0}`, nonzero |
//! | `strict_upper4` | strictly upper triangular | `T⁴ = 0`, `T³ ≠ 0`, `σ(A) ∩ σ(-A) = ∅` |
//!
//! Printed eigenvalues are approximate; each entry carries the tolerance
//! at which they are compared.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::matrix::ComplexMatrix;
use crate::spectral::SpectralError;
use crate::theorems::{analyze, AnalysisReport};
use crate::tolerance::Tolerances;

/// Bumped whenever a fixture or its expectations change.
pub const GALLERY_VERSION: u32 = 1;

pub const NAMES: [&str; 4] = ["jordan2", "example_pp", "diag_counter", "strict_upper4"];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GalleryError {
    #[error("unknown gallery entry `{0}`")]
    UnknownEntry(String),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(rename_all = "snake_case"))]
pub enum SymmetryExpectation {
    /// `σ(A) ∩ σ(-A) = ∅`.
    Empty,
    /// `σ(A) ∩ σ(-A) = {0}`.
    ZeroOnly,
    /// Some `λ ≠ 0` with `±λ ∈ σ(A)`.
    NonzeroPair,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Expectation {
    pub nilpotency_index: Option<usize>,
    /// Ascending.
    pub re_spectrum: Vec<f64>,
    pub re_spectrum_tol: f64,
    pub re_symmetry: SymmetryExpectation,
    pub trace_exactly_zero: bool,
    pub certificate: bool,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GalleryEntry {
    pub name: &'static str,
    pub summary: &'static str,
    #[cfg_attr(feature = "serde", serde(skip))]
    pub matrix: ComplexMatrix,
    pub expected: Expectation,
}

pub fn list() -> &'static [&'static str] {
    &NAMES
}

fn real(rows: &[[f64; 4]]) -> ComplexMatrix {
    ComplexMatrix::from_real_rows(rows).expect("fixture is square and finite")
}

pub fn get(name: &str) -> Result<GalleryEntry, GalleryError> {
    let entry = match name {
        "jordan2" => GalleryEntry {
            name: "jordan2",
            summary: "2x2 Jordan block: T^2 = 0 with T nonzero; Re T is indefinite",
            matrix: ComplexMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]).expect("fixture"),
            expected: Expectation {
                nilpotency_index: Some(2),
                re_spectrum: vec![-0.5, 0.5],
                re_spectrum_tol: 1e-12,
                re_symmetry: SymmetryExpectation::NonzeroPair,
                trace_exactly_zero: true,
                certificate: false,
            },
        },
        "example_pp" => GalleryEntry {
            name: "example_pp",
            summary: "4x4 nilpotent of index 3 whose real part satisfies σ(A)∩σ(-A) = {0}",
            matrix: real(&[
                [2.0, 2.0, -2.0, 0.0],
                [5.0, 1.0, -3.0, 0.0],
                [1.0, 5.0, -3.0, 0.0],
                [0.0, 0.0, 0.0, 0.0],
            ]),
            expected: Expectation {
                nilpotency_index: Some(3),
                re_spectrum: vec![-3.71, -1.33, 0.0, 5.04],
                re_spectrum_tol: 0.01,
                re_symmetry: SymmetryExpectation::ZeroOnly,
                trace_exactly_zero: true,
                certificate: false,
            },
        },
        "diag_counter" => GalleryEntry {
            name: "diag_counter",
            summary: "nonzero Hermitian diag(0,3,-2,-1): trace 0 and σ(A)∩σ(-A) = {0}",
            matrix: ComplexMatrix::real_diagonal(&[0.0, 3.0, -2.0, -1.0]).expect("fixture"),
            expected: Expectation {
                nilpotency_index: None,
                re_spectrum: vec![-2.0, -1.0, 0.0, 3.0],
                re_spectrum_tol: 1e-12,
                re_symmetry: SymmetryExpectation::ZeroOnly,
                trace_exactly_zero: true,
                certificate: false,
            },
        },
        "strict_upper4" => GalleryEntry {
            name: "strict_upper4",
            summary: "strictly upper triangular, index 4, with σ(A)∩σ(-A) empty",
            matrix: real(&[
                [0.0, 1.0, 2.0, 4.0],
                [0.0, 0.0, 2.0, 1.0],
                [0.0, 0.0, 0.0, 5.0],
                [0.0, 0.0, 0.0, 0.0],
            ]),
            expected: Expectation {
                nilpotency_index: Some(4),
                re_spectrum: vec![-2.811, -1.043, -0.205, 4.058],
                re_spectrum_tol: 0.005,
                re_symmetry: SymmetryExpectation::Empty,
                trace_exactly_zero: true,
                certificate: false,
            },
        },
        other => return Err(GalleryError::UnknownEntry(other.into())),
    };
    Ok(entry)
}

pub fn entries() -> Vec<GalleryEntry> {
    NAMES.iter().map(|n| get(n).expect("listed entry")).collect()
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Check {
    pub label: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GalleryVerification {
    pub name: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
}

/// Compares a report against an entry's recorded expectations.
pub fn compare(entry: &GalleryEntry, report: &AnalysisReport) -> GalleryVerification {
    let exp = &entry.expected;
    let mut checks = Vec::new();
    let mut check = |label, passed, detail: String| checks.push(Check { label, passed, detail });

    check(
        "nilpotency_index",
        report.nilpotency.index == exp.nilpotency_index,
        format!("got {:?}, expected {:?}", report.nilpotency.index, exp.nilpotency_index),
    );

    let got = &report.real_part.spectrum.eigenvalues;
    let spectrum_ok = got.len() == exp.re_spectrum.len()
        && got
            .iter()
            .zip(&exp.re_spectrum)
            .all(|(g, e)| (g - e).abs() <= exp.re_spectrum_tol);
    check(
        "re_spectrum",
        spectrum_ok,
        format!(
            "got {:?}, expected {:?} ± {}",
            got, exp.re_spectrum, exp.re_spectrum_tol
        ),
    );

    let sym = &report.real_part.symmetry;
    let sym_ok = match exp.re_symmetry {
        SymmetryExpectation::Empty => sym.intersection_is_empty,
        SymmetryExpectation::ZeroOnly => sym.intersection_is_zero(),
        SymmetryExpectation::NonzeroPair => sym.nonzero_pairs().next().is_some(),
    };
    check(
        "re_symmetry",
        sym_ok,
        format!("matched pairs {:?}, expected {:?}", sym.matched_pairs, exp.re_symmetry),
    );

    if exp.trace_exactly_zero {
        check(
            "trace_zero",
            report.trace.re == 0.0 && report.trace.im == 0.0,
            format!("trace {}", report.trace),
        );
    }

    check(
        "certificate",
        report.certificates.is_empty() != exp.certificate,
        format!("{} certificate(s)", report.certificates.len()),
    );

    let failures: Vec<&str> = report.failures().map(|v| v.theorem.as_str()).collect();
    check(
        "no_oracle_failures",
        failures.is_empty(),
        format!("failing: {failures:?}"),
    );
    check("consistent", !report.inconsistent, String::new());

    GalleryVerification {
        name: entry.name,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

/// Runs [`analyze`] at default tolerances and diffs against the entry.
pub fn verify(name: &str) -> Result<GalleryVerification, GalleryError> {
    let entry = get(name)?;
    let report = analyze(&entry.matrix, &Tolerances::default())?;
    Ok(compare(&entry, &report))
}
