//! Human-readable rendering. JSON output serializes the core types
//! directly; see the README for the key list.

use std::fmt::Write as _;

use nilcert_core::gallery::{GalleryEntry, GalleryVerification};
use nilcert_core::nilpotency::NilpotencyReport;
use nilcert_core::spectral::SymmetryReport;
use nilcert_core::theorems::{AnalysisReport, Certificate, PartSummary};
use nilcert_core::volterra::VolterraReport;
use nilcert_core::Complex64;

use crate::fuzz::FuzzSummary;

fn complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        let sign = if z.im.is_sign_negative() { '-' } else { '+' };
        format!("{}{sign}{}i", z.re, z.im.abs())
    }
}

/// Long lists keep their three smallest and three largest values.
fn list(xs: &[f64]) -> String {
    let fmt = |s: &[f64]| s.iter().map(|x| format!("{x:.6}")).collect::<Vec<_>>().join(", ");
    if xs.len() <= 8 {
        format!("[{}]", fmt(xs))
    } else {
        format!(
            "[{}, … ({} more) …, {}]",
            fmt(&xs[..3]),
            xs.len() - 6,
            fmt(&xs[xs.len() - 3..])
        )
    }
}

fn symmetry(s: &SymmetryReport) -> String {
    if s.intersection_is_empty {
        "empty".into()
    } else if s.intersection_is_zero() {
        "{0}".into()
    } else {
        let pairs: Vec<String> = s.nonzero_pairs().map(|x| format!("±{x:.6}")).collect();
        format!("contains {}", pairs.join(", "))
    }
}

fn part(out: &mut String, label: &str, p: &PartSummary) {
    let _ = writeln!(out, "{label:<18}{}", p.definiteness.as_str());
    let _ = writeln!(out, "  eigenvalues     {}", list(&p.spectrum.eigenvalues));
    let _ = writeln!(out, "  σ ∩ -σ          {}", symmetry(&p.symmetry));
}

pub fn nilpotency(r: &NilpotencyReport) -> String {
    let mut out = String::new();
    match r.index {
        Some(k) => {
            let _ = writeln!(out, "{k}");
        }
        None => out.push_str("none\n"),
    }
    for (k, ((norm, thr), ratio)) in r.power_norms.iter().zip(&r.thresholds).zip(&r.ratios).enumerate() {
        let mark = if Some(k + 1) == r.index { "  <- index" } else { "" };
        let _ = writeln!(
            out,
            "k={:<3} ‖T^k‖_F={norm:<12.6e} threshold={thr:<12.6e} ratio={ratio:.3e}{mark}",
            k + 1
        );
    }
    out
}

pub fn certificate(c: Option<&Certificate>) -> String {
    match c {
        None => "no certificate\n".into(),
        Some(c) => format!(
            "{}\n  witness class   {}\n  witness spectrum {}\n  ‖T‖_F           {:e}\n",
            c.kind.as_str(),
            c.witness_class.as_str(),
            list(&c.witness_spectrum.eigenvalues),
            c.nonzero_norm
        ),
    }
}

pub fn analysis(r: &AnalysisReport) -> String {
    let mut out = String::new();
    if r.inconsistent {
        out.push_str(
            "INCONSISTENT: a certificate and a nilpotency index together; tolerances are wrong for this input\n",
        );
    }
    let _ = writeln!(out, "{:<18}{}", "order", r.order);
    let _ = writeln!(out, "{:<18}{:e}", "‖T‖_F", r.frobenius_norm);
    let _ = writeln!(out, "{:<18}{}", "zero", r.is_zero);
    let _ = writeln!(out, "{:<18}{}", "trace", complex(r.trace));
    let index = r.nilpotency.index.map_or("none".to_string(), |k| k.to_string());
    let _ = writeln!(out, "{:<18}{index}", "nilpotency index");
    let _ = writeln!(
        out,
        "{:<18}{} (defect {:e})",
        "normal", r.normality.normal, r.normality.defect
    );
    part(&mut out, "Re T", &r.real_part);
    part(&mut out, "Im T", &r.imaginary_part);
    let certs: Vec<&str> = r.certificates.iter().map(|c| c.kind.as_str()).collect();
    let certs = if certs.is_empty() {
        "none".to_string()
    } else {
        certs.join(", ")
    };
    let _ = writeln!(out, "{:<18}{certs}", "certificates");
    out.push_str("theorem verdicts\n");
    for v in &r.theorem_verdicts {
        let _ = writeln!(
            out,
            "  {:<28}{:<16}{}",
            v.theorem.as_str(),
            v.outcome.verdict.as_str(),
            v.outcome.detail
        );
    }
    out
}

pub fn volterra(r: &VolterraReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<24}{}", "n", r.n);
    let _ = writeln!(out, "{:<24}{:e}", "min eig Re V", r.min_eig_re);
    let _ = writeln!(out, "{:<24}{}", "max eig Re V", r.max_eig_re);
    let _ = writeln!(
        out,
        "{:<24}{} (quasinilpotence indicator)",
        "spectral radius", r.spectral_radius_exact
    );
    let _ = writeln!(out, "{:<24}{}", format!("gelfand g_{}", r.gelfand_k), r.gelfand_tail);
    let _ = writeln!(out, "{:<24}{}", "nilpotent", r.nilpotent);
    let cert = r.certificate.map_or("none", |k| k.as_str());
    let _ = writeln!(out, "{:<24}{cert}", "certificate");
    out
}

pub fn gallery_entry(e: &GalleryEntry, matrix_text: &str) -> String {
    let x = &e.expected;
    let mut out = format!("{}: {}\n", e.name, e.summary);
    let index = x.nilpotency_index.map_or("none".to_string(), |k| k.to_string());
    let _ = writeln!(out, "  nilpotency index {index}");
    let _ = writeln!(out, "  Re spectrum      {:?} ± {}", x.re_spectrum, x.re_spectrum_tol);
    let _ = writeln!(out, "  Re symmetry      {:?}", x.re_symmetry);
    out.push_str(matrix_text);
    out
}

pub fn verification(v: &GalleryVerification) -> String {
    let mut out = format!("{} {}\n", if v.passed { "PASS" } else { "FAIL" }, v.name);
    for c in &v.checks {
        let _ = writeln!(
            out,
            "  {:<5} {:<20}{}",
            if c.passed { "ok" } else { "FAIL" },
            c.label,
            c.detail
        );
    }
    out
}

pub fn fuzz(s: &FuzzSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "property {} dim {} trials {} seed {} rng {}",
        s.property.as_str(),
        s.dim,
        s.trials,
        s.seed,
        s.algorithm
    );
    for f in &s.failures {
        let _ = writeln!(out, "FAIL trial {} seed {}: {}", f.trial, f.seed, f.detail);
    }
    let _ = writeln!(
        out,
        "passed {} failed {} not-applicable {}",
        s.passed, s.failed, s.not_applicable
    );
    out
}
