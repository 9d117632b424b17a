//! Seeded property suites.
//!
//! Trial `i` draws from its own generator seeded with `seed + i`
//! (wrapping), so trials run in parallel, results do not depend on
//! scheduling, and any single trial replays with `--seed <its seed>
//! --trials 1`.

use nilcert_core::generators::{GeneratorConfig, MatrixGenerator, ALGORITHM};
use nilcert_core::nilpotency::nilpotency_index;
use nilcert_core::theorems::{
    analyze, dim4_multiplicity_oracle, non_nilpotence_certificate, opposite_signs_check, small_dim_symmetry_oracle,
    OracleOutcome, TheoremId, Verdict,
};
use nilcert_core::{ComplexMatrix, Tolerances};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    /// Accretive matrices are certified and never nilpotent.
    Main,
    /// Nonzero nilpotents have indefinite real and imaginary parts.
    Corollary,
    /// Orders 2 and 3: the symmetry hypothesis never holds for a nonzero nilpotent.
    Smalldim,
    /// Order 4: the multiplicity-2 hypothesis never holds for a nonzero nilpotent.
    Dim4,
    /// Nilpotents have vanishing trace.
    Trace,
}

impl Property {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Main => "main",
            Self::Corollary => "corollary",
            Self::Smalldim => "smalldim",
            Self::Dim4 => "dim4",
            Self::Trace => "trace",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuzzError {
    #[error("property `{property}` needs --dim {allowed}, got {dim}")]
    BadDimension {
        property: &'static str,
        allowed: &'static str,
        dim: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuzzConfig {
    pub property: Property,
    pub trials: u64,
    pub dim: usize,
    pub seed: u64,
    pub tolerances: Tolerances,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialOutcome {
    pub trial: u64,
    /// Seed that replays this trial on its own.
    pub seed: u64,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzSummary {
    pub property: Property,
    pub trials: u64,
    pub dim: usize,
    pub seed: u64,
    pub algorithm: &'static str,
    pub passed: u64,
    pub failed: u64,
    pub not_applicable: u64,
    /// Failing trials in trial order.
    pub failures: Vec<TrialOutcome>,
}

impl FuzzSummary {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

fn check_dim(property: Property, dim: usize) -> Result<(), FuzzError> {
    let (ok, allowed) = match property {
        Property::Main => (dim >= 1, ">= 1"),
        Property::Corollary | Property::Trace => (dim >= 2, ">= 2"),
        Property::Smalldim => (dim == 2 || dim == 3, "2 or 3"),
        Property::Dim4 => (dim == 4, "4"),
    };
    if ok {
        Ok(())
    } else {
        Err(FuzzError::BadDimension {
            property: property.as_str(),
            allowed,
            dim,
        })
    }
}

fn outcome(verdict: Verdict, detail: String) -> OracleOutcome {
    OracleOutcome {
        verdict,
        detail,
        witnesses: Vec::new(),
    }
}

fn main_property(t: &ComplexMatrix, tol: &Tolerances) -> OracleOutcome {
    let norm = t.frobenius_norm();
    if norm <= 1e-8 {
        return outcome(Verdict::NotApplicable, format!("‖T‖_F = {norm:e}"));
    }
    let index = nilpotency_index(t, tol.nilpotency).index;
    match non_nilpotence_certificate(t, tol) {
        Ok(Some(cert)) if index.is_none() => outcome(Verdict::Pass, cert.kind.as_str().into()),
        Ok(Some(cert)) => outcome(
            Verdict::Fail,
            format!("{} certificate but index {index:?}", cert.kind.as_str()),
        ),
        Ok(None) => outcome(
            Verdict::Fail,
            format!("accretive with ‖T‖_F = {norm:e} has no certificate"),
        ),
        Err(e) => outcome(Verdict::Fail, e.to_string()),
    }
}

/// Runs one trial of `cfg.property` from `seed`.
pub fn run_trial(cfg: &FuzzConfig, seed: u64) -> OracleOutcome {
    let tol = &cfg.tolerances;
    let mut gen = match MatrixGenerator::new(&GeneratorConfig::new(seed, cfg.dim)) {
        Ok(g) => g,
        Err(e) => return outcome(Verdict::Fail, e.to_string()),
    };
    if cfg.property == Property::Main {
        return main_property(&gen.accretive(), tol);
    }
    let t = match gen.nilpotent(None) {
        Ok(t) => t,
        Err(e) => return outcome(Verdict::Fail, e.to_string()),
    };
    let result = match cfg.property {
        Property::Main => unreachable!(),
        Property::Corollary => opposite_signs_check(&t, tol),
        Property::Smalldim => small_dim_symmetry_oracle(&t, tol),
        Property::Dim4 => dim4_multiplicity_oracle(&t, tol),
        Property::Trace => analyze(&t, tol).map(|r| {
            r.verdict(TheoremId::TraceVanishes)
                .expect("analyze fills every theorem")
                .outcome
                .clone()
        }),
    };
    result.unwrap_or_else(|e| outcome(Verdict::Fail, e.to_string()))
}

pub fn run(cfg: &FuzzConfig) -> Result<FuzzSummary, FuzzError> {
    check_dim(cfg.property, cfg.dim)?;
    let outcomes: Vec<TrialOutcome> = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let seed = cfg.seed.wrapping_add(trial);
            let out = run_trial(cfg, seed);
            TrialOutcome {
                trial,
                seed,
                verdict: out.verdict,
                detail: out.detail,
            }
        })
        .collect();
    let count = |v: Verdict| outcomes.iter().filter(|o| o.verdict == v).count() as u64;
    Ok(FuzzSummary {
        property: cfg.property,
        trials: cfg.trials,
        dim: cfg.dim,
        seed: cfg.seed,
        algorithm: ALGORITHM,
        passed: count(Verdict::Pass),
        failed: count(Verdict::Fail),
        not_applicable: count(Verdict::NotApplicable),
        failures: outcomes.into_iter().filter(|o| o.verdict == Verdict::Fail).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(property: Property, dim: usize, trials: u64) -> FuzzConfig {
        FuzzConfig {
            property,
            trials,
            dim,
            seed: 1,
            tolerances: Tolerances::default(),
        }
    }

    #[test]
    fn dimension_checks() {
        assert!(run(&cfg(Property::Smalldim, 4, 1)).is_err());
        assert!(run(&cfg(Property::Dim4, 3, 1)).is_err());
        assert!(run(&cfg(Property::Corollary, 1, 1)).is_err());
        assert!(run(&cfg(Property::Main, 1, 1)).is_ok());
    }

    #[test]
    fn trial_seeds_are_offsets() {
        let s = run(&FuzzConfig {
            seed: u64::MAX,
            ..cfg(Property::Trace, 3, 3)
        })
        .unwrap();
        assert!(s.ok());
        assert_eq!(s.passed, 3);
        let replay = run_trial(&cfg(Property::Trace, 3, 1), 0);
        assert_eq!(replay.verdict, Verdict::Pass);
    }

    #[test]
    fn every_property_passes_a_small_batch() {
        for (p, dim) in [
            (Property::Main, 5),
            (Property::Corollary, 6),
            (Property::Smalldim, 2),
            (Property::Dim4, 4),
            (Property::Trace, 7),
        ] {
            let s = run(&cfg(p, dim, 50)).unwrap();
            assert!(s.ok(), "{}: {:?}", p.as_str(), s.failures);
            assert_eq!(s.passed, 50);
        }
    }
}
