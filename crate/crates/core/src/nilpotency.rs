//! Nilpotency index, normality defect and the Gelfand sequence.
//!
//! Powers are always formed by repeated multiplication. Nilpotent matrices
//! are as far from normal as matrices get, so eigen-based shortcuts would
//! not be trustworthy here.

use alloc::vec::Vec;

use num_complex::Complex64;
// Inherent f64 methods shadow these whenever std is linked.
#[allow(unused_imports)]
use num_traits::Float;

use crate::matrix::{frobenius, product, ComplexMatrix};
use crate::spectral::spectral_norm;
use crate::tolerance::{self, scale};

/// Result of [`nilpotency_index`].
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct NilpotencyReport {
    /// Smallest `k ≤ n` with `‖T^k‖_F` under its threshold.
    pub index: Option<usize>,
    /// `‖T^k‖_F` for `k = 1..=n`. May underflow to 0 or overflow to
    /// infinity for long trails; `ratios` never does.
    pub power_norms: Vec<f64>,
    /// Threshold applied to each entry of `power_norms`.
    pub thresholds: Vec<f64>,
    /// `‖T^k‖_F / ‖|T|^k‖_F`, the scale-free quantity actually compared
    /// against `tol_used`.
    pub ratios: Vec<f64>,
    /// Relative tolerance the thresholds were derived from.
    pub tol_used: f64,
}

impl NilpotencyReport {
    pub fn is_nilpotent(&self) -> bool {
        self.index.is_some()
    }
}

/// Smallest `k ≤ n` with `‖T^k‖_F ≤ tol · ‖|T|^k‖_F`, where `|T|` is the
/// entrywise modulus.
///
/// `‖|T|^k‖_F` is the natural size of the rounding error in a computed
/// `T^k`, so the test separates "zero up to rounding" from "genuinely small"
/// powers. A fixed `max(1, ‖T‖_F)^k` would not: contractive non-nilpotent
/// matrices such as the Volterra discretization have powers decaying
/// super-exponentially and would be misread as nilpotent.
///
/// Both powers are renormalized at each step, so there is no underflow or
/// overflow in the decision. The full trail of `n` steps is returned even
/// after the index is found; by Cayley–Hamilton no nilpotent of order `n`
/// needs more.
pub fn nilpotency_index(t: &ComplexMatrix, tol: f64) -> NilpotencyReport {
    let n = t.order();
    let mut power_norms = Vec::with_capacity(n);
    let mut thresholds = Vec::with_capacity(n);
    let mut ratios = Vec::with_capacity(n);
    let mut index = None;

    let modulus: Vec<f64> = t.as_slice().iter().map(|z| z.norm()).collect();
    let mut power: Vec<Complex64> = t.as_slice().to_vec();
    let mut bound = modulus.clone();
    // ln of the factor divided out of both `power` and `bound` so far.
    let mut log_scale = 0.0;
    for k in 1..=n {
        if k > 1 {
            power = product(n, &power, t.as_slice());
            bound = product(n, &bound, &modulus);
        }
        let bound_norm = real_frobenius(&bound);
        let norm = frobenius(&power);
        let ratio = if bound_norm == 0.0 { 0.0 } else { norm / bound_norm };
        if index.is_none() && ratio <= tol {
            index = Some(k);
        }
        let true_scale = log_scale.exp();
        power_norms.push(norm * true_scale);
        thresholds.push(tol * bound_norm * true_scale);
        ratios.push(ratio);
        if bound_norm > 0.0 {
            let inv = bound_norm.recip();
            power.iter_mut().for_each(|z| *z *= inv);
            bound.iter_mut().for_each(|x| *x *= inv);
            log_scale += bound_norm.ln();
        }
    }
    NilpotencyReport {
        index,
        power_norms,
        thresholds,
        ratios,
        tol_used: tol,
    }
}

fn real_frobenius(xs: &[f64]) -> f64 {
    let m = xs.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if m == 0.0 || !m.is_finite() {
        return m;
    }
    m * xs.iter().map(|x| (x / m) * (x / m)).sum::<f64>().sqrt()
}

/// [`nilpotency_index`] at the default relative tolerance `1e-10`.
pub fn nilpotency_index_default(t: &ComplexMatrix) -> NilpotencyReport {
    nilpotency_index(t, tolerance::NILPOTENT_REL)
}

/// Commutator test `‖TT* - T*T‖_F ≤ tol · max(1, ‖T‖_F²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct NormalityCheck {
    pub normal: bool,
    pub defect: f64,
}

pub fn is_normal(t: &ComplexMatrix, tol: f64) -> NormalityCheck {
    let adj = t.adjoint();
    let defect = (&(t * &adj) - &(&adj * t)).frobenius_norm();
    let norm = t.frobenius_norm();
    NormalityCheck {
        normal: defect <= tol * scale(norm * norm),
        defect,
    }
}

/// `g_k = ‖T^k‖_F^{1/k}` for `k = 1..=K`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GelfandSequence {
    pub values: Vec<f64>,
    /// Requested length.
    pub k_max: usize,
    /// First `k` whose norm left the floating-point range; `values` stops
    /// just before it.
    pub truncated_at: Option<usize>,
}

impl GelfandSequence {
    pub fn last(&self) -> Option<f64> {
        self.values.last().copied()
    }
}

/// Gelfand spectral-radius sequence.
///
/// Each power is renormalized as it is formed and `ln ‖T^k‖_F` accumulated,
/// so long sequences of contracting or expanding matrices neither underflow
/// nor overflow. An exactly zero power pins the rest of the sequence at 0.
pub fn gelfand_sequence(t: &ComplexMatrix, k_max: usize) -> GelfandSequence {
    let mut values = Vec::with_capacity(k_max);
    let norm = t.frobenius_norm();
    if k_max == 0 {
        return GelfandSequence {
            values,
            k_max,
            truncated_at: None,
        };
    }
    if !norm.is_finite() {
        return GelfandSequence {
            values,
            k_max,
            truncated_at: Some(1),
        };
    }
    if norm == 0.0 {
        values.resize(k_max, 0.0);
        return GelfandSequence {
            values,
            k_max,
            truncated_at: None,
        };
    }
    values.push(norm);

    let unit = t.scale((1.0 / norm).into()).expect("scaling down keeps entries finite");
    let log_norm = norm.ln();
    // current = U^k / ‖U^k‖_F, log_unit = ln ‖U^k‖_F
    let mut current = unit.clone();
    let mut log_unit = 0.0;
    let mut zero = false;
    for k in 2..=k_max {
        if zero {
            values.push(0.0);
            continue;
        }
        let next = &current * &unit;
        let step = next.frobenius_norm();
        if step == 0.0 {
            zero = true;
            values.push(0.0);
            continue;
        }
        log_unit += step.ln();
        let g = ((k as f64 * log_norm + log_unit) / k as f64).exp();
        if !g.is_finite() {
            return GelfandSequence {
                values,
                k_max,
                truncated_at: Some(k),
            };
        }
        values.push(g);
        current = next
            .scale((1.0 / step).into())
            .expect("renormalized power stays finite");
    }
    GelfandSequence {
        values,
        k_max,
        truncated_at: None,
    }
}

/// `|‖T^k‖₂ - ‖T‖₂^k|` in the operator norm; zero for normal matrices.
pub fn norm_power_defect(t: &ComplexMatrix, k: u32) -> f64 {
    let power = t.power(k).expect("power within range");
    (spectral_norm(&power) - spectral_norm(t).powi(k as i32)).abs()
}
