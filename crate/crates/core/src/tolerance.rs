//! Default numerical thresholds.
//!
//! Every threshold is relative: it is multiplied by `max(1, ‖X‖_F)` of the
//! matrix it is applied to (or by `max(1, ‖T‖_F)^k` for the k-th power in
//! the nilpotency test).

/// Unit roundoff of the working precision (2⁻⁵²).
pub const EPSILON: f64 = f64::EPSILON;

/// `is_zero` threshold.
pub const ZERO_REL: f64 = 1e-10;

/// Largest `‖H - H*‖_F` the eigensolver accepts.
pub const HERMITIAN_REL: f64 = 1e-10;

/// Jacobi stops once the off-diagonal Frobenius norm falls below this.
pub const JACOBI_OFF_REL: f64 = 1e-13;

/// Jacobi gives up after this many sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 60;

/// Eigenvalue resolution for definiteness and `σ(A) ∩ σ(-A)` matching.
pub const SPECTRAL_REL: f64 = 1e-8;

/// Per-power threshold for `‖T^k‖_F`, scaled by `max(1, ‖T‖_F)^k`.
pub const NILPOTENT_REL: f64 = 1e-10;

/// Threshold for the commutator `‖TT* - T*T‖_F`, scaled by `max(1, ‖T‖_F²)`.
pub const NORMAL_REL: f64 = 1e-10;

/// `max(1, x)`, the scale used by every relative threshold.
#[inline]
pub fn scale(norm: f64) -> f64 {
    if norm > 1.0 {
        norm
    } else {
        1.0
    }
}

/// The bundle of relative thresholds used by composite analyses.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Tolerances {
    pub zero: f64,
    pub hermitian: f64,
    pub spectral: f64,
    pub nilpotency: f64,
    pub normality: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            zero: ZERO_REL,
            hermitian: HERMITIAN_REL,
            spectral: SPECTRAL_REL,
            nilpotency: NILPOTENT_REL,
            normality: NORMAL_REL,
        }
    }
}

impl Tolerances {
    /// Defaults with a different eigenvalue resolution.
    pub fn with_spectral(spectral: f64) -> Self {
        Self {
            spectral,
            ..Self::default()
        }
    }
}
