//! Trapezoid discretization of the Volterra operator `(Vf)(x) = ∫₀ˣ f(t) dt`
//! on `L²(0, 1)`.
//!
//! On the grid `x_i = i/n`, `i = 1..=n`, with `h = 1/n`, the composite
//! trapezoid rule gives `V[i][j] = h` for `j < i`, `h/2` on the diagonal
//! and `0` above it. Two consequences are exact in floating point:
//!
//! * `Re V = (h/2)·J` with `J` the all-ones matrix, so `Re V ⪰ 0` with
//!   spectrum `{0 (n-1 times), 1/2}`;
//! * `V` is triangular with constant diagonal `h/2`, so its spectral radius
//!   is `1/(2n)`: it shrinks to zero as the grid is refined, yet no finite
//!   `V` is nilpotent. The report calls the radius a quasinilpotence
//!   indicator, not a spectrum of `{0}`.

use num_complex::Complex64;
use thiserror::Error;

use crate::matrix::{ComplexMatrix, MatrixError};
use crate::nilpotency::{gelfand_sequence, nilpotency_index_default};
use crate::spectral::{hermitian_spectrum, SpectralError};
use crate::theorems::{non_nilpotence_certificate, CertificateKind};
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VolterraError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Trapezoid Volterra matrix of order `n`.
pub fn volterra_matrix(n: usize) -> Result<ComplexMatrix, MatrixError> {
    let h = 1.0 / n as f64;
    ComplexMatrix::from_fn(n, |i, j| {
        let v = match i.cmp(&j) {
            core::cmp::Ordering::Greater => h,
            core::cmp::Ordering::Equal => h / 2.0,
            core::cmp::Ordering::Less => 0.0,
        };
        Complex64::new(v, 0.0)
    })
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct VolterraReport {
    pub n: usize,
    pub min_eig_re: f64,
    pub max_eig_re: f64,
    /// Quasinilpotence indicator: the diagonal value `h/2 = 1/(2n)`.
    pub spectral_radius_exact: f64,
    /// `g_K` of the Gelfand sequence at `K = gelfand_k`.
    pub gelfand_tail: f64,
    pub gelfand_k: usize,
    pub nilpotent: bool,
    pub certificate_present: bool,
    pub certificate: Option<CertificateKind>,
}

/// Analyzes the order-`n` discretization with `K = 2n` Gelfand terms.
pub fn volterra_report(n: usize) -> Result<VolterraReport, VolterraError> {
    let v = volterra_matrix(n)?;
    let re = v.cartesian_decompose().re;
    let spectrum = hermitian_spectrum(&re)?;
    let gelfand_k = 2 * n;
    let gelfand = gelfand_sequence(&v, gelfand_k);
    let certificate = non_nilpotence_certificate(&v, &Tolerances::default())?;
    Ok(VolterraReport {
        n,
        min_eig_re: spectrum.min(),
        max_eig_re: spectrum.max(),
        spectral_radius_exact: v.max_abs_diagonal(),
        gelfand_tail: gelfand.last().unwrap_or(f64::NAN),
        gelfand_k,
        nilpotent: nilpotency_index_default(&v).is_nilpotent(),
        certificate_present: certificate.is_some(),
        certificate: certificate.map(|c| c.kind),
    })
}
