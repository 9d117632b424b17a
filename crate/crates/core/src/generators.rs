//! Seeded random matrices for the property suites.
//!
//! The stream is fully specified so that other implementations can replay a
//! corpus bit for bit:
//!
//! * State: xoshiro256++ seeded from the 64-bit seed through SplitMix64
//!   (`Xoshiro256PlusPlus::seed_from_u64`).
//! * Uniforms: `u1 = ((x >> 11) + 1) · 2⁻⁵³ ∈ (0, 1]`,
//!   `u2 = (y >> 11) · 2⁻⁵³ ∈ [0, 1)` from two consecutive outputs `x`, `y`.
//! * Gaussians: Box–Muller. One pair `(u1, u2)` yields one complex sample
//!   `r·(cos θ + i sin θ)` with `r = sqrt(-2 ln u1)`, `θ = 2π u2`, so real and
//!   imaginary parts are independent standard normals. Samples are then
//!   multiplied by `entry_scale`.
//! * Matrices are filled row by row.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
// Inherent f64 methods shadow these whenever std is linked.
#[allow(unused_imports)]
use num_traits::Float;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use thiserror::Error;

use crate::matrix::ComplexMatrix;

/// Name recorded in report headers.
pub const ALGORITHM: &str = "xoshiro256++/splitmix64 seed, Box-Muller complex normals";

const MAX_UNITARY_ATTEMPTS: usize = 8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("entry scale must be finite and nonnegative, got {0}")]
    InvalidScale(f64),
    #[error("matrix order must be at least 1")]
    EmptyOrder,
    #[error("a nonzero nilpotent needs order at least 2")]
    NilpotentOrderTooSmall,
    #[error("index lower bound {bound} exceeds order {order}")]
    IndexBoundTooLarge { bound: usize, order: usize },
    #[error("rank-deficient Gaussian draw {attempts} times in a row")]
    Degenerate { attempts: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub order: usize,
    pub entry_scale: f64,
}

impl GeneratorConfig {
    pub fn new(seed: u64, order: usize) -> Self {
        Self {
            seed,
            order,
            entry_scale: 1.0,
        }
    }

    pub fn with_scale(self, entry_scale: f64) -> Self {
        Self { entry_scale, ..self }
    }
}

/// A seeded stream of random matrices. Owns its state; not meant to be
/// shared between threads.
#[derive(Debug, Clone)]
pub struct MatrixGenerator {
    rng: Xoshiro256PlusPlus,
    order: usize,
    scale: f64,
}

impl MatrixGenerator {
    pub fn new(cfg: &GeneratorConfig) -> Result<Self, GeneratorError> {
        if !(cfg.entry_scale.is_finite() && cfg.entry_scale >= 0.0) {
            return Err(GeneratorError::InvalidScale(cfg.entry_scale));
        }
        if cfg.order == 0 {
            return Err(GeneratorError::EmptyOrder);
        }
        Ok(Self {
            rng: Xoshiro256PlusPlus::seed_from_u64(cfg.seed),
            order: cfg.order,
            scale: cfg.entry_scale,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Subsequent matrices have this order.
    pub fn set_order(&mut self, order: usize) -> Result<(), GeneratorError> {
        if order == 0 {
            return Err(GeneratorError::EmptyOrder);
        }
        self.order = order;
        Ok(())
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Standard complex normal with independent `N(0, 1)` parts (unscaled).
    pub fn standard_complex(&mut self) -> Complex64 {
        let x = self.rng.next_u64();
        let y = self.rng.next_u64();
        let u1 = ((x >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64);
        let u2 = (y >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * PI * u2;
        Complex64::new(r * theta.cos(), r * theta.sin())
    }

    fn scaled(&mut self) -> Complex64 {
        self.standard_complex() * self.scale
    }

    fn matrix_from<F: FnMut(&mut Self, usize, usize) -> Complex64>(&mut self, mut f: F) -> ComplexMatrix {
        let n = self.order;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(self, i, j));
            }
        }
        ComplexMatrix::from_row_major(n, data).expect("Gaussian entries are finite")
    }

    /// Independent scaled complex Gaussian entries.
    pub fn gaussian(&mut self) -> ComplexMatrix {
        self.matrix_from(|g, _, _| g.scaled())
    }

    /// Unitary from modified Gram–Schmidt (with one re-orthogonalization
    /// pass) on the columns of an unscaled Gaussian matrix. Rank-deficient
    /// draws are redrawn, up to eight attempts.
    pub fn unitary(&mut self) -> Result<ComplexMatrix, GeneratorError> {
        let n = self.order;
        for _ in 0..MAX_UNITARY_ATTEMPTS {
            let g = self.matrix_from(|g, _, _| g.standard_complex());
            let mut cols: Vec<Vec<Complex64>> = (0..n).map(|j| (0..n).map(|i| g.get(i, j)).collect()).collect();
            if orthonormalize(&mut cols) {
                return Ok(ComplexMatrix::from_fn(n, |i, j| cols[j][i]).expect("unit columns"));
            }
        }
        Err(GeneratorError::Degenerate {
            attempts: MAX_UNITARY_ATTEMPTS,
        })
    }

    /// `(G + G*)/2`.
    pub fn hermitian(&mut self) -> ComplexMatrix {
        self.gaussian().cartesian_decompose().re
    }

    /// `G* G`.
    pub fn psd(&mut self) -> ComplexMatrix {
        self.gaussian().gram()
    }

    /// `P + iH` with `P` from [`psd`](Self::psd) and `H` from
    /// [`hermitian`](Self::hermitian), so `Re T = P` up to rounding.
    pub fn accretive(&mut self) -> ComplexMatrix {
        let p = self.psd();
        let h = self.hermitian();
        ComplexMatrix::from_fn(self.order, |i, j| {
            let z = h.get(i, j);
            p.get(i, j) + Complex64::new(-z.im, z.re)
        })
        .expect("finite sum")
    }

    /// `Q S Q*` with `S` strictly upper triangular Gaussian and `Q` unitary.
    ///
    /// With `index_lower_bound = Some(m)` the superdiagonal entries
    /// `S[i][i+1]`, `i < m - 1`, are kept away from zero, which makes the
    /// nilpotency index at least `m`.
    pub fn nilpotent(&mut self, index_lower_bound: Option<usize>) -> Result<ComplexMatrix, GeneratorError> {
        let n = self.order;
        if n < 2 {
            return Err(GeneratorError::NilpotentOrderTooSmall);
        }
        if self.scale == 0.0 {
            return Err(GeneratorError::InvalidScale(0.0));
        }
        let bound = index_lower_bound.unwrap_or(0);
        if bound > n {
            return Err(GeneratorError::IndexBoundTooLarge { bound, order: n });
        }
        let scale = self.scale;
        let mut s = self.matrix_from(|g, i, j| if j > i { g.scaled() } else { Complex64::new(0.0, 0.0) });
        // A Gaussian sample of exactly zero is possible only in principle;
        // replace it so the superdiagonal chain (and the matrix) is nonzero.
        let chain = bound.max(2) - 1;
        let fixed: Vec<(usize, Complex64)> = (0..chain)
            .filter(|&i| s.get(i, i + 1).norm() < 1e-3 * scale)
            .map(|i| (i, Complex64::new(scale, 0.0)))
            .collect();
        if !fixed.is_empty() {
            s = ComplexMatrix::from_fn(n, |i, j| match fixed.iter().find(|(k, _)| *k == i && j == i + 1) {
                Some((_, z)) => *z,
                None => s.get(i, j),
            })
            .expect("finite");
        }
        let q = self.unitary()?;
        Ok(&(&q * &s) * &q.adjoint())
    }
}

/// Modified Gram–Schmidt, run twice. Returns `false` when a column loses
/// more than all but `1e-10` of its norm (numerically dependent draw).
fn orthonormalize(cols: &mut [Vec<Complex64>]) -> bool {
    let norm = |v: &[Complex64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for j in 0..cols.len() {
        let original = norm(&cols[j]);
        for _pass in 0..2 {
            for k in 0..j {
                let (done, rest) = cols.split_at_mut(j);
                let qk = &done[k];
                let v = &mut rest[0];
                let dot: Complex64 = qk.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
                for (vi, qi) in v.iter_mut().zip(qk) {
                    *vi -= dot * qi;
                }
            }
        }
        let remaining = norm(&cols[j]);
        if remaining.is_nan() || remaining <= 1e-10 * original {
            return false;
        }
        for z in cols[j].iter_mut() {
            *z /= remaining;
        }
    }
    true
}

pub fn random_unitary(cfg: &GeneratorConfig) -> Result<ComplexMatrix, GeneratorError> {
    MatrixGenerator::new(cfg)?.unitary()
}

pub fn random_nilpotent(
    cfg: &GeneratorConfig,
    index_lower_bound: Option<usize>,
) -> Result<ComplexMatrix, GeneratorError> {
    MatrixGenerator::new(cfg)?.nilpotent(index_lower_bound)
}

pub fn random_hermitian(cfg: &GeneratorConfig) -> Result<ComplexMatrix, GeneratorError> {
    Ok(MatrixGenerator::new(cfg)?.hermitian())
}

pub fn random_psd(cfg: &GeneratorConfig) -> Result<ComplexMatrix, GeneratorError> {
    Ok(MatrixGenerator::new(cfg)?.psd())
}

pub fn random_accretive(cfg: &GeneratorConfig) -> Result<ComplexMatrix, GeneratorError> {
    Ok(MatrixGenerator::new(cfg)?.accretive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nilpotency::nilpotency_index_default;
    use crate::spectral::{hermitian_spectrum, DefinitenessClass};

    #[test]
    fn same_config_same_matrices() {
        let cfg = GeneratorConfig::new(1234, 5);
        let a = random_nilpotent(&cfg, None).unwrap();
        let b = random_nilpotent(&cfg, None).unwrap();
        assert_eq!(a.as_slice(), b.as_slice());
        let c = random_nilpotent(&GeneratorConfig::new(1235, 5), None).unwrap();
        assert_ne!(a.as_slice(), c.as_slice());
    }

    #[test]
    fn box_muller_moments() {
        let mut g = MatrixGenerator::new(&GeneratorConfig::new(9, 1)).unwrap();
        let samples: Vec<Complex64> = (0..20000).map(|_| g.standard_complex()).collect();
        let mean: Complex64 = samples.iter().sum::<Complex64>() / samples.len() as f64;
        let var_re = samples.iter().map(|z| z.re * z.re).sum::<f64>() / samples.len() as f64;
        let var_im = samples.iter().map(|z| z.im * z.im).sum::<f64>() / samples.len() as f64;
        assert!(mean.norm() < 0.03);
        assert!((var_re - 1.0).abs() < 0.05 && (var_im - 1.0).abs() < 0.05);
    }

    #[test]
    fn unitary_order_one_is_unit_modulus() {
        let q = random_unitary(&GeneratorConfig::new(3, 1)).unwrap();
        assert!((q.get(0, 0).norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn unitary_seed_42_order_8() {
        let q = random_unitary(&GeneratorConfig::new(42, 8)).unwrap();
        let id = ComplexMatrix::identity(8);
        assert!((&(&q * &q.adjoint()) - &id).frobenius_norm() <= 1e-12 * 8.0);
        assert!((&(&q.adjoint() * &q) - &id).frobenius_norm() <= 1e-12 * 8.0);
    }

    #[test]
    fn unitary_is_isometry() {
        let mut g = MatrixGenerator::new(&GeneratorConfig::new(77, 6)).unwrap();
        let q = g.unitary().unwrap();
        let x: Vec<Complex64> = (0..6).map(|_| g.standard_complex()).collect();
        let qx: Vec<Complex64> = (0..6).map(|i| (0..6).map(|j| q.get(i, j) * x[j]).sum()).collect();
        let n = |v: &[Complex64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        assert!((n(&qx) - n(&x)).abs() < 1e-10);
    }

    #[test]
    fn nilpotent_examples() {
        for seed in 0..20 {
            let t = random_nilpotent(&GeneratorConfig::new(seed, 2), None).unwrap();
            assert_eq!(nilpotency_index_default(&t).index, Some(2));
            assert!(t.trace().norm() < 1e-12);
        }
        let t = random_nilpotent(&GeneratorConfig::new(5, 5), Some(5)).unwrap();
        assert_eq!(nilpotency_index_default(&t).index, Some(5));
    }

    #[test]
    fn nilpotent_rejects_bad_requests() {
        assert_eq!(
            random_nilpotent(&GeneratorConfig::new(0, 1), None),
            Err(GeneratorError::NilpotentOrderTooSmall)
        );
        assert_eq!(
            random_nilpotent(&GeneratorConfig::new(0, 3), Some(4)),
            Err(GeneratorError::IndexBoundTooLarge { bound: 4, order: 3 })
        );
        assert_eq!(
            random_nilpotent(&GeneratorConfig::new(0, 3).with_scale(-1.0), None),
            Err(GeneratorError::InvalidScale(-1.0))
        );
    }

    #[test]
    fn psd_seed_7_order_3() {
        let p = random_psd(&GeneratorConfig::new(7, 3)).unwrap();
        let spec = hermitian_spectrum(&p).unwrap();
        assert!(spec.min() >= -1e-12);
        assert!(matches!(
            spec.definiteness(),
            DefinitenessClass::PositiveDefinite | DefinitenessClass::PositiveSemidefinite
        ));
    }

    #[test]
    fn hermitian_is_accepted_by_eigensolver() {
        let h = random_hermitian(&GeneratorConfig::new(11, 7)).unwrap();
        assert_eq!(h.hermitian_defect(), 0.0);
        assert!(hermitian_spectrum(&h).is_ok());
    }

    #[test]
    fn accretive_real_part_is_the_psd_factor() {
        let cfg = GeneratorConfig::new(21, 4);
        let t = random_accretive(&cfg).unwrap();
        let mut g = MatrixGenerator::new(&cfg).unwrap();
        let p = g.psd();
        let re = t.cartesian_decompose().re;
        assert!((&re - &p).frobenius_norm() <= 1e-14 * p.frobenius_norm());
        let zero = random_accretive(&cfg.with_scale(0.0)).unwrap();
        assert!(zero.is_zero(0.0));
    }
}
