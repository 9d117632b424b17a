//! Hermitian spectra: a cyclic Jacobi eigensolver, definiteness classes,
//! the `σ(A) ∩ σ(-A)` symmetry analysis and the spectral norm.

use alloc::vec::Vec;

use num_complex::Complex64;
// Inherent f64 methods shadow these whenever std is linked.
#[allow(unused_imports)]
use num_traits::Float;
use thiserror::Error;

use crate::matrix::{frobenius, ComplexMatrix};
use crate::tolerance::{self, scale};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("matrix is not Hermitian: ‖H - H*‖_F = {defect:e} exceeds {allowed:e}")]
    NotHermitian { defect: f64, allowed: f64 },
    #[error("Jacobi did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
}

/// Eigenvalues and eigenvectors from the Jacobi iteration.
///
/// `vectors` holds the accumulated rotations, so `H = Q · diag(values) · Q*`
/// with column `k` of `Q` belonging to `values[k]`.
#[derive(Debug, Clone)]
pub struct JacobiEigen {
    /// Ascending.
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
    pub sweeps: usize,
}

impl JacobiEigen {
    /// `Q · diag(values) · Q*`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.values.len();
        let q = &self.vectors;
        let scaled = ComplexMatrix::from_fn(n, |i, j| q.get(i, j) * self.values[j]).expect("finite eigenpairs");
        &scaled * &q.adjoint()
    }
}

struct JacobiState {
    values: Vec<f64>,
    vectors: Vec<Complex64>,
    sweeps: usize,
    off_norm: f64,
    converged: bool,
}

fn off_diagonal_norm(n: usize, a: &[Complex64]) -> f64 {
    let mut off = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                off.push(a[i * n + j]);
            }
        }
    }
    frobenius(&off)
}

/// Cyclic-by-rows complex Jacobi. The caller has checked hermiticity.
fn jacobi(h: &ComplexMatrix) -> JacobiState {
    let n = h.order();
    let norm = h.frobenius_norm();
    let threshold = tolerance::JACOBI_OFF_REL * scale(norm);
    // Rotations on entries below this cannot move the off-diagonal norm
    // across the threshold.
    let negligible = threshold * 1e-3 / n as f64;

    let mut a: Vec<Complex64> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let z = if i == j {
                Complex64::new(h.get(i, i).re, 0.0)
            } else {
                (h.get(i, j) + h.get(j, i).conj()) / 2.0
            };
            a.push(z);
        }
    }
    let mut q = ComplexMatrix::identity(n).as_slice().to_vec();

    let mut sweeps = 0;
    let mut off_norm = off_diagonal_norm(n, &a);
    while off_norm > threshold && sweeps < tolerance::JACOBI_MAX_SWEEPS {
        sweeps += 1;
        for p in 0..n {
            for r in (p + 1)..n {
                rotate(n, &mut a, &mut q, p, r, negligible);
            }
        }
        off_norm = off_diagonal_norm(n, &a);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re));
    let values = order.iter().map(|&i| a[i * n + i].re).collect();
    let mut vectors = Vec::with_capacity(n * n);
    for i in 0..n {
        for &col in &order {
            vectors.push(q[i * n + col]);
        }
    }
    JacobiState {
        values,
        vectors,
        sweeps,
        off_norm,
        converged: off_norm <= threshold,
    }
}

/// Annihilates `a[p][r]` with the unitary
/// `J = [[c, s], [-s·conj(e), c·conj(e)]]` acting on coordinates `(p, r)`,
/// where `a[p][r] = g·e`, `|e| = 1`.
fn rotate(n: usize, a: &mut [Complex64], q: &mut [Complex64], p: usize, r: usize, negligible: f64) {
    let apr = a[p * n + r];
    let g = apr.norm();
    if g <= negligible {
        return;
    }
    let e = apr / g;
    let ec = e.conj();
    let app = a[p * n + p].re;
    let arr = a[r * n + r].re;
    let theta = (arr - app) / (2.0 * g);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // A <- A J
    for k in 0..n {
        let akp = a[k * n + p];
        let akr = a[k * n + r];
        a[k * n + p] = akp * c - ec * akr * s;
        a[k * n + r] = akp * s + ec * akr * c;
    }
    // A <- J* A
    for k in 0..n {
        let apk = a[p * n + k];
        let ark = a[r * n + k];
        a[p * n + k] = apk * c - e * ark * s;
        a[r * n + k] = apk * s + e * ark * c;
    }
    a[p * n + p] = Complex64::new(app - t * g, 0.0);
    a[r * n + r] = Complex64::new(arr + t * g, 0.0);
    a[p * n + r] = Complex64::new(0.0, 0.0);
    a[r * n + p] = Complex64::new(0.0, 0.0);
    // Q <- Q J
    for k in 0..n {
        let qkp = q[k * n + p];
        let qkr = q[k * n + r];
        q[k * n + p] = qkp * c - ec * qkr * s;
        q[k * n + r] = qkp * s + ec * qkr * c;
    }
}

fn check_hermitian(h: &ComplexMatrix) -> Result<(), SpectralError> {
    let defect = h.hermitian_defect();
    let allowed = tolerance::HERMITIAN_REL * scale(h.frobenius_norm());
    if defect > allowed || defect.is_nan() {
        return Err(SpectralError::NotHermitian { defect, allowed });
    }
    Ok(())
}

/// Full Jacobi eigendecomposition of a Hermitian matrix.
pub fn jacobi_eigen(h: &ComplexMatrix) -> Result<JacobiEigen, SpectralError> {
    check_hermitian(h)?;
    let state = jacobi(h);
    if !state.converged {
        return Err(SpectralError::NoConvergence {
            sweeps: state.sweeps,
            off_norm: state.off_norm,
        });
    }
    Ok(JacobiEigen {
        values: state.values,
        vectors: ComplexMatrix::from_row_major(h.order(), state.vectors).expect("rotations stay finite"),
        sweeps: state.sweeps,
    })
}

/// Sorted real spectrum of a Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SpectrumReport {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    pub order: usize,
    /// Resolution at which two eigenvalues count as equal.
    pub tol: f64,
}

/// Eigenvalues of `h`, with `tol` recorded as the report's resolution.
pub fn hermitian_eigenvalues(h: &ComplexMatrix, tol: f64) -> Result<SpectrumReport, SpectralError> {
    let eig = jacobi_eigen(h)?;
    Ok(SpectrumReport {
        eigenvalues: eig.values,
        order: h.order(),
        tol,
    })
}

/// [`hermitian_eigenvalues`] at resolution `1e-8 · max(1, ‖h‖_F)`.
pub fn hermitian_spectrum(h: &ComplexMatrix) -> Result<SpectrumReport, SpectralError> {
    hermitian_eigenvalues(h, tolerance::SPECTRAL_REL * scale(h.frobenius_norm()))
}

impl SpectrumReport {
    /// A report over explicit eigenvalues (sorted here).
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>, tol: f64) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        Self {
            order: eigenvalues.len(),
            eigenvalues,
            tol,
        }
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// The spectrum of `-H`.
    pub fn negated(&self) -> Self {
        Self {
            eigenvalues: self.eigenvalues.iter().rev().map(|x| -x).collect(),
            order: self.order,
            tol: self.tol,
        }
    }

    /// Greedy left-to-right clustering: an eigenvalue joins the current
    /// cluster when it lies within `tol` of the cluster's first member.
    /// Returns `(first member, multiplicity)` pairs.
    pub fn clusters(&self, tol: f64) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &x in &self.eigenvalues {
            match out.last_mut() {
                Some((start, count)) if x - *start <= tol => *count += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    /// Multiplicity of the eigenvalue 0 at resolution `tol`: the size of the
    /// cluster containing the eigenvalue closest to zero, if that eigenvalue is
    /// itself within `tol` of zero.
    pub fn zero_multiplicity(&self, tol: f64) -> usize {
        let mut best: Option<(f64, usize)> = None;
        for (start, count) in self.clusters(tol) {
            let members = self.eigenvalues.iter().filter(|&&x| x >= start && x - start <= tol);
            let closest = members.map(|x| x.abs()).fold(f64::INFINITY, f64::min);
            if closest <= tol && best.is_none_or(|(d, _)| closest < d) {
                best = Some((closest, count));
            }
        }
        best.map_or(0, |(_, count)| count)
    }

    pub fn definiteness(&self) -> DefinitenessClass {
        classify_definiteness(self, self.tol)
    }

    pub fn symmetry(&self) -> SymmetryReport {
        spectrum_symmetry(self, self.tol)
    }
}

/// Strongest applicable definiteness verdict; `Zero` beats everything.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum DefinitenessClass {
    Zero,
    PositiveDefinite,
    PositiveSemidefinite,
    NegativeDefinite,
    NegativeSemidefinite,
    Indefinite,
}

impl DefinitenessClass {
    /// `⪰ 0` and not identically zero.
    pub fn is_nonzero_psd(self) -> bool {
        matches!(self, Self::PositiveDefinite | Self::PositiveSemidefinite)
    }

    /// `⪯ 0` and not identically zero.
    pub fn is_nonzero_nsd(self) -> bool {
        matches!(self, Self::NegativeDefinite | Self::NegativeSemidefinite)
    }

    /// The class of `-H` given the class of `H`.
    pub fn mirrored(self) -> Self {
        match self {
            Self::PositiveDefinite => Self::NegativeDefinite,
            Self::PositiveSemidefinite => Self::NegativeSemidefinite,
            Self::NegativeDefinite => Self::PositiveDefinite,
            Self::NegativeSemidefinite => Self::PositiveSemidefinite,
            other => other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Zero => "zero",
            Self::PositiveDefinite => "positive-definite",
            Self::PositiveSemidefinite => "positive-semidefinite",
            Self::NegativeDefinite => "negative-definite",
            Self::NegativeSemidefinite => "negative-semidefinite",
            Self::Indefinite => "indefinite",
        }
    }
}

pub fn classify_definiteness(spec: &SpectrumReport, tol: f64) -> DefinitenessClass {
    let (lo, hi) = (spec.min(), spec.max());
    if lo.abs() <= tol && hi.abs() <= tol {
        DefinitenessClass::Zero
    } else if lo > tol {
        DefinitenessClass::PositiveDefinite
    } else if lo >= -tol {
        DefinitenessClass::PositiveSemidefinite
    } else if hi < -tol {
        DefinitenessClass::NegativeDefinite
    } else if hi <= tol {
        DefinitenessClass::NegativeSemidefinite
    } else {
        DefinitenessClass::Indefinite
    }
}

/// Which values `λ ≥ 0` have both `λ` and `-λ` in the spectrum.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SymmetryReport {
    /// Ascending; `0.0` appears at most once, first.
    pub matched_pairs: Vec<f64>,
    pub intersection_is_subset_of_zero: bool,
    pub intersection_is_empty: bool,
    pub tol: f64,
}

impl SymmetryReport {
    pub fn contains_zero(&self) -> bool {
        self.matched_pairs.first() == Some(&0.0)
    }

    /// `σ ∩ -σ = {0}` exactly.
    pub fn intersection_is_zero(&self) -> bool {
        self.contains_zero() && self.intersection_is_subset_of_zero
    }

    /// Matched magnitudes other than zero.
    pub fn nonzero_pairs(&self) -> impl Iterator<Item = f64> + '_ {
        self.matched_pairs.iter().copied().filter(|&x| x != 0.0)
    }
}

/// Matches the sorted spectrum against its negation.
///
/// An eigenvalue with `|λ + λ| ≤ tol` is its own partner and puts `0` in
/// the intersection. The remaining ones are paired greedily by two pointers
/// from both ends, `λ` and `μ` matching when `|λ + μ| ≤ tol`; each
/// occurrence is used at most once.
pub fn spectrum_symmetry(spec: &SpectrumReport, tol: f64) -> SymmetryReport {
    let self_paired = |x: f64| (x + x).abs() <= tol;
    let has_zero = spec.eigenvalues.iter().any(|&x| self_paired(x));
    let rest: Vec<f64> = spec.eigenvalues.iter().copied().filter(|&x| !self_paired(x)).collect();

    let mut matched = Vec::new();
    if !rest.is_empty() {
        let (mut i, mut j) = (0, rest.len() - 1);
        while i < j {
            let sum = rest[i] + rest[j];
            if sum.abs() <= tol {
                matched.push((rest[j] - rest[i]) / 2.0);
                i += 1;
                j -= 1;
            } else if sum < 0.0 {
                i += 1;
            } else {
                j -= 1;
            }
        }
    }
    matched.sort_by(f64::total_cmp);
    let subset_of_zero = matched.is_empty();
    if has_zero {
        matched.insert(0, 0.0);
    }
    SymmetryReport {
        intersection_is_empty: matched.is_empty(),
        intersection_is_subset_of_zero: subset_of_zero,
        matched_pairs: matched,
        tol,
    }
}

/// Operator 2-norm: `sqrt(λ_max(T* T))`.
pub fn spectral_norm(t: &ComplexMatrix) -> f64 {
    let gram = t.gram();
    // T*T is exactly Hermitian, so only the sweep cap can stop Jacobi; the
    // diagonal it leaves is still the best available estimate.
    let state = jacobi(&gram);
    state.values.last().copied().unwrap_or(0.0).max(0.0).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn jordan2_real_part_spectrum() {
        let h = ComplexMatrix::from_real_rows(&[[0.0, 0.5], [0.5, 0.0]]).unwrap();
        let spec = hermitian_spectrum(&h).unwrap();
        assert!(close(spec.eigenvalues[0], -0.5, 1e-15));
        assert!(close(spec.eigenvalues[1], 0.5, 1e-15));
    }

    #[test]
    fn diagonal_spectrum_is_sorted_diagonal() {
        let h = ComplexMatrix::real_diagonal(&[0.0, 3.0, -2.0, -1.0]).unwrap();
        let spec = hermitian_spectrum(&h).unwrap();
        assert_eq!(spec.eigenvalues, vec![-2.0, -1.0, 0.0, 3.0]);
        assert_eq!(spec.order, 4);
    }

    #[test]
    fn example_pp_real_part_spectrum() {
        let h = ComplexMatrix::from_real_rows(&[
            [2.0, 3.5, -0.5, 0.0],
            [3.5, 1.0, 1.0, 0.0],
            [-0.5, 1.0, -3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ])
        .unwrap();
        let spec = hermitian_spectrum(&h).unwrap();
        for (got, want) in spec.eigenvalues.iter().zip([-3.71, -1.33, 0.0, 5.04]) {
            assert!(close(*got, want, 0.01), "{got} vs {want}");
        }
    }

    #[test]
    fn complex_hermitian_reconstructs() {
        let h = ComplexMatrix::from_rows(&[
            [
                Complex64::new(2.0, 0.0),
                Complex64::new(1.0, -1.0),
                Complex64::new(0.0, 2.0),
            ],
            [
                Complex64::new(1.0, 1.0),
                Complex64::new(-1.0, 0.0),
                Complex64::new(0.5, 0.0),
            ],
            [
                Complex64::new(0.0, -2.0),
                Complex64::new(0.5, 0.0),
                Complex64::new(3.0, 0.0),
            ],
        ])
        .unwrap();
        let eig = jacobi_eigen(&h).unwrap();
        assert!((&eig.reconstruct() - &h).frobenius_norm() < 1e-13);
        let q = &eig.vectors;
        assert!((&(&q.adjoint() * q) - &ComplexMatrix::identity(3)).frobenius_norm() < 1e-13);
        assert!(close(eig.values.iter().sum(), 4.0, 1e-13));
    }

    #[test]
    fn rejects_non_hermitian() {
        let t = ComplexMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]).unwrap();
        match hermitian_spectrum(&t) {
            Err(SpectralError::NotHermitian { defect, .. }) => {
                assert!(close(defect, 2f64.sqrt(), 1e-15))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn classify_examples() {
        let tol = 1e-8;
        let c = |v: &[f64]| classify_definiteness(&SpectrumReport::from_eigenvalues(v.to_vec(), tol), tol);
        assert_eq!(c(&[-0.5, 0.5]), DefinitenessClass::Indefinite);
        assert_eq!(c(&[0.0, 0.0, 0.5]), DefinitenessClass::PositiveSemidefinite);
        assert_eq!(c(&[0.0, 0.0, 0.0]), DefinitenessClass::Zero);
        assert_eq!(c(&[1.0, 2.0]), DefinitenessClass::PositiveDefinite);
        assert_eq!(c(&[-1.0, -2.0]), DefinitenessClass::NegativeDefinite);
        assert_eq!(c(&[-1.0, -1e-9]), DefinitenessClass::NegativeSemidefinite);
        assert_eq!(c(&[-1e-9, 1e-9]), DefinitenessClass::Zero);
    }

    #[test]
    fn symmetry_examples() {
        let tol = 1e-8;
        let s = |v: &[f64]| spectrum_symmetry(&SpectrumReport::from_eigenvalues(v.to_vec(), tol), tol);

        let r = s(&[-2.0, -1.0, 0.0, 3.0]);
        assert_eq!(r.matched_pairs, vec![0.0]);
        assert!(r.intersection_is_subset_of_zero && r.intersection_is_zero());
        assert!(!r.intersection_is_empty);

        let r = s(&[-0.205, -1.043, -2.811, 4.058]);
        assert!(r.intersection_is_empty && r.intersection_is_subset_of_zero);

        let r = s(&[-0.5, 0.5]);
        assert_eq!(r.matched_pairs, vec![0.5]);
        assert!(!r.intersection_is_subset_of_zero);

        // Multiset: one +1 cannot serve two -1s.
        let r = s(&[-1.0, -1.0, 1.0]);
        assert_eq!(r.matched_pairs, vec![1.0]);

        // Several zeros still list 0 once.
        let r = s(&[0.0, 0.0, 2.0, -2.0]);
        assert_eq!(r.matched_pairs, vec![0.0, 2.0]);
    }

    #[test]
    fn zero_multiplicity_counts_cluster() {
        let tol = 1e-8;
        let spec = SpectrumReport::from_eigenvalues(vec![-1.0, 0.0, 1e-12, 2.0], tol);
        assert_eq!(spec.zero_multiplicity(tol), 2);
        let spec = SpectrumReport::from_eigenvalues(vec![-1.0, 0.0, 2.0, 3.0], tol);
        assert_eq!(spec.zero_multiplicity(tol), 1);
        let spec = SpectrumReport::from_eigenvalues(vec![-1.0, 2.0], tol);
        assert_eq!(spec.zero_multiplicity(tol), 0);
    }

    #[test]
    fn spectral_norm_examples() {
        assert!(close(spectral_norm(&ComplexMatrix::identity(3)), 1.0, 1e-15));
        let j = ComplexMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]).unwrap();
        assert!(close(spectral_norm(&j), 1.0, 1e-15));
        let d = ComplexMatrix::real_diagonal(&[0.0, 3.0, -2.0, -1.0]).unwrap();
        assert!(close(spectral_norm(&d), 3.0, 1e-14));
        assert_eq!(spectral_norm(&ComplexMatrix::zeros(2)), 0.0);
    }

    #[test]
    fn all_ones_is_rank_one() {
        let n = 32;
        let h = ComplexMatrix::from_fn(n, |_, _| Complex64::new(1.0, 0.0)).unwrap();
        let spec = hermitian_spectrum(&h).unwrap();
        assert!(close(spec.max(), n as f64, 1e-12));
        assert!(spec.eigenvalues[..n - 1].iter().all(|x| x.abs() < 1e-12));
    }
}
