//! Certificates and contrapositive oracles for nilpotent matrices.
//!
//! The underlying results all conclude "then `T = 0`", which sampling
//! nonzero matrices can never exercise directly. Each oracle therefore
//! checks the contrapositive on a nonzero nilpotent input: the hypothesis
//! that would force `T = 0` must fail. A verdict is three-valued and
//! [`Verdict::NotApplicable`] never counts as a pass.
//!
//! | oracle | statement checked on nonzero nilpotent `T = A + iB` |
//! |---|---|
//! | [`TheoremId::SemidefinitePart`] | neither `A` nor `B` is `⪰ 0` |
//! | [`TheoremId::NegativeSemidefinitePart`] | neither `A` nor `B` is `⪯ 0` |
//! | [`TheoremId::OppositeSigns`] | `A` and `B` both have eigenvalues of both signs |
//! | [`TheoremId::SmallDimensionSymmetry`] | order 2 or 3: `σ(A) ∩ σ(-A) ≠ {0}` and `σ(B) ∩ σ(-B) ≠ {0}` |
//! | [`TheoremId::Dim4ZeroMultiplicity`] | order 4: not (`σ ∩ -σ = {0}` with 0 of multiplicity 2), for `A` and `B` |
//! | [`TheoremId::TwoByTwoDisjoint`] | order 2 with `σ(A) ∩ σ(-A) = ∅`: `T` is not nilpotent |
//! | [`TheoremId::NilpotentNormalIffZero`] | `T` is normal exactly when `T = 0` |
//! | [`TheoremId::TraceVanishes`] | `tr T = 0` |
//! | [`TheoremId::NormPowerIdentity`] | normal `T`: `‖T²‖₂ = ‖T‖₂²` |
//!
//! A [`Certificate`] is the practical output: a nonzero matrix with a
//! semidefinite real or imaginary part is provably not nilpotent.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::generators::MatrixGenerator;
use crate::matrix::ComplexMatrix;
use crate::nilpotency::{is_normal, nilpotency_index, norm_power_defect, NilpotencyReport, NormalityCheck};
use crate::spectral::{
    hermitian_eigenvalues, spectral_norm, DefinitenessClass, SpectralError, SpectrumReport, SymmetryReport,
};
use crate::tolerance::{scale, Tolerances};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(rename_all = "snake_case"))]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

/// Verdict plus the eigenvalues (or other numbers) that justify it.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct OracleOutcome {
    pub verdict: Verdict,
    pub detail: String,
    pub witnesses: Vec<f64>,
}

impl OracleOutcome {
    fn new(verdict: Verdict, detail: String, witnesses: Vec<f64>) -> Self {
        Self {
            verdict,
            detail,
            witnesses,
        }
    }

    fn not_applicable(detail: &str) -> Self {
        Self::new(Verdict::NotApplicable, detail.into(), Vec::new())
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum CertificateKind {
    #[cfg_attr(feature = "serde", serde(rename = "RealPartPSD"))]
    RealPartPsd,
    #[cfg_attr(feature = "serde", serde(rename = "RealPartNSD"))]
    RealPartNsd,
    #[cfg_attr(feature = "serde", serde(rename = "ImagPartPSD"))]
    ImagPartPsd,
    #[cfg_attr(feature = "serde", serde(rename = "ImagPartNSD"))]
    ImagPartNsd,
}

impl CertificateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::RealPartPsd => "RealPartPSD",
            Self::RealPartNsd => "RealPartNSD",
            Self::ImagPartPsd => "ImagPartPSD",
            Self::ImagPartNsd => "ImagPartNSD",
        }
    }
}

/// Witness that a nonzero matrix is not nilpotent.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Certificate {
    pub kind: CertificateKind,
    /// Spectrum of the semidefinite part.
    pub witness_spectrum: SpectrumReport,
    pub witness_class: DefinitenessClass,
    /// `‖T‖_F`, above the zero tolerance.
    pub nonzero_norm: f64,
}

/// Everything the oracles need, computed once.
#[derive(Debug, Clone)]
struct Facts {
    order: usize,
    norm: f64,
    is_zero: bool,
    trace: Complex64,
    re: SpectrumReport,
    im: SpectrumReport,
    re_class: DefinitenessClass,
    im_class: DefinitenessClass,
    re_symmetry: SymmetryReport,
    im_symmetry: SymmetryReport,
    nilpotency: NilpotencyReport,
}

fn part_spectrum(h: &ComplexMatrix, tol: &Tolerances) -> Result<SpectrumReport, SpectralError> {
    hermitian_eigenvalues(h, tol.spectral * scale(h.frobenius_norm()))
}

impl Facts {
    fn gather(t: &ComplexMatrix, tol: &Tolerances) -> Result<Self, SpectralError> {
        let mut facts = Self::spectral(t, tol)?;
        facts.nilpotency = nilpotency_index(t, tol.nilpotency);
        Ok(facts)
    }

    /// Everything except the power trail, which dominates the cost for
    /// large orders and is not needed for certificates. The nilpotency
    /// report is left empty.
    fn spectral(t: &ComplexMatrix, tol: &Tolerances) -> Result<Self, SpectralError> {
        let norm = t.frobenius_norm();
        let parts = t.cartesian_decompose();
        let re = part_spectrum(&parts.re, tol)?;
        let im = part_spectrum(&parts.im, tol)?;
        Ok(Self {
            order: t.order(),
            norm,
            is_zero: norm <= tol.zero * scale(norm),
            trace: t.trace(),
            re_class: re.definiteness(),
            im_class: im.definiteness(),
            re_symmetry: re.symmetry(),
            im_symmetry: im.symmetry(),
            nilpotency: NilpotencyReport {
                index: None,
                power_norms: Vec::new(),
                thresholds: Vec::new(),
                ratios: Vec::new(),
                tol_used: tol.nilpotency,
            },
            re,
            im,
        })
    }

    fn certificates(&self) -> Vec<Certificate> {
        if self.is_zero {
            return Vec::new();
        }
        let candidates = [
            (
                CertificateKind::RealPartPsd,
                &self.re,
                self.re_class,
                self.re_class.is_nonzero_psd(),
            ),
            (
                CertificateKind::RealPartNsd,
                &self.re,
                self.re_class,
                self.re_class.is_nonzero_nsd(),
            ),
            (
                CertificateKind::ImagPartPsd,
                &self.im,
                self.im_class,
                self.im_class.is_nonzero_psd(),
            ),
            (
                CertificateKind::ImagPartNsd,
                &self.im,
                self.im_class,
                self.im_class.is_nonzero_nsd(),
            ),
        ];
        candidates
            .into_iter()
            .filter(|c| c.3)
            .map(|(kind, spectrum, class, _)| Certificate {
                kind,
                witness_spectrum: spectrum.clone(),
                witness_class: class,
                nonzero_norm: self.norm,
            })
            .collect()
    }

    /// A nonzero nilpotent with a part `⪰ 0` (or `⪯ 0`) is a contradiction.
    fn semidefinite_part(&self, psd: bool) -> OracleOutcome {
        if !self.nilpotency.is_nilpotent() {
            return OracleOutcome::not_applicable("not nilpotent");
        }
        if self.is_zero {
            return OracleOutcome::new(Verdict::Pass, "T = 0".into(), Vec::new());
        }
        // A zero part is semidefinite in both directions.
        let hit = |class: DefinitenessClass| {
            class == DefinitenessClass::Zero
                || if psd {
                    class.is_nonzero_psd()
                } else {
                    class.is_nonzero_nsd()
                }
        };
        let sign = if psd { "⪰ 0" } else { "⪯ 0" };
        let witnesses = alloc::vec![self.re.min(), self.re.max(), self.im.min(), self.im.max()];
        if hit(self.re_class) || hit(self.im_class) {
            OracleOutcome::new(
                Verdict::Fail,
                format!(
                    "nonzero nilpotent with Re T {} and Im T {} (one is {sign})",
                    self.re_class.as_str(),
                    self.im_class.as_str()
                ),
                witnesses,
            )
        } else {
            OracleOutcome::new(Verdict::Pass, format!("neither Re T nor Im T is {sign}"), witnesses)
        }
    }

    fn opposite_signs(&self) -> OracleOutcome {
        if !self.nilpotency.is_nilpotent() {
            return OracleOutcome::not_applicable("not nilpotent");
        }
        if self.is_zero {
            return OracleOutcome::not_applicable("T = 0");
        }
        let witnesses = alloc::vec![self.re.min(), self.re.max(), self.im.min(), self.im.max()];
        let both = self.re_class == DefinitenessClass::Indefinite && self.im_class == DefinitenessClass::Indefinite;
        let detail = format!(
            "Re T eigenvalues span [{:.6}, {:.6}] ({}), Im T span [{:.6}, {:.6}] ({})",
            self.re.min(),
            self.re.max(),
            self.re_class.as_str(),
            self.im.min(),
            self.im.max(),
            self.im_class.as_str()
        );
        let verdict = if both { Verdict::Pass } else { Verdict::Fail };
        OracleOutcome::new(verdict, detail, witnesses)
    }

    fn small_dimension_symmetry(&self) -> OracleOutcome {
        if !(self.order == 2 || self.order == 3) {
            return OracleOutcome::not_applicable("order is not 2 or 3");
        }
        if !self.nilpotency.is_nilpotent() {
            return OracleOutcome::not_applicable("not nilpotent");
        }
        if self.is_zero {
            return OracleOutcome::not_applicable("T = 0");
        }
        let re_zero = self.re_symmetry.intersection_is_zero();
        let im_zero = self.im_symmetry.intersection_is_zero();
        let mut witnesses: Vec<f64> = self.re_symmetry.matched_pairs.clone();
        witnesses.extend(self.im_symmetry.matched_pairs.iter().copied());
        let detail = format!(
            "σ(A)∩σ(-A) ⊇ {:?}, σ(B)∩σ(-B) ⊇ {:?}",
            self.re_symmetry.matched_pairs, self.im_symmetry.matched_pairs
        );
        let verdict = if re_zero || im_zero {
            Verdict::Fail
        } else {
            Verdict::Pass
        };
        OracleOutcome::new(verdict, detail, witnesses)
    }

    fn dim4_zero_multiplicity(&self) -> OracleOutcome {
        if self.order != 4 {
            return OracleOutcome::not_applicable("order is not 4");
        }
        if !self.nilpotency.is_nilpotent() {
            return OracleOutcome::not_applicable("not nilpotent");
        }
        if self.is_zero {
            return OracleOutcome::new(Verdict::Pass, "T = 0 (vacuous)".into(), Vec::new());
        }
        let hypothesis = |spec: &SpectrumReport, sym: &SymmetryReport| {
            let mult = spec.zero_multiplicity(spec.tol);
            (sym.intersection_is_zero() && mult == 2, mult)
        };
        let (re_hyp, re_mult) = hypothesis(&self.re, &self.re_symmetry);
        let (im_hyp, im_mult) = hypothesis(&self.im, &self.im_symmetry);
        let detail = format!(
            "A: σ∩-σ={:?}, mult(0)={re_mult}; B: σ∩-σ={:?}, mult(0)={im_mult}",
            self.re_symmetry.matched_pairs, self.im_symmetry.matched_pairs
        );
        let verdict = if re_hyp || im_hyp { Verdict::Fail } else { Verdict::Pass };
        OracleOutcome::new(verdict, detail, alloc::vec![re_mult as f64, im_mult as f64])
    }

    fn two_by_two_disjoint(&self) -> OracleOutcome {
        if self.order != 2 {
            return OracleOutcome::not_applicable("order is not 2");
        }
        if !self.re_symmetry.intersection_is_empty {
            return OracleOutcome::not_applicable("σ(A)∩σ(-A) is not empty");
        }
        match self.nilpotency.index {
            Some(k) => OracleOutcome::new(
                Verdict::Fail,
                format!("σ(A)∩σ(-A) = ∅ yet T^{k} = 0"),
                self.re.eigenvalues.clone(),
            ),
            None => OracleOutcome::new(
                Verdict::Pass,
                "σ(A)∩σ(-A) = ∅ and T is not nilpotent".into(),
                self.re.eigenvalues.clone(),
            ),
        }
    }

    fn nilpotent_normal_iff_zero(&self, normality: NormalityCheck) -> OracleOutcome {
        if !self.nilpotency.is_nilpotent() {
            return OracleOutcome::not_applicable("not nilpotent");
        }
        let ok = normality.normal == self.is_zero;
        let detail = format!("normal = {}, zero = {}", normality.normal, self.is_zero);
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        OracleOutcome::new(verdict, detail, alloc::vec![normality.defect])
    }

    fn trace_vanishes(&self, tol: &Tolerances) -> OracleOutcome {
        if !self.nilpotency.is_nilpotent() {
            return OracleOutcome::not_applicable("not nilpotent");
        }
        let bound = self.order as f64 * tol.nilpotency * scale(self.norm);
        let size = self.trace.norm();
        let verdict = if size <= bound { Verdict::Pass } else { Verdict::Fail };
        OracleOutcome::new(
            verdict,
            format!("|tr T| = {size:e} (bound {bound:e})"),
            alloc::vec![size],
        )
    }
}

fn norm_power_identity(t: &ComplexMatrix, normality: NormalityCheck) -> OracleOutcome {
    if !normality.normal {
        return OracleOutcome::not_applicable("not normal");
    }
    let defect = norm_power_defect(t, 2);
    let norm = spectral_norm(t);
    let bound = 1e-8 * scale(norm * norm);
    let verdict = if defect <= bound { Verdict::Pass } else { Verdict::Fail };
    OracleOutcome::new(verdict, format!("|‖T²‖ - ‖T‖²| = {defect:e}"), alloc::vec![defect])
}

/// Returns the first certificate found, in the order Re ⪰ 0, Re ⪯ 0,
/// Im ⪰ 0, Im ⪯ 0. `None` does not mean `T` is nilpotent.
pub fn non_nilpotence_certificate(t: &ComplexMatrix, tol: &Tolerances) -> Result<Option<Certificate>, SpectralError> {
    Ok(Facts::spectral(t, tol)?.certificates().into_iter().next())
}

pub fn opposite_signs_check(t: &ComplexMatrix, tol: &Tolerances) -> Result<OracleOutcome, SpectralError> {
    Ok(Facts::gather(t, tol)?.opposite_signs())
}

pub fn small_dim_symmetry_oracle(t: &ComplexMatrix, tol: &Tolerances) -> Result<OracleOutcome, SpectralError> {
    Ok(Facts::gather(t, tol)?.small_dimension_symmetry())
}

pub fn dim4_multiplicity_oracle(t: &ComplexMatrix, tol: &Tolerances) -> Result<OracleOutcome, SpectralError> {
    Ok(Facts::gather(t, tol)?.dim4_zero_multiplicity())
}

/// Semidefinite-part oracle (`psd = true` for `⪰ 0`, `false` for `⪯ 0`).
pub fn semidefinite_part_oracle(
    t: &ComplexMatrix,
    psd: bool,
    tol: &Tolerances,
) -> Result<OracleOutcome, SpectralError> {
    Ok(Facts::gather(t, tol)?.semidefinite_part(psd))
}

/// For a Hermitian 2×2 `a` with `σ(a) ∩ σ(-a) = ∅`, checks that `a + iB` is
/// not nilpotent for every supplied `B`.
pub fn two_by_two_disjoint_oracle<I>(
    a: &ComplexMatrix,
    imaginary_parts: I,
    tol: &Tolerances,
) -> Result<OracleOutcome, SpectralError>
where
    I: IntoIterator<Item = ComplexMatrix>,
{
    if a.order() != 2 {
        return Ok(OracleOutcome::not_applicable("order is not 2"));
    }
    if a.hermitian_defect() > tol.hermitian * scale(a.frobenius_norm()) {
        return Ok(OracleOutcome::not_applicable("A is not Hermitian"));
    }
    let spectrum = part_spectrum(a, tol)?;
    let symmetry = spectrum.symmetry();
    if !symmetry.intersection_is_empty {
        return Ok(OracleOutcome::not_applicable("σ(A)∩σ(-A) is not empty"));
    }
    let mut samples = 0usize;
    let mut nilpotent = 0usize;
    for b in imaginary_parts {
        if b.order() != 2 || b.hermitian_defect() > tol.hermitian * scale(b.frobenius_norm()) {
            continue;
        }
        let t = ComplexMatrix::from_fn(2, |i, j| {
            let z = b.get(i, j);
            a.get(i, j) + Complex64::new(-z.im, z.re)
        })
        .expect("finite");
        samples += 1;
        if nilpotency_index(&t, tol.nilpotency).is_nilpotent() {
            nilpotent += 1;
        }
    }
    if samples == 0 {
        return Ok(OracleOutcome::not_applicable("no Hermitian 2x2 samples"));
    }
    let verdict = if nilpotent == 0 { Verdict::Pass } else { Verdict::Fail };
    Ok(OracleOutcome::new(
        verdict,
        format!("{nilpotent} of {samples} samples A + iB were nilpotent"),
        spectrum.eigenvalues,
    ))
}

/// [`two_by_two_disjoint_oracle`] over `batch` Hermitian samples drawn from
/// `generator` (switched to order 2).
pub fn two_by_two_disjoint_sampled(
    a: &ComplexMatrix,
    generator: &mut MatrixGenerator,
    batch: usize,
    tol: &Tolerances,
) -> Result<OracleOutcome, SpectralError> {
    generator.set_order(2).expect("order 2 is valid");
    let samples: Vec<ComplexMatrix> = (0..batch).map(|_| generator.hermitian()).collect();
    two_by_two_disjoint_oracle(a, samples, tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(rename_all = "snake_case"))]
pub enum TheoremId {
    SemidefinitePart,
    NegativeSemidefinitePart,
    OppositeSigns,
    SmallDimensionSymmetry,
    Dim4ZeroMultiplicity,
    TwoByTwoDisjoint,
    NilpotentNormalIffZero,
    TraceVanishes,
    NormPowerIdentity,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::SemidefinitePart => "semidefinite_part",
            Self::NegativeSemidefinitePart => "negative_semidefinite_part",
            Self::OppositeSigns => "opposite_signs",
            Self::SmallDimensionSymmetry => "small_dimension_symmetry",
            Self::Dim4ZeroMultiplicity => "dim4_zero_multiplicity",
            Self::TwoByTwoDisjoint => "two_by_two_disjoint",
            Self::NilpotentNormalIffZero => "nilpotent_normal_iff_zero",
            Self::TraceVanishes => "trace_vanishes",
            Self::NormPowerIdentity => "norm_power_identity",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub applicable: bool,
    pub outcome: OracleOutcome,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PartSummary {
    pub spectrum: SpectrumReport,
    pub definiteness: DefinitenessClass,
    pub symmetry: SymmetryReport,
}

/// Full verdict bundle for one matrix.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct AnalysisReport {
    pub order: usize,
    pub frobenius_norm: f64,
    pub is_zero: bool,
    pub trace: Complex64,
    pub real_part: PartSummary,
    pub imaginary_part: PartSummary,
    pub nilpotency: NilpotencyReport,
    pub normality: NormalityCheck,
    pub certificates: Vec<Certificate>,
    pub theorem_verdicts: Vec<TheoremVerdict>,
    /// A certificate and a nilpotency index together: impossible for exact
    /// matrices, so the tolerances are wrong for this input.
    pub inconsistent: bool,
    pub tolerances: Tolerances,
}

impl AnalysisReport {
    pub fn verdict(&self, id: TheoremId) -> Option<&TheoremVerdict> {
        self.theorem_verdicts.iter().find(|v| v.theorem == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremVerdict> {
        self.theorem_verdicts
            .iter()
            .filter(|v| v.outcome.verdict == Verdict::Fail)
    }
}

/// Runs every check on `t`.
pub fn analyze(t: &ComplexMatrix, tol: &Tolerances) -> Result<AnalysisReport, SpectralError> {
    let facts = Facts::gather(t, tol)?;
    let normality = is_normal(t, tol.normality);
    let certificates = facts.certificates();

    let outcomes = [
        (TheoremId::SemidefinitePart, facts.semidefinite_part(true)),
        (TheoremId::NegativeSemidefinitePart, facts.semidefinite_part(false)),
        (TheoremId::OppositeSigns, facts.opposite_signs()),
        (TheoremId::SmallDimensionSymmetry, facts.small_dimension_symmetry()),
        (TheoremId::Dim4ZeroMultiplicity, facts.dim4_zero_multiplicity()),
        (TheoremId::TwoByTwoDisjoint, facts.two_by_two_disjoint()),
        (
            TheoremId::NilpotentNormalIffZero,
            facts.nilpotent_normal_iff_zero(normality),
        ),
        (TheoremId::TraceVanishes, facts.trace_vanishes(tol)),
        (TheoremId::NormPowerIdentity, norm_power_identity(t, normality)),
    ];
    let theorem_verdicts = outcomes
        .into_iter()
        .map(|(theorem, outcome)| TheoremVerdict {
            theorem,
            applicable: outcome.verdict != Verdict::NotApplicable,
            outcome,
        })
        .collect();

    Ok(AnalysisReport {
        order: facts.order,
        frobenius_norm: facts.norm,
        is_zero: facts.is_zero,
        trace: facts.trace,
        inconsistent: !certificates.is_empty() && facts.nilpotency.is_nilpotent(),
        certificates,
        theorem_verdicts,
        real_part: PartSummary {
            spectrum: facts.re,
            definiteness: facts.re_class,
            symmetry: facts.re_symmetry,
        },
        imaginary_part: PartSummary {
            spectrum: facts.im,
            definiteness: facts.im_class,
            symmetry: facts.im_symmetry,
        },
        nilpotency: facts.nilpotency,
        normality,
        tolerances: *tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::GeneratorConfig;
    use crate::volterra::volterra_matrix;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn jordan2() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]).unwrap()
    }

    fn example_pp() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[
            [2.0, 2.0, -2.0, 0.0],
            [5.0, 1.0, -3.0, 0.0],
            [1.0, 5.0, -3.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ])
        .unwrap()
    }

    fn strict_upper4() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[
            [0.0, 1.0, 2.0, 4.0],
            [0.0, 0.0, 2.0, 1.0],
            [0.0, 0.0, 0.0, 5.0],
            [0.0, 0.0, 0.0, 0.0],
        ])
        .unwrap()
    }

    #[test]
    fn analyze_jordan2() {
        let r = analyze(&jordan2(), &tol()).unwrap();
        assert_eq!(r.nilpotency.index, Some(2));
        assert_eq!(r.real_part.definiteness, DefinitenessClass::Indefinite);
        assert!(r.certificates.is_empty());
        assert!(!r.inconsistent);
        assert_eq!(r.failures().count(), 0);
    }

    #[test]
    fn analyze_volterra16() {
        let r = analyze(&volterra_matrix(16).unwrap(), &tol()).unwrap();
        assert_eq!(r.certificates[0].kind, CertificateKind::RealPartPsd);
        assert_eq!(r.nilpotency.index, None);
        assert!(!r.inconsistent);
    }

    #[test]
    fn analyze_zero() {
        let r = analyze(&ComplexMatrix::zeros(3), &tol()).unwrap();
        assert!(r.is_zero);
        assert_eq!(r.real_part.definiteness, DefinitenessClass::Zero);
        assert_eq!(r.imaginary_part.definiteness, DefinitenessClass::Zero);
        assert!(r.normality.normal);
        assert_eq!(r.nilpotency.index, Some(1));
        assert!(r.certificates.is_empty());
        assert_eq!(r.failures().count(), 0);
    }

    #[test]
    fn certificate_examples() {
        let v = volterra_matrix(64).unwrap();
        let cert = non_nilpotence_certificate(&v, &tol()).unwrap().unwrap();
        assert_eq!(cert.kind, CertificateKind::RealPartPsd);
        assert!(cert.witness_spectrum.min() >= -1e-12);

        assert!(non_nilpotence_certificate(&jordan2(), &tol()).unwrap().is_none());

        let h = crate::generators::random_hermitian(&GeneratorConfig::new(5, 4)).unwrap();
        let t = ComplexMatrix::from_fn(4, |i, j| {
            let z = h.get(i, j);
            let id = if i == j { 1.0 } else { 0.0 };
            Complex64::new(id - z.im, z.re)
        })
        .unwrap();
        let cert = non_nilpotence_certificate(&t, &tol()).unwrap().unwrap();
        assert_eq!(cert.kind, CertificateKind::RealPartPsd);
        assert_eq!(cert.witness_class, DefinitenessClass::PositiveDefinite);
    }

    #[test]
    fn negative_parts_certify() {
        let t = volterra_matrix(8).unwrap().scale(Complex64::new(-1.0, 0.0)).unwrap();
        let cert = non_nilpotence_certificate(&t, &tol()).unwrap().unwrap();
        assert_eq!(cert.kind, CertificateKind::RealPartNsd);

        // i·V has Im part V's real part.
        let t = volterra_matrix(8).unwrap().scale(Complex64::new(0.0, 1.0)).unwrap();
        let cert = non_nilpotence_certificate(&t, &tol()).unwrap().unwrap();
        assert_eq!(cert.kind, CertificateKind::ImagPartPsd);
        let t = volterra_matrix(8).unwrap().scale(Complex64::new(0.0, -1.0)).unwrap();
        let cert = non_nilpotence_certificate(&t, &tol()).unwrap().unwrap();
        assert_eq!(cert.kind, CertificateKind::ImagPartNsd);
    }

    #[test]
    fn opposite_signs_examples() {
        let r = opposite_signs_check(&jordan2(), &tol()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!((r.witnesses[0] + 0.5).abs() < 1e-14 && (r.witnesses[1] - 0.5).abs() < 1e-14);

        let r = opposite_signs_check(&example_pp(), &tol()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!((r.witnesses[0] + 3.71).abs() < 0.01 && (r.witnesses[1] - 5.04).abs() < 0.01);

        let r = opposite_signs_check(&ComplexMatrix::identity(3), &tol()).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn small_dim_examples() {
        let r = small_dim_symmetry_oracle(&jordan2(), &tol()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.witnesses.iter().any(|&x| (x - 0.5).abs() < 1e-14));

        let chain = ComplexMatrix::from_real_rows(&[[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [0.0, 0.0, 0.0]]).unwrap();
        let r = small_dim_symmetry_oracle(&chain, &tol()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let half_root2 = 0.5f64.sqrt();
        assert!(r.witnesses.iter().any(|&x| (x - half_root2).abs() < 1e-12));

        let r = small_dim_symmetry_oracle(&ComplexMatrix::zeros(3), &tol()).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
        let r = small_dim_symmetry_oracle(&example_pp(), &tol()).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn small_dim_accepts_empty_intersection() {
        // Nilpotent, and Re T has spectrum {-1/2, -1/2, 1}: no ±λ pair at all.
        let t = ComplexMatrix::from_real_rows(&[[0.0, 1.0, 1.0], [0.0, 0.0, 1.0], [0.0, 0.0, 0.0]]).unwrap();
        let r = analyze(&t, &tol()).unwrap();
        assert!(r.real_part.symmetry.intersection_is_empty);
        assert_eq!(
            r.verdict(TheoremId::SmallDimensionSymmetry).unwrap().outcome.verdict,
            Verdict::Pass
        );
    }

    #[test]
    fn small_dim_flags_violation() {
        // Pretend Re T had spectrum {0, 1}, whose intersection with its
        // negation is exactly {0}.
        let mut facts = Facts::gather(&jordan2(), &tol()).unwrap();
        facts.re_symmetry = SpectrumReport::from_eigenvalues(alloc::vec![0.0, 1.0], 1e-8).symmetry();
        assert_eq!(facts.small_dimension_symmetry().verdict, Verdict::Fail);
    }

    #[test]
    fn dim4_examples() {
        assert_eq!(
            dim4_multiplicity_oracle(&example_pp(), &tol()).unwrap().verdict,
            Verdict::Pass
        );
        assert_eq!(
            dim4_multiplicity_oracle(&strict_upper4(), &tol()).unwrap().verdict,
            Verdict::Pass
        );
        assert_eq!(
            dim4_multiplicity_oracle(&ComplexMatrix::zeros(4), &tol())
                .unwrap()
                .verdict,
            Verdict::Pass
        );
        assert_eq!(
            dim4_multiplicity_oracle(&jordan2(), &tol()).unwrap().verdict,
            Verdict::NotApplicable
        );

        let r = dim4_multiplicity_oracle(&example_pp(), &tol()).unwrap();
        assert_eq!(r.witnesses[0], 1.0);
    }

    #[test]
    fn two_by_two_examples() {
        let mut g = MatrixGenerator::new(&GeneratorConfig::new(100, 2)).unwrap();
        let a = ComplexMatrix::real_diagonal(&[1.0, 2.0]).unwrap();
        let r = two_by_two_disjoint_sampled(&a, &mut g, 100, &tol()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);

        let a = ComplexMatrix::real_diagonal(&[1.0, -1.0]).unwrap();
        assert_eq!(
            two_by_two_disjoint_sampled(&a, &mut g, 10, &tol()).unwrap().verdict,
            Verdict::NotApplicable
        );
        let a = ComplexMatrix::from_real_rows(&[[0.0, 0.5], [0.5, 0.0]]).unwrap();
        assert_eq!(
            two_by_two_disjoint_sampled(&a, &mut g, 10, &tol()).unwrap().verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn semidefinite_oracle_fails_on_bad_tolerance() {
        // With an absurd spectral tolerance the indefinite parts of jordan2
        // read as zero; the oracle must then flag the contradiction.
        let loose = Tolerances::with_spectral(10.0);
        let r = semidefinite_part_oracle(&jordan2(), true, &loose).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn inconsistent_flag_when_tolerances_collide() {
        // A non-nilpotent matrix declared nilpotent by a huge threshold while
        // its real part is PSD.
        let t = volterra_matrix(4).unwrap();
        let loose = Tolerances {
            nilpotency: 10.0,
            ..Tolerances::default()
        };
        let r = analyze(&t, &loose).unwrap();
        assert!(r.inconsistent);
    }
}
