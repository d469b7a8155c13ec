//! Closed forms `a·mn + b·m` for nanotube indices.
//!
//! The published AZI coefficients are kept verbatim as data and compared
//! against the brute-force oracle: the edgewise sum over the constructed
//! graph. Fitting solves the 2×2 system exactly and then checks every
//! remaining sample, so a wrong ansatz is reported instead of hidden.

use core::fmt;
use core::ops::RangeInclusive;

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::vec::Vec;

use crate::index::{edgewise, Index, IndexError};
use crate::nanotube::{build_nanotube, InvalidSpec, NanotubeKind, NanotubeSpec};
use crate::rational::{Rational, RationalError};

/// Where a closed form came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    /// Coefficients as stated in the theorem.
    PaperStated,
    /// Coefficients from the last line of the theorem's proof.
    PaperProof,
    /// Coefficients solved from oracle samples.
    OracleFitted,
}

impl Provenance {
    /// Snake-case name used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            Provenance::PaperStated => "paper_stated",
            Provenance::PaperProof => "paper_proof",
            Provenance::OracleFitted => "oracle_fitted",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Errors from evaluating, fitting or verifying closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ClosedFormError {
    /// `(m, n)` outside `m >= 2`, `n >= 1`.
    #[error(transparent)]
    InvalidSpec(#[from] InvalidSpec),
    /// A grid range with `lo > hi`.
    #[error("empty range {lo}:{hi}")]
    EmptyRange {
        /// Lower bound.
        lo: u32,
        /// Upper bound.
        hi: u32,
    },
    /// No two samples have independent `(mn, m)` rows.
    #[error("samples do not determine both coefficients")]
    SingularSystem,
    /// The solved form misses a sample, so the data is not of the form
    /// `a·mn + b·m` over the rationals.
    #[error("sample ({m}, {n}) has value {expected} but the fitted form gives {fitted}")]
    InconsistentSamples {
        /// Sample `m`.
        m: u32,
        /// Sample `n`.
        n: u32,
        /// Oracle value at the sample.
        expected: Rational,
        /// Fitted form's value at the sample.
        fitted: Rational,
    },
    /// The oracle failed.
    #[error(transparent)]
    Index(#[from] IndexError),
    /// Exact arithmetic overflowed.
    #[error(transparent)]
    Arithmetic(#[from] RationalError),
}

/// `a·mn + b·m` for one index of one nanotube kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedForm {
    /// Coefficient of `m·n`.
    pub a: Rational,
    /// Coefficient of `m`.
    pub b: Rational,
    /// Nanotube kind.
    pub kind: NanotubeKind,
    /// Index the form describes.
    pub index: Index,
    /// Origin of the coefficients.
    pub provenance: Provenance,
}

impl ClosedForm {
    /// Exact `a·m·n + b·m` on the valid domain.
    pub fn evaluate(&self, m: u32, n: u32) -> Result<Rational, ClosedFormError> {
        NanotubeSpec::new(self.kind, m, n)?;
        let (m, n) = (m as i128, n as i128);
        Ok(self
            .a
            .checked_mul_int(m * n)?
            .checked_add(self.b.checked_mul_int(m)?)?)
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}) [{}] = ({})·mn + ({})·m",
            self.index, self.kind, self.provenance, self.a, self.b
        )
    }
}

fn q(num: i128, den: i128) -> Rational {
    Rational::new(num, den).expect("nonzero literal denominator")
}

/// The four published AZI forms, verbatim, including the ones the oracle
/// contradicts. Order: armchair stated, armchair proof, zigzag stated,
/// zigzag proof.
pub fn paper_forms() -> Vec<ClosedForm> {
    let a = q(2187, 64);
    let form = |kind, b, provenance| ClosedForm {
        a,
        b,
        kind,
        index: Index::Azi,
        provenance,
    };
    alloc::vec![
        form(NanotubeKind::Armchair, q(-573, 64), Provenance::PaperStated),
        form(NanotubeKind::Armchair, q(-807, 32), Provenance::PaperProof),
        form(NanotubeKind::Zigzag, q(-597, 64), Provenance::PaperStated),
        form(NanotubeKind::Zigzag, q(-434, 64), Provenance::PaperProof),
    ]
}

/// Brute-force value: build the graph and sum the index edge by edge. For
/// float-only indices the exact binary value of the `f64` sum is returned.
pub fn oracle_value(spec: &NanotubeSpec, index: Index) -> Result<Rational, ClosedFormError> {
    let value = edgewise(&build_nanotube(spec), &index)?;
    match value.exact {
        Some(q) => Ok(q),
        None => Ok(Rational::from_f64_exact(value.approx)?),
    }
}

/// One sample `(m, n, value)` for [`fit_points`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sample {
    /// Hexagons around.
    pub m: u32,
    /// Rows.
    pub n: u32,
    /// Index value at `(m, n)`.
    pub value: Rational,
}

/// Solves `value = a·mn + b·m` exactly from the first independent pair of
/// samples, then requires every sample to satisfy the result.
pub fn fit_points(
    kind: NanotubeKind,
    index: Index,
    samples: &[Sample],
) -> Result<ClosedForm, ClosedFormError> {
    for s in samples {
        NanotubeSpec::new(kind, s.m, s.n)?;
    }
    let row = |s: &Sample| (s.m as i128 * s.n as i128, s.m as i128);
    let mut solution = None;
    'outer: for (i, si) in samples.iter().enumerate() {
        for sj in &samples[i + 1..] {
            let ((xi, yi), (xj, yj)) = (row(si), row(sj));
            let det = xi * yj - xj * yi;
            if det != 0 {
                let det = Rational::from_integer(det);
                let a = si
                    .value
                    .checked_mul_int(yj)?
                    .checked_sub(sj.value.checked_mul_int(yi)?)?
                    .checked_div(det)?;
                let b = sj
                    .value
                    .checked_mul_int(xi)?
                    .checked_sub(si.value.checked_mul_int(xj)?)?
                    .checked_div(det)?;
                solution = Some((a, b));
                break 'outer;
            }
        }
    }
    let (a, b) = solution.ok_or(ClosedFormError::SingularSystem)?;
    let form = ClosedForm {
        a,
        b,
        kind,
        index,
        provenance: Provenance::OracleFitted,
    };
    for s in samples {
        let fitted = form.evaluate(s.m, s.n)?;
        if fitted != s.value {
            return Err(ClosedFormError::InconsistentSamples {
                m: s.m,
                n: s.n,
                expected: s.value,
                fitted,
            });
        }
    }
    Ok(form)
}

/// Fits `a·mn + b·m` to the oracle at the given `(m, n)` samples.
pub fn fit_closed_form(
    kind: NanotubeKind,
    index: Index,
    samples: &[(u32, u32)],
) -> Result<ClosedForm, ClosedFormError> {
    let points = samples
        .iter()
        .map(|&(m, n)| {
            let spec = NanotubeSpec::new(kind, m, n)?;
            Ok(Sample {
                m,
                n,
                value: oracle_value(&spec, index)?,
            })
        })
        .collect::<Result<Vec<_>, ClosedFormError>>()?;
    fit_points(kind, index, &points)
}

/// Sample grid used to fit the reference forms in [`verify_paper_forms`]:
/// two values of each parameter, over-determined by one point.
pub const DEFAULT_FIT_SAMPLES: [(u32, u32); 4] = [(2, 1), (2, 2), (3, 1), (3, 2)];

/// Outcome of comparing a form with the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Every difference is zero.
    Consistent,
    /// Some difference is nonzero.
    Inconsistent,
}

impl Verdict {
    /// Snake-case name used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Consistent => "consistent",
            Verdict::Inconsistent => "inconsistent",
        }
    }
}

/// Comparison at one grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridPoint {
    /// Hexagons around.
    pub m: u32,
    /// Rows.
    pub n: u32,
    /// Value of the form under test.
    pub paper_value: Rational,
    /// Brute-force value.
    pub oracle_value: Rational,
    /// `paper_value - oracle_value`.
    pub difference: Rational,
}

/// All grid comparisons for one form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormReport {
    /// The form under test.
    pub form: ClosedForm,
    /// Points in `(m, n)` order.
    pub points: Vec<GridPoint>,
    /// `Consistent` iff every difference is zero.
    pub verdict: Verdict,
}

/// Per-form comparisons of closed forms against the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyReport {
    /// Forms grouped by kind, in [`paper_forms`] order followed by the fitted
    /// form.
    pub forms: Vec<FormReport>,
}

impl DiscrepancyReport {
    /// `true` iff every [`Provenance::PaperStated`] form is consistent.
    pub fn paper_stated_consistent(&self) -> bool {
        self.forms
            .iter()
            .filter(|f| f.form.provenance == Provenance::PaperStated)
            .all(|f| f.verdict == Verdict::Consistent)
    }
}

/// Oracle values on the grid for one `(kind, index)`, in `(m, n)` order.
type OracleGrid = Vec<(u32, u32, Rational)>;

fn check_range(r: &RangeInclusive<u32>) -> Result<(), ClosedFormError> {
    if r.is_empty() {
        Err(ClosedFormError::EmptyRange {
            lo: *r.start(),
            hi: *r.end(),
        })
    } else {
        Ok(())
    }
}

/// Compares `forms` with the oracle at every grid point. Forms of the same
/// kind share one oracle evaluation per point.
pub fn verify_forms(
    forms: &[ClosedForm],
    m_range: RangeInclusive<u32>,
    n_range: RangeInclusive<u32>,
) -> Result<DiscrepancyReport, ClosedFormError> {
    check_range(&m_range)?;
    check_range(&n_range)?;
    // Validate the domain once, at the corner.
    for kind in NanotubeKind::ALL {
        NanotubeSpec::new(kind, *m_range.start(), *n_range.start())?;
    }
    let mut cache: BTreeMap<(NanotubeKind, Index), OracleGrid> = BTreeMap::new();
    let mut reports = Vec::with_capacity(forms.len());
    for form in forms {
        let key = (form.kind, form.index);
        if let Entry::Vacant(slot) = cache.entry(key) {
            let mut values = Vec::new();
            for m in m_range.clone() {
                for n in n_range.clone() {
                    let spec = NanotubeSpec::new(form.kind, m, n)?;
                    values.push((m, n, oracle_value(&spec, form.index)?));
                }
            }
            slot.insert(values);
        }
        let points = cache[&key]
            .iter()
            .map(|&(m, n, oracle_value)| {
                let paper_value = form.evaluate(m, n)?;
                Ok(GridPoint {
                    m,
                    n,
                    paper_value,
                    oracle_value,
                    difference: paper_value.checked_sub(oracle_value)?,
                })
            })
            .collect::<Result<Vec<_>, ClosedFormError>>()?;
        let verdict = if points.iter().all(|p| p.difference.is_zero()) {
            Verdict::Consistent
        } else {
            Verdict::Inconsistent
        };
        reports.push(FormReport {
            form: *form,
            points,
            verdict,
        });
    }
    Ok(DiscrepancyReport { forms: reports })
}

/// Checks every published AZI form of the requested kinds, plus a form
/// fitted to the oracle at [`DEFAULT_FIT_SAMPLES`], over the grid.
pub fn verify_paper_forms(
    kinds: &[NanotubeKind],
    m_range: RangeInclusive<u32>,
    n_range: RangeInclusive<u32>,
) -> Result<DiscrepancyReport, ClosedFormError> {
    let published = paper_forms();
    let mut forms = Vec::new();
    for &kind in NanotubeKind::ALL.iter().filter(|k| kinds.contains(k)) {
        forms.extend(published.iter().filter(|f| f.kind == kind));
        forms.push(fit_closed_form(kind, Index::Azi, &DEFAULT_FIT_SAMPLES)?);
    }
    verify_forms(&forms, m_range, n_range)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_coefficients() {
        let forms = paper_forms();
        assert_eq!(forms.len(), 4);
        assert!(forms.iter().all(|f| f.a == q(2187, 64)));
        let b: Vec<_> = forms.iter().map(|f| f.b).collect();
        assert_eq!(b, [q(-573, 64), q(-807, 32), q(-597, 64), q(-217, 32)]);
    }

    #[test]
    fn evaluate_stated_armchair() {
        let f = paper_forms()[0];
        assert_eq!(f.evaluate(2, 1), Ok(q(807, 16)));
        assert_eq!(
            f.evaluate(1, 1),
            Err(ClosedFormError::InvalidSpec(InvalidSpec::MTooSmall(1)))
        );
        assert_eq!(
            f.evaluate(2, 0),
            Err(ClosedFormError::InvalidSpec(InvalidSpec::NTooSmall(0)))
        );
    }

    #[test]
    fn singular_samples() {
        let s = |m, n| Sample {
            m,
            n,
            value: Rational::ONE,
        };
        let err = fit_points(NanotubeKind::Zigzag, Index::Azi, &[s(2, 1), s(3, 1)]);
        assert_eq!(err, Err(ClosedFormError::SingularSystem));
        let err = fit_points(NanotubeKind::Zigzag, Index::Azi, &[s(2, 3)]);
        assert_eq!(err, Err(ClosedFormError::SingularSystem));
    }

    #[test]
    fn over_determined_mismatch() {
        // value = mn fits (2,1),(2,2) but not a perturbed (3,1).
        let s = |m: u32, n: u32, extra: i128| Sample {
            m,
            n,
            value: Rational::from_integer((m * n) as i128 + extra),
        };
        let err = fit_points(
            NanotubeKind::Armchair,
            Index::Azi,
            &[s(2, 1, 0), s(2, 2, 0), s(3, 1, 1)],
        );
        assert!(matches!(
            err,
            Err(ClosedFormError::InconsistentSamples { m: 3, n: 1, .. })
        ));
    }

    #[test]
    #[allow(clippy::reversed_empty_ranges)]
    fn empty_range_rejected() {
        let err = verify_paper_forms(&NanotubeKind::ALL, 12..=2, 1..=12);
        assert_eq!(err, Err(ClosedFormError::EmptyRange { lo: 12, hi: 2 }));
    }
}
