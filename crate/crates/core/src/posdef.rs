//! Exact sign decisions for homogeneous bivariate polynomials.
//!
//! A homogeneous `p` of even degree `k` satisfies `p > 0` away from the
//! origin iff `p(1, t) > 0` for all real `t` and `p(0, 1) > 0`: every nonzero
//! direction is a positive multiple of `(1, t)` or `(0, 1)` up to sign, and
//! even degree makes `p` invariant under negating the direction.  The
//! univariate questions are settled by Sturm chains.  Odd-degree nonzero
//! polynomials are never sign-semidefinite (`p(-v) = -p(v)`).

use crate::error::{Error, Result};
use crate::poly::BivariatePolynomial;
use crate::rational::{format_rational, Rational};
use crate::sturm::{negative_point, sign_region_samples, sturm_positivity, PositivityMode, SturmReport};
use crate::unipoly::UniPoly;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Which sign condition is being decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignMode {
    /// `p(v) > 0` for every `v != 0`.
    PositiveDefinite,
    /// `p(v) >= 0` for every `v`.
    Nonnegative,
}

/// Self-contained evidence for one homogeneous sign decision.
///
/// The decision can be reproduced from this record alone: the chart report
/// carries the Sturm chain for `p(1, t)`, `axis_value` is `p(0, 1)`, and
/// `witness`, when present, is a point where the claimed condition fails
/// strictly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneousSignEvidence {
    #[serde(with = "crate::report::serde_poly")]
    pub target: BivariatePolynomial,
    pub mode: SignMode,
    pub verdict: bool,
    pub degree: Option<u32>,
    /// Whole-line Sturm report for the slope chart `p(1, t)`; absent only
    /// for the zero polynomial.
    pub chart: Option<SturmReport>,
    #[serde(with = "crate::report::serde_rational")]
    pub axis_value: Rational,
    /// A point where `p < 0`, when the failure is strict.
    #[serde(with = "crate::report::serde_opt_point", default)]
    pub witness: Option<(Rational, Rational)>,
}

impl HomogeneousSignEvidence {
    /// Re-derive the verdict from the target polynomial and confirm every
    /// stored component: chart chain structure and count, axis value, witness
    /// sign, and the verdict itself.
    pub fn reverify(&self) -> bool {
        let fresh = match decide(&self.target, self.mode) {
            Ok((_, e)) => e,
            Err(_) => return false,
        };
        if fresh.verdict != self.verdict || fresh.degree != self.degree {
            return false;
        }
        if fresh.axis_value != self.axis_value {
            return false;
        }
        match (&self.chart, &fresh.chart) {
            (None, None) => {}
            (Some(stored), Some(recomputed)) => {
                if !stored.recheck() || stored.chain[0] != recomputed.chain[0] {
                    return false;
                }
                if stored.real_root_count != recomputed.real_root_count {
                    return false;
                }
            }
            _ => return false,
        }
        if let Some((x, y)) = &self.witness {
            if self.target.evaluate(x, y) >= Rational::zero() {
                return false;
            }
        }
        true
    }
}

/// Decide `p > 0` on the punctured plane.  Rejects the zero polynomial and
/// non-homogeneous input.
pub fn homogeneous_positive_definite(
    p: &BivariatePolynomial,
) -> Result<(bool, HomogeneousSignEvidence)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial(
            "positive definiteness of the zero polynomial is ill-posed".into(),
        ));
    }
    decide(p, SignMode::PositiveDefinite)
}

/// Decide `p >= 0` on the plane.  The zero polynomial is nonnegative;
/// non-homogeneous input is rejected.
pub fn homogeneous_nonnegative(
    p: &BivariatePolynomial,
) -> Result<(bool, HomogeneousSignEvidence)> {
    decide(p, SignMode::Nonnegative)
}

/// A point where the homogeneous `p` is strictly negative, if any exists.
/// Deterministic: chart failures are reported before axis failures, and the
/// chart witness is the leftmost negative sign-region sample.
pub fn negative_direction(p: &BivariatePolynomial) -> Result<Option<(Rational, Rational)>> {
    let (verdict, evidence) = decide(p, SignMode::Nonnegative)?;
    debug_assert!(verdict || evidence.witness.is_some());
    Ok(evidence.witness)
}

fn decide(p: &BivariatePolynomial, mode: SignMode) -> Result<(bool, HomogeneousSignEvidence)> {
    if p.is_zero() {
        let verdict = match mode {
            SignMode::PositiveDefinite => false,
            SignMode::Nonnegative => true,
        };
        return Ok((
            verdict,
            HomogeneousSignEvidence {
                target: p.clone(),
                mode,
                verdict,
                degree: None,
                chart: None,
                axis_value: Rational::zero(),
                witness: None,
            },
        ));
    }
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous(format!(
            "sign decision requires a homogeneous polynomial, got `{p}`"
        )));
    }
    let k = p.degree().unwrap();
    let axis_value = p.coefficient(0, k);
    let u = UniPoly::new(p.restrict_x1());
    debug_assert!(!u.is_zero());

    if k % 2 == 1 {
        // Odd degree: p(-v) = -p(v), so p takes both signs unless it is zero.
        let chart = SturmReport::whole_line(&u);
        let witness = odd_degree_negative_witness(p, &u);
        let evidence = HomogeneousSignEvidence {
            target: p.clone(),
            mode,
            verdict: false,
            degree: Some(k),
            chart: Some(chart),
            axis_value,
            witness,
        };
        return Ok((false, evidence));
    }

    let (chart_ok, chart) = match mode {
        SignMode::PositiveDefinite => sturm_positivity(&u, PositivityMode::PositiveOnR)?,
        SignMode::Nonnegative => sturm_positivity(&u, PositivityMode::NonnegativeOnR)?,
    };
    let axis_ok = match mode {
        SignMode::PositiveDefinite => axis_value > Rational::zero(),
        SignMode::Nonnegative => axis_value >= Rational::zero(),
    };
    let verdict = chart_ok && axis_ok;
    let witness = if verdict {
        None
    } else if let Some(t) = negative_point(&u) {
        Some((Rational::one(), t))
    } else if axis_value < Rational::zero() {
        Some((Rational::zero(), Rational::one()))
    } else {
        // Failure by vanishing only (semidefinite): no strictly negative point.
        None
    };
    let evidence = HomogeneousSignEvidence {
        target: p.clone(),
        mode,
        verdict,
        degree: Some(k),
        chart: Some(chart),
        axis_value,
        witness,
    };
    Ok((verdict, evidence))
}

fn odd_degree_negative_witness(
    p: &BivariatePolynomial,
    u: &UniPoly,
) -> Option<(Rational, Rational)> {
    for t in sign_region_samples(u) {
        let v = u.evaluate(&t);
        if v < Rational::zero() {
            return Some((Rational::one(), t));
        }
        if v > Rational::zero() {
            return Some((-Rational::one(), -t));
        }
    }
    let k = p.degree()?;
    let axis = p.coefficient(0, k);
    if axis < Rational::zero() {
        Some((Rational::zero(), Rational::one()))
    } else if axis > Rational::zero() {
        Some((Rational::zero(), -Rational::one()))
    } else {
        None
    }
}

/// Outcome of the sum-of-parts analysis in [`sum_of_parts_positive_definite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SumVerdict {
    /// Every part is nonnegative and the parts share no zero direction:
    /// the sum is positive definite.
    Definite,
    /// Every part is nonnegative but all vanish along a common nonzero
    /// direction, so the sum vanishes there: definitely not positive definite.
    VanishesOffOrigin,
    /// Some part takes negative values; this analysis cannot settle the sum.
    Indeterminate,
}

/// Why the sum analysis concluded as it did.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PartsConclusion {
    AllNonnegativeNoCommonZero,
    CommonVanishing {
        /// Whole-line report for the gcd of the slope charts; a positive
        /// root count locates shared zero directions of the form `(1, t)`.
        gcd_report: SturmReport,
        /// True when every part also vanishes along `(0, 1)`.
        axis_common: bool,
    },
    PartNegative {
        index: usize,
    },
}

/// Evidence for the sum-of-parts positive definiteness analysis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartsEvidence {
    pub parts: Vec<HomogeneousSignEvidence>,
    pub conclusion: PartsConclusion,
}

impl PartsEvidence {
    pub fn reverify(&self) -> bool {
        if !self.parts.iter().all(HomogeneousSignEvidence::reverify) {
            return false;
        }
        let targets: Vec<_> = self.parts.iter().map(|e| e.target.clone()).collect();
        match sum_of_parts_positive_definite(&targets) {
            Ok((_, fresh)) => fresh.conclusion == self.conclusion,
            Err(_) => false,
        }
    }
}

/// Sufficient exact analysis for positive definiteness of a sum of
/// homogeneous polynomials (typically the homogeneous parts of one
/// polynomial).  The `Definite` and `VanishesOffOrigin` verdicts are both
/// exact; only `Indeterminate` leaves the question open.
pub fn sum_of_parts_positive_definite(
    parts: &[BivariatePolynomial],
) -> Result<(SumVerdict, PartsEvidence)> {
    let mut evidence = Vec::with_capacity(parts.len());
    for (index, part) in parts.iter().enumerate() {
        let (ok, e) = homogeneous_nonnegative(part)?;
        evidence.push(e);
        if !ok {
            return Ok((
                SumVerdict::Indeterminate,
                PartsEvidence {
                    parts: evidence,
                    conclusion: PartsConclusion::PartNegative { index },
                },
            ));
        }
    }
    if parts.is_empty() || parts.iter().all(BivariatePolynomial::is_zero) {
        // An empty (or all-zero) sum vanishes everywhere.
        let gcd_report = SturmReport::whole_line(&UniPoly::zero());
        return Ok((
            SumVerdict::VanishesOffOrigin,
            PartsEvidence {
                parts: evidence,
                conclusion: PartsConclusion::CommonVanishing {
                    gcd_report,
                    axis_common: true,
                },
            },
        ));
    }
    let mut gcd = UniPoly::zero();
    let mut axis_common = true;
    for (part, e) in parts.iter().zip(&evidence) {
        if part.is_zero() {
            continue;
        }
        let u = UniPoly::new(part.restrict_x1());
        gcd = if gcd.is_zero() { u } else { gcd.gcd(&u) };
        if !e.axis_value.is_zero() {
            axis_common = false;
        }
    }
    let gcd_report = SturmReport::whole_line(&gcd);
    if gcd_report.real_root_count == 0 && !axis_common {
        Ok((
            SumVerdict::Definite,
            PartsEvidence {
                parts: evidence,
                conclusion: PartsConclusion::AllNonnegativeNoCommonZero,
            },
        ))
    } else {
        Ok((
            SumVerdict::VanishesOffOrigin,
            PartsEvidence {
                parts: evidence,
                conclusion: PartsConclusion::CommonVanishing {
                    gcd_report,
                    axis_common,
                },
            },
        ))
    }
}

/// Format a witness point for report text.
pub fn format_point(p: &(Rational, Rational)) -> String {
    format!("({}, {})", format_rational(&p.0), format_rational(&p.1))
}
