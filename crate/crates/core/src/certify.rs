//! Exact verification of Lyapunov certificates.
//!
//! Three routes are provided.  The rational route runs five exact checks
//! tailored to certificates of the shape `W = N/D` with homogeneous
//! numerator and denominator: positivity of both, tangency of the rotation
//! summand, the cleared-denominator decrease identity against the descent
//! summand, nonvanishing of the gradient away from the origin, and a radial
//! growth bound.  The polynomial routes decide global (homogeneous) and
//! local (lowest-order) certificates.  Every pass verdict carries evidence
//! that re-verifies without recomputing the original inputs: residual
//! polynomials that canonicalize to zero, or Sturm-chain sign evidence.

use crate::poly::BivariatePolynomial;
use crate::posdef::{
    homogeneous_nonnegative, homogeneous_positive_definite, sum_of_parts_positive_definite,
    HomogeneousSignEvidence, PartsConclusion, PartsEvidence, SumVerdict,
};
use crate::ratfunc::RationalFunction;
use crate::rational::{rat, rat_int, Rational};
use crate::error::{Error, Result};
use crate::systems::DecomposedField;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Three-valued check outcome.  `Inconclusive` marks degenerate cases that
/// are reported rather than guessed (e.g. a semidefinite lowest-order part).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        };
        write!(f, "{s}")
    }
}

/// Scope of a polynomial certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Certificate and decrease conditions on the whole plane.
    GlobalHomogeneous,
    /// Conditions near the origin, decided by lowest-order homogeneous parts.
    Local,
}

/// A candidate certificate of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Polynomial(BivariatePolynomial),
    Rational(RationalFunction),
}

impl Certificate {
    /// Parses either a bare polynomial or a `(num) / (den)` quotient.
    pub fn parse(text: &str) -> Result<Self> {
        let rf = RationalFunction::parse(text)?;
        if rf.den == BivariatePolynomial::one() {
            Ok(Certificate::Polynomial(rf.num))
        } else {
            Ok(Certificate::Rational(rf))
        }
    }

    pub fn render(&self) -> String {
        match self {
            Certificate::Polynomial(p) => p.render(),
            Certificate::Rational(w) => w.render(),
        }
    }

    pub fn as_rational(&self) -> RationalFunction {
        match self {
            Certificate::Polynomial(p) => RationalFunction::from_polynomial(p.clone()),
            Certificate::Rational(w) => w.clone(),
        }
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Result<Rational> {
        match self {
            Certificate::Polynomial(p) => Ok(p.evaluate(x, y)),
            Certificate::Rational(w) => w.evaluate(x, y),
        }
    }

    pub fn evaluate_f64(&self, x: f64, y: f64) -> f64 {
        match self {
            Certificate::Polynomial(p) => p.evaluate_f64(x, y),
            Certificate::Rational(w) => w.evaluate_f64(x, y),
        }
    }

    /// Derivative along the full field, as a rational function.
    pub fn lie_derivative(&self, field: &DecomposedField) -> RationalFunction {
        let (fx, fy) = field.total();
        self.as_rational().lie_derivative(&fx, &fy)
    }
}

/// One piece of machine-recheckable evidence inside a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum EvidenceItem {
    /// An identity residual; the identity holds iff the polynomial is zero.
    Residual {
        label: String,
        #[serde(with = "crate::report::serde_poly")]
        poly: BivariatePolynomial,
    },
    /// A homogeneous sign decision with its Sturm evidence.
    Sign {
        label: String,
        evidence: HomogeneousSignEvidence,
    },
    /// A sum-of-parts positive definiteness analysis.
    PartsSign {
        label: String,
        evidence: PartsEvidence,
    },
    /// A concrete point demonstrating a strict violation.
    Witness {
        label: String,
        #[serde(with = "crate::report::serde_opt_point")]
        point: Option<(Rational, Rational)>,
        #[serde(with = "crate::report::serde_rational")]
        value: Rational,
    },
    Note {
        text: String,
    },
}

impl EvidenceItem {
    /// Whether this item supports a pass verdict on its own terms.
    fn supports_pass(&self) -> bool {
        match self {
            EvidenceItem::Residual { poly, .. } => poly.is_zero(),
            EvidenceItem::Sign { evidence, .. } => evidence.verdict && evidence.reverify(),
            EvidenceItem::PartsSign { evidence, .. } => {
                matches!(
                    evidence.conclusion,
                    PartsConclusion::AllNonnegativeNoCommonZero
                ) && evidence.reverify()
            }
            EvidenceItem::Witness { .. } => false,
            EvidenceItem::Note { .. } => true,
        }
    }
}

/// A named check with its verdict and evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub verdict: Verdict,
    pub items: Vec<EvidenceItem>,
}

/// Full verification report for one certificate against one system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub system: String,
    pub certificate: String,
    pub route: String,
    pub overall: Verdict,
    pub checks: Vec<CheckOutcome>,
}

fn combine(checks: &[CheckOutcome]) -> Verdict {
    if checks.iter().any(|c| c.verdict == Verdict::Fail) {
        Verdict::Fail
    } else if checks.iter().any(|c| c.verdict == Verdict::Inconclusive) {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    }
}

impl CertificateReport {
    /// Re-derive the overall verdict and re-verify every passing check from
    /// its stored evidence alone.
    pub fn reverify(&self) -> bool {
        if combine(&self.checks) != self.overall {
            return false;
        }
        self.checks
            .iter()
            .filter(|c| c.verdict == Verdict::Pass)
            .all(|c| c.items.iter().all(EvidenceItem::supports_pass))
    }
}

fn circle() -> BivariatePolynomial {
    BivariatePolynomial::from_terms([(2, 0, rat_int(1)), (0, 2, rat_int(1))])
}

/// A Sign evidence item for `p > 0` off the origin, degrading to a failing
/// note when the decider rejects the input (zero or non-homogeneous).
fn pd_item(label: &str, p: &BivariatePolynomial) -> (bool, EvidenceItem) {
    match homogeneous_positive_definite(p) {
        Ok((ok, evidence)) => (
            ok,
            EvidenceItem::Sign {
                label: label.to_string(),
                evidence,
            },
        ),
        Err(err) => (
            false,
            EvidenceItem::Note {
                text: format!("{label}: {err}"),
            },
        ),
    }
}

fn nonneg_item(label: &str, p: &BivariatePolynomial) -> (bool, EvidenceItem) {
    match homogeneous_nonnegative(p) {
        Ok((ok, evidence)) => (
            ok,
            EvidenceItem::Sign {
                label: label.to_string(),
                evidence,
            },
        ),
        Err(err) => (
            false,
            EvidenceItem::Note {
                text: format!("{label}: {err}"),
            },
        ),
    }
}

fn verdict_of(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

/// Five exact checks for a rational certificate `W = N/D` against a
/// decomposed field.
///
/// 1. positivity: `N` and `D` homogeneous positive definite (`D` first);
/// 2. tangency: the derivative along the rotation summand is the zero
///    function;
/// 3. decrease identity: with `(a, b)` the gradient numerators of `W` over
///    `D^2`, the derivative along the descent summand satisfies
///    `<grad W, descent> * (x^2+y^2)^2 + (a^2+b^2)(x^2+y^2) = 0` after
///    clearing denominators (by tangency this equals the full-field
///    derivative identity);
/// 4. gradient nonvanishing: `a^2 + b^2` positive definite, with the product
///    identity `y*a + x*b = 8(xy)^3` replayed exactly;
/// 5. radial growth: `2N - D*(x^2+y^2)` homogeneous nonnegative, which
///    bounds `W` below by `(x^2+y^2)/2`.
///
/// Checks 2 and 3 are the only split-sensitive ones; 1, 4, 5 depend on `W`
/// alone.
pub fn verify_rational_lyapunov(
    system: &str,
    field: &DecomposedField,
    w: &RationalFunction,
) -> CertificateReport {
    let s = circle();
    let (a, b) = w.gradient_numerators();
    let grad_norm_sq = a.mul(&a).add(&b.mul(&b));
    let den_sq = w.gradient_denominator();
    let mut checks = Vec::with_capacity(5);

    // (1) positivity of denominator (first) and numerator.
    {
        let (den_ok, den_item) = pd_item("denominator positive definite", &w.den);
        let (num_ok, num_item) = pd_item("numerator positive definite", &w.num);
        checks.push(CheckOutcome {
            name: "positivity".into(),
            verdict: verdict_of(den_ok && num_ok),
            items: vec![den_item, num_item],
        });
    }

    // (2) tangency along the rotation summand.
    {
        let lie0 = w.lie_derivative(&field.rotation.0, &field.rotation.1);
        checks.push(CheckOutcome {
            name: "tangency".into(),
            verdict: verdict_of(lie0.num.is_zero()),
            items: vec![EvidenceItem::Residual {
                label: "derivative along the rotation summand (numerator)".into(),
                poly: lie0.num,
            }],
        });
    }

    // (3) decrease identity along the descent summand, denominators cleared:
    //     (a*gx + b*gy) * s^2 + (a^2 + b^2) * s * D^2 = 0 for descent (gx, gy).
    {
        let lie1_num = a.mul(&field.descent.0).add(&b.mul(&field.descent.1));
        let residual = lie1_num
            .mul(&s.mul(&s))
            .add(&grad_norm_sq.mul(&s).mul(&den_sq));
        checks.push(CheckOutcome {
            name: "decrease-identity".into(),
            verdict: verdict_of(residual.is_zero()),
            items: vec![EvidenceItem::Residual {
                label: "cleared-denominator decrease identity".into(),
                poly: residual,
            }],
        });
    }

    // (4) gradient nonvanishing off the origin.
    {
        let (pd_ok, sign_item) = pd_item("squared gradient norm a^2 + b^2", &grad_norm_sq);
        let product = BivariatePolynomial::y()
            .mul(&a)
            .add(&BivariatePolynomial::x().mul(&b))
            .sub(&BivariatePolynomial::monomial(3, 3, rat_int(8)));
        let product_ok = product.is_zero();
        checks.push(CheckOutcome {
            name: "gradient-nonvanishing".into(),
            verdict: verdict_of(pd_ok && product_ok),
            items: vec![
                sign_item,
                EvidenceItem::Residual {
                    label: "gradient product identity y*a + x*b - 8*(x*y)^3".into(),
                    poly: product,
                },
            ],
        });
    }

    // (5) radial growth: 2N - D*s nonnegative.
    {
        let growth = w.num.scale(&rat_int(2)).sub(&w.den.mul(&s));
        let (ok, item) = nonneg_item("radial growth margin 2*num - den*(x^2 + y^2)", &growth);
        checks.push(CheckOutcome {
            name: "radial-unboundedness".into(),
            verdict: verdict_of(ok),
            items: vec![item],
        });
    }

    CertificateReport {
        system: system.to_string(),
        certificate: w.render(),
        route: "rational-five-check".into(),
        overall: combine(&checks),
        checks,
    }
}

/// Scalings used when probing a candidate violation direction for a concrete
/// strictly negative value of the full polynomial.
fn probe_scalings() -> Vec<Rational> {
    let mut out = vec![rat_int(8), rat_int(4), rat_int(2), rat_int(1)];
    for e in 1..=8 {
        out.push(rat(1, 1 << e));
    }
    out
}

/// Search for a concrete point where `p < 0`, scanning scalings of a
/// direction hint.  Returns the point and the exact value.
fn probe_negative(
    p: &BivariatePolynomial,
    hint: &(Rational, Rational),
) -> Option<((Rational, Rational), Rational)> {
    for lambda in probe_scalings() {
        let pt = (&hint.0 * &lambda, &hint.1 * &lambda);
        let v = p.evaluate(&pt.0, &pt.1);
        if v < Rational::zero() {
            return Some((pt, v));
        }
    }
    None
}

/// Exact verification of a polynomial certificate.
///
/// `GlobalHomogeneous` requires a homogeneous `V` and decides `V > 0` and
/// `-<grad V, f> > 0` away from the origin; a non-homogeneous derivative is
/// handled by the per-part analysis, whose indeterminate outcome is reported
/// as `inconclusive` unless a strict violation point is found.  `Local`
/// requires `V(0,0) = 0` and decides the sign of the lowest-order parts of
/// `V` and `-<grad V, f>`: positive definite lowest parts are an exact
/// sufficient condition near the origin ("local pass, lowest order");
/// semidefinite lowest parts yield `inconclusive`, never `pass`.
pub fn verify_polynomial_lyapunov(
    system: &str,
    field: &DecomposedField,
    v: &BivariatePolynomial,
    scope: Scope,
) -> Result<CertificateReport> {
    if v.is_zero() {
        return Err(Error::ZeroPolynomial(
            "the zero polynomial cannot be a certificate".into(),
        ));
    }
    let (fx, fy) = field.total();
    let neg_lie = v.lie_derivative(&fx, &fy).neg();
    let checks = match scope {
        Scope::GlobalHomogeneous => {
            if !v.is_homogeneous() {
                return Err(Error::NotHomogeneous(format!(
                    "global verification requires a homogeneous certificate, got `{v}`"
                )));
            }
            let (v_ok, v_item) = pd_item("certificate positive definite", v);
            let positivity = CheckOutcome {
                name: "positivity".into(),
                verdict: verdict_of(v_ok),
                items: vec![v_item],
            };
            let decrease = global_decrease_check(&neg_lie)?;
            vec![positivity, decrease]
        }
        Scope::Local => {
            if !v.coefficient(0, 0).is_zero() {
                return Err(Error::InvalidInput(
                    "local verification requires the certificate to vanish at the origin".into(),
                ));
            }
            vec![
                lowest_order_check("positivity-lowest-order", "certificate", v),
                lowest_order_check("decrease-lowest-order", "negated derivative", &neg_lie),
            ]
        }
    };
    let route = match scope {
        Scope::GlobalHomogeneous => "polynomial-global-homogeneous",
        Scope::Local => "polynomial-local-lowest-order",
    };
    Ok(CertificateReport {
        system: system.to_string(),
        certificate: v.render(),
        route: route.into(),
        overall: combine(&checks),
        checks,
    })
}

fn global_decrease_check(neg_lie: &BivariatePolynomial) -> Result<CheckOutcome> {
    let name = "decrease".to_string();
    if neg_lie.is_zero() {
        return Ok(CheckOutcome {
            name,
            verdict: Verdict::Inconclusive,
            items: vec![EvidenceItem::Note {
                text: "derivative along the field is identically zero; no strict decrease".into(),
            }],
        });
    }
    if neg_lie.is_homogeneous() {
        let (ok, item) = pd_item("negated derivative positive definite", neg_lie);
        let verdict = if ok {
            Verdict::Pass
        } else if let EvidenceItem::Sign { ref evidence, .. } = item {
            if evidence.witness.is_some() {
                Verdict::Fail
            } else {
                // Nonnegative but vanishing off the origin: strict decrease
                // fails, weak decrease survives.
                Verdict::Inconclusive
            }
        } else {
            Verdict::Fail
        };
        return Ok(CheckOutcome {
            name,
            verdict,
            items: vec![item],
        });
    }
    let parts: Vec<BivariatePolynomial> =
        neg_lie.homogeneous_decompose().into_values().collect();
    let (sum_verdict, evidence) = sum_of_parts_positive_definite(&parts)?;
    let mut items = vec![EvidenceItem::PartsSign {
        label: "per-part analysis of the negated derivative".into(),
        evidence: evidence.clone(),
    }];
    let verdict = match sum_verdict {
        SumVerdict::Definite => Verdict::Pass,
        SumVerdict::VanishesOffOrigin => {
            items.push(EvidenceItem::Note {
                text: "negated derivative is nonnegative but vanishes along a nonzero direction"
                    .into(),
            });
            Verdict::Inconclusive
        }
        SumVerdict::Indeterminate => {
            let hint = match &evidence.conclusion {
                PartsConclusion::PartNegative { index } => {
                    evidence.parts[*index].witness.clone()
                }
                _ => None,
            };
            match hint.and_then(|h| probe_negative(neg_lie, &h)) {
                Some((point, value)) => {
                    items.push(EvidenceItem::Witness {
                        label: "point where the derivative is strictly positive".into(),
                        point: Some(point),
                        value,
                    });
                    Verdict::Fail
                }
                None => {
                    items.push(EvidenceItem::Note {
                        text: "per-part analysis indeterminate; no strict violation located"
                            .into(),
                    });
                    Verdict::Inconclusive
                }
            }
        }
    };
    Ok(CheckOutcome {
        name,
        verdict,
        items,
    })
}

fn lowest_order_check(name: &str, what: &str, p: &BivariatePolynomial) -> CheckOutcome {
    let name = name.to_string();
    if p.is_zero() {
        return CheckOutcome {
            name,
            verdict: Verdict::Inconclusive,
            items: vec![EvidenceItem::Note {
                text: format!("{what} is identically zero"),
            }],
        };
    }
    let (degree, lowest) = p
        .homogeneous_decompose()
        .into_iter()
        .next()
        .expect("nonzero polynomial has a lowest part");
    let (ok, item) = pd_item(
        &format!("lowest-order part of the {what} (degree {degree})"),
        &lowest,
    );
    if ok {
        return CheckOutcome {
            name,
            verdict: Verdict::Pass,
            items: vec![item],
        };
    }
    let witness = if let EvidenceItem::Sign { ref evidence, .. } = item {
        evidence.witness.clone()
    } else {
        None
    };
    match witness.and_then(|h| probe_negative(p, &h)) {
        Some((point, value)) => CheckOutcome {
            name,
            verdict: Verdict::Fail,
            items: vec![
                item,
                EvidenceItem::Witness {
                    label: format!("point where the {what} is strictly negative"),
                    point: Some(point),
                    value,
                },
            ],
        },
        None => CheckOutcome {
            name,
            verdict: Verdict::Inconclusive,
            items: vec![
                item,
                EvidenceItem::Note {
                    text: format!(
                        "lowest-order part of the {what} is not positive definite; \
                         no strict violation located"
                    ),
                },
            ],
        },
    }
}

/// A sample point violating a Lyapunov condition, with the exact value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleCounterexample {
    #[serde(with = "crate::report::serde_opt_point")]
    pub point: Option<(Rational, Rational)>,
    pub condition: String,
    #[serde(with = "crate::report::serde_rational")]
    pub value: Rational,
}

/// Cheap exact pre-filter: evaluate the candidate and its derivative at the
/// given rational samples and report the first violation.  The origin and
/// denominator zeros are skipped (the equilibrium passes trivially).  A
/// clean pass proves nothing; only the exact routes certify.
pub fn falsify_by_sampling(
    certificate: &Certificate,
    field: &DecomposedField,
    samples: &[(Rational, Rational)],
) -> Option<SampleCounterexample> {
    let lie = certificate.lie_derivative(field);
    for (x, y) in samples {
        if x.is_zero() && y.is_zero() {
            continue;
        }
        let Ok(value) = certificate.evaluate(x, y) else {
            continue;
        };
        if value <= Rational::zero() {
            return Some(SampleCounterexample {
                point: Some((x.clone(), y.clone())),
                condition: "positivity".into(),
                value,
            });
        }
        let Ok(dot) = lie.evaluate(x, y) else {
            continue;
        };
        if dot > Rational::zero() {
            return Some(SampleCounterexample {
                point: Some((x.clone(), y.clone())),
                condition: "decrease".into(),
                value: dot,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::systems::{
        linear_field, quintic_certificate, quintic_field, septic_certificate, septic_field,
        simple_field,
    };

    fn p(text: &str) -> BivariatePolynomial {
        BivariatePolynomial::parse(text).unwrap()
    }

    #[test]
    fn flagship_certificate_passes_all_five_checks() {
        let report = verify_rational_lyapunov("septic", &septic_field(), &septic_certificate());
        assert_eq!(report.overall, Verdict::Pass);
        let names: Vec<_> = report.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "positivity",
                "tangency",
                "decrease-identity",
                "gradient-nonvanishing",
                "radial-unboundedness"
            ]
        );
        assert!(report.checks.iter().all(|c| c.verdict == Verdict::Pass));
        assert!(report.reverify());
    }

    #[test]
    fn radial_margin_is_the_expected_square() {
        let report = verify_rational_lyapunov("septic", &septic_field(), &septic_certificate());
        let radial = report
            .checks
            .iter()
            .find(|c| c.name == "radial-unboundedness")
            .unwrap();
        match &radial.items[0] {
            EvidenceItem::Sign { evidence, .. } => {
                assert_eq!(evidence.target, p("x^4 - 2*x^2*y^2 + y^4"));
            }
            other => panic!("unexpected evidence {other:?}"),
        }
    }

    #[test]
    fn circle_as_rational_certificate_fails_tangency() {
        let w = RationalFunction::from_polynomial(p("x^2 + y^2"));
        let report = verify_rational_lyapunov("septic", &septic_field(), &w);
        assert_eq!(report.overall, Verdict::Fail);
        let tangency = report.checks.iter().find(|c| c.name == "tangency").unwrap();
        assert_eq!(tangency.verdict, Verdict::Fail);
        match &tangency.items[0] {
            EvidenceItem::Residual { poly, .. } => {
                assert_eq!(poly, &p("8*x^5*y - 8*x*y^5"));
            }
            other => panic!("unexpected evidence {other:?}"),
        }
    }

    #[test]
    fn swapping_the_split_breaks_exactly_the_split_sensitive_checks() {
        let field = septic_field();
        let straight = verify_rational_lyapunov("septic", &field, &septic_certificate());
        let swapped = verify_rational_lyapunov("septic", &field.swapped(), &septic_certificate());
        for (s, w) in straight.checks.iter().zip(&swapped.checks) {
            match s.name.as_str() {
                "tangency" | "decrease-identity" => {
                    assert_eq!(s.verdict, Verdict::Pass);
                    assert_eq!(w.verdict, Verdict::Fail, "check {} should break", w.name);
                }
                _ => assert_eq!(s.verdict, w.verdict, "check {} should not move", w.name),
            }
        }
    }

    #[test]
    fn linear_contraction_global_pass() {
        let report = verify_polynomial_lyapunov(
            "linear",
            &linear_field(),
            &p("x^2 + y^2"),
            Scope::GlobalHomogeneous,
        )
        .unwrap();
        assert_eq!(report.overall, Verdict::Pass);
        assert!(report.reverify());
    }

    #[test]
    fn quintic_certificates_pass_globally() {
        for lambda in [rat_int(0), rat_int(1), rat(1, 2)] {
            let field = quintic_field(&lambda).unwrap();
            let v = quintic_certificate(&lambda).unwrap();
            let report =
                verify_polynomial_lyapunov("quintic", &field, &v, Scope::GlobalHomogeneous)
                    .unwrap();
            assert_eq!(
                report.overall,
                Verdict::Pass,
                "parameter {lambda} should certify"
            );
            assert!(report.reverify());
        }
    }

    #[test]
    fn simple_system_local_pass_global_fail() {
        let field = simple_field();
        let v = p("x^2 + y^2");
        let local = verify_polynomial_lyapunov("simple", &field, &v, Scope::Local).unwrap();
        assert_eq!(local.overall, Verdict::Pass);
        assert!(local.reverify());

        let global =
            verify_polynomial_lyapunov("simple", &field, &v, Scope::GlobalHomogeneous).unwrap();
        assert_eq!(global.overall, Verdict::Fail);
        let decrease = global.checks.iter().find(|c| c.name == "decrease").unwrap();
        let witness = decrease.items.iter().find_map(|i| match i {
            EvidenceItem::Witness { point, value, .. } => Some((point.clone(), value.clone())),
            _ => None,
        });
        let (Some(point), value) = witness.expect("strict violation should be located") else {
            panic!("witness point missing");
        };
        assert!(value < Rational::zero());
        // The negated derivative is really negative there.
        let (fx, fy) = field.total();
        let neg_lie = v.lie_derivative(&fx, &fy).neg();
        assert!(neg_lie.evaluate(&point.0, &point.1) < Rational::zero());
    }

    #[test]
    fn local_route_rejects_nonvanishing_certificates() {
        let v = p("x^2 + y^2 + 1");
        assert!(verify_polynomial_lyapunov("simple", &simple_field(), &v, Scope::Local).is_err());
    }

    #[test]
    fn semidefinite_lowest_part_is_inconclusive() {
        // V = x^2 + y^4 vanishes to second order along the y axis: its
        // lowest part x^2 is semidefinite, so the local route must not pass.
        let report = verify_polynomial_lyapunov(
            "linear",
            &linear_field(),
            &p("x^2 + y^4"),
            Scope::Local,
        )
        .unwrap();
        assert_eq!(report.overall, Verdict::Inconclusive);
        let positivity = report
            .checks
            .iter()
            .find(|c| c.name == "positivity-lowest-order")
            .unwrap();
        assert_eq!(positivity.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn indefinite_certificate_fails_locally_with_witness() {
        let report = verify_polynomial_lyapunov(
            "linear",
            &linear_field(),
            &p("x^2 - y^2"),
            Scope::Local,
        )
        .unwrap();
        assert_eq!(report.overall, Verdict::Fail);
    }

    #[test]
    fn falsification_finds_the_small_sample_violation() {
        let cert = Certificate::Polynomial(p("x^2 + y^2"));
        let samples = [
            (rat_int(0), rat_int(0)),
            (rat_int(2), rat_int(1)),
            (rat(1, 2), rat(1, 4)),
        ];
        let hit = falsify_by_sampling(&cert, &septic_field(), &samples).unwrap();
        assert_eq!(hit.condition, "decrease");
        assert_eq!(hit.point, Some((rat(1, 2), rat(1, 4))));
        assert!(hit.value > Rational::zero());
    }

    #[test]
    fn falsification_trivial_cases() {
        let w_num = Certificate::Polynomial(p("x^4 + y^4"));
        assert!(falsify_by_sampling(
            &w_num,
            &septic_field(),
            &[(rat_int(0), rat_int(0))]
        )
        .is_none());

        let neg = Certificate::Polynomial(p("-1*x^2"));
        let hit =
            falsify_by_sampling(&neg, &linear_field(), &[(rat_int(1), rat_int(0))]).unwrap();
        assert_eq!(hit.condition, "positivity");
        assert_eq!(hit.value, rat_int(-1));
    }

    #[test]
    fn report_reverify_rejects_tampering() {
        let mut report =
            verify_rational_lyapunov("septic", &septic_field(), &septic_certificate());
        assert!(report.reverify());
        // Claim a pass for a check whose residual is nonzero.
        report.checks[1].items[0] = EvidenceItem::Residual {
            label: "forged".into(),
            poly: p("x"),
        };
        assert!(!report.reverify());
    }

    #[test]
    fn report_round_trips_through_toml() {
        let report = verify_rational_lyapunov("septic", &septic_field(), &septic_certificate());
        let text = toml::to_string_pretty(&report).unwrap();
        let back: CertificateReport = toml::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert!(back.reverify());
    }

    #[test]
    fn certificate_parsing_dispatches_on_shape() {
        let c1 = Certificate::parse("x^2 + y^2").unwrap();
        assert!(matches!(c1, Certificate::Polynomial(_)));
        let c2 = Certificate::parse("(x^4 + y^4) / (x^2 + y^2)").unwrap();
        assert!(matches!(c2, Certificate::Rational(_)));
        assert!(Certificate::parse("(x) / (0)").is_err());
    }
}
