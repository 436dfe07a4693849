//! The built-in gallery of planar polynomial vector fields.
//!
//! Every field is stored as a two-summand decomposition `f = rotation +
//! descent`: the rotation component is tangent to the level sets of the
//! system's certificate, and the descent component pushes strictly down them.
//! The flagship entry is a degree-7 field whose only certificate in the
//! gallery is a genuinely rational function; a degree-5 family, a simple
//! product-nonlinearity system, and a linear contraction round out the set.

use crate::error::{Error, Result};
use crate::poly::BivariatePolynomial;
use crate::ratfunc::RationalFunction;
use crate::rational::{rat_int, Rational};
use num_traits::{Signed, ToPrimitive, Zero};

/// A planar polynomial field split into two summands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecomposedField {
    /// Component tangent to the certificate's level sets.
    pub rotation: (BivariatePolynomial, BivariatePolynomial),
    /// Component descending the certificate; may be identically zero.
    pub descent: (BivariatePolynomial, BivariatePolynomial),
}

/// Degrees of the two summands and of the full field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldDegrees {
    pub rotation: Option<u32>,
    pub descent: Option<u32>,
    pub total: Option<u32>,
}

impl DecomposedField {
    pub fn total(&self) -> (BivariatePolynomial, BivariatePolynomial) {
        (
            self.rotation.0.add(&self.descent.0),
            self.rotation.1.add(&self.descent.1),
        )
    }

    /// Exact evaluation of the full field.
    pub fn evaluate(&self, x: &Rational, y: &Rational) -> (Rational, Rational) {
        let (fx, fy) = self.total();
        (fx.evaluate(x, y), fy.evaluate(x, y))
    }

    /// Field with the two summands interchanged; used to probe which checks
    /// are split-sensitive.
    pub fn swapped(&self) -> DecomposedField {
        DecomposedField {
            rotation: self.descent.clone(),
            descent: self.rotation.clone(),
        }
    }

    pub fn degrees(&self) -> FieldDegrees {
        let pair_degree = |p: &(BivariatePolynomial, BivariatePolynomial)| {
            match (p.0.degree(), p.1.degree()) {
                (None, None) => None,
                (a, b) => Some(a.unwrap_or(0).max(b.unwrap_or(0))),
            }
        };
        let (fx, fy) = self.total();
        FieldDegrees {
            rotation: pair_degree(&self.rotation),
            descent: pair_degree(&self.descent),
            total: pair_degree(&(fx, fy)),
        }
    }
}

fn circle() -> BivariatePolynomial {
    // x^2 + y^2
    BivariatePolynomial::from_terms([(2, 0, rat_int(1)), (0, 2, rat_int(1))])
}

/// The degree-7 field.  With `s = x^2 + y^2` and the gradient numerators
/// `a = 2x(x^4 + 2x^2y^2 - y^4)`, `b = 2y(-x^4 + 2x^2y^2 + y^4)` of the
/// certificate `(x^4 + y^4)/s`, the field is `(-b, a) - s·(a, b)`: a
/// level-set rotation plus a strict radial descent.
pub fn septic_field() -> DecomposedField {
    let (a, b) = septic_gradient_numerators();
    let s = circle();
    DecomposedField {
        rotation: (b.neg(), a.clone()),
        descent: (s.mul(&a).neg(), s.mul(&b).neg()),
    }
}

/// Gradient numerators of the degree-7 system's certificate, over the common
/// denominator `(x^2 + y^2)^2`.
pub fn septic_gradient_numerators() -> (BivariatePolynomial, BivariatePolynomial) {
    let qa = BivariatePolynomial::from_terms([
        (4, 0, rat_int(1)),
        (2, 2, rat_int(2)),
        (0, 4, rat_int(-1)),
    ]);
    let qb = BivariatePolynomial::from_terms([
        (4, 0, rat_int(-1)),
        (2, 2, rat_int(2)),
        (0, 4, rat_int(1)),
    ]);
    let a = BivariatePolynomial::monomial(1, 0, rat_int(2)).mul(&qa);
    let b = BivariatePolynomial::monomial(0, 1, rat_int(2)).mul(&qb);
    (a, b)
}

/// The rational certificate of the degree-7 field: `(x^4 + y^4)/(x^2 + y^2)`.
pub fn septic_certificate() -> RationalFunction {
    let num = BivariatePolynomial::from_terms([(4, 0, rat_int(1)), (0, 4, rat_int(1))]);
    RationalFunction::new(num, circle()).expect("nonzero denominator")
}

/// The degree-5 family, parameterized by a nonnegative rational `lambda`.
///
/// With `s = x^2 + y^2`, `r = 2x^2 + y^2`, `A = 2x(r + 2*lambda*s)` and
/// `B = 2y(r + lambda*s)`, the field is `(-B, A) - s·(A, B)`.  The pair
/// `(A, B)` is a positive multiple of the gradient of the family's
/// certificate, so the first summand rotates along its level sets and the
/// second descends them.
pub fn quintic_field(lambda: &Rational) -> Result<DecomposedField> {
    if lambda.is_negative() {
        return Err(Error::InvalidInput(format!(
            "family parameter must be nonnegative, got {lambda}"
        )));
    }
    let s = circle();
    let r = BivariatePolynomial::from_terms([(2, 0, rat_int(2)), (0, 2, rat_int(1))]);
    let two_lambda_s = s.scale(&(lambda * rat_int(2)));
    let lambda_s = s.scale(lambda);
    let a = BivariatePolynomial::monomial(1, 0, rat_int(2)).mul(&r.add(&two_lambda_s));
    let b = BivariatePolynomial::monomial(0, 1, rat_int(2)).mul(&r.add(&lambda_s));
    Ok(DecomposedField {
        rotation: (b.neg(), a.clone()),
        descent: (s.mul(&a).neg(), s.mul(&b).neg()),
    })
}

/// Certificate for the degree-5 family at `lambda = p/q` in lowest terms:
/// `(x^2 + y^2)^q · (2x^2 + y^2)^p`, a polynomial of degree `2(p + q)`.
pub fn quintic_certificate(lambda: &Rational) -> Result<BivariatePolynomial> {
    if lambda.is_negative() {
        return Err(Error::InvalidInput(format!(
            "family parameter must be nonnegative, got {lambda}"
        )));
    }
    let p = lambda.numer().to_u32().ok_or_else(|| {
        Error::InvalidInput(format!("family parameter {lambda} is too large"))
    })?;
    let q = lambda.denom().to_u32().ok_or_else(|| {
        Error::InvalidInput(format!("family parameter {lambda} is too large"))
    })?;
    let r = BivariatePolynomial::from_terms([(2, 0, rat_int(2)), (0, 2, rat_int(1))]);
    Ok(circle().pow(q).mul(&r.pow(p)))
}

/// A simple product-nonlinearity system, `(dx, dy) = (-x + xy, -y)`, kept
/// whole: its descent summand is identically zero.
pub fn simple_field() -> DecomposedField {
    let fx = BivariatePolynomial::from_terms([(1, 0, rat_int(-1)), (1, 1, rat_int(1))]);
    let fy = BivariatePolynomial::monomial(0, 1, rat_int(-1));
    DecomposedField {
        rotation: (fx, fy),
        descent: (BivariatePolynomial::zero(), BivariatePolynomial::zero()),
    }
}

/// The linear contraction `(dx, dy) = (-x, -y)`.
pub fn linear_field() -> DecomposedField {
    DecomposedField {
        rotation: (
            BivariatePolynomial::monomial(1, 0, rat_int(-1)),
            BivariatePolynomial::monomial(0, 1, rat_int(-1)),
        ),
        descent: (BivariatePolynomial::zero(), BivariatePolynomial::zero()),
    }
}

/// A certificate as stored in the gallery, tagged with the verification
/// route it is known to pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnownCertificate {
    /// Verified by the five-check rational route, globally.
    RationalGlobal(RationalFunction),
    /// Homogeneous polynomial verified globally.
    PolynomialGlobal(BivariatePolynomial),
    /// Polynomial verified near the origin by lowest-order terms.
    PolynomialLocal(BivariatePolynomial),
}

impl KnownCertificate {
    pub fn render(&self) -> String {
        match self {
            KnownCertificate::RationalGlobal(w) => w.render(),
            KnownCertificate::PolynomialGlobal(v) | KnownCertificate::PolynomialLocal(v) => {
                v.render()
            }
        }
    }
}

/// One gallery entry.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub field: DecomposedField,
    pub certificate: Option<KnownCertificate>,
}

/// The built-in gallery, in display order.
pub fn catalog() -> Vec<CatalogEntry> {
    let half = crate::rational::rat(1, 2);
    vec![
        CatalogEntry {
            name: "septic",
            summary: "degree-7 field certified by the rational function (x^4 + y^4)/(x^2 + y^2)",
            field: septic_field(),
            certificate: Some(KnownCertificate::RationalGlobal(septic_certificate())),
        },
        CatalogEntry {
            name: "quintic-0",
            summary: "degree-5 family member at parameter 0, certified by x^2 + y^2",
            field: quintic_field(&Rational::zero()).expect("parameter 0 is valid"),
            certificate: Some(KnownCertificate::PolynomialGlobal(
                quintic_certificate(&Rational::zero()).expect("parameter 0 is valid"),
            )),
        },
        CatalogEntry {
            name: "quintic-1",
            summary: "degree-5 family member at parameter 1, certified by a quartic polynomial",
            field: quintic_field(&rat_int(1)).expect("parameter 1 is valid"),
            certificate: Some(KnownCertificate::PolynomialGlobal(
                quintic_certificate(&rat_int(1)).expect("parameter 1 is valid"),
            )),
        },
        CatalogEntry {
            name: "quintic-half",
            summary: "degree-5 family member at parameter 1/2, certified by a sextic polynomial",
            field: quintic_field(&half).expect("parameter 1/2 is valid"),
            certificate: Some(KnownCertificate::PolynomialGlobal(
                quintic_certificate(&half).expect("parameter 1/2 is valid"),
            )),
        },
        CatalogEntry {
            name: "simple",
            summary: "product-nonlinearity system (-x + xy, -y) with the local certificate x^2 + y^2",
            field: simple_field(),
            certificate: Some(KnownCertificate::PolynomialLocal(circle())),
        },
        CatalogEntry {
            name: "linear",
            summary: "linear contraction (-x, -y) with the global certificate x^2 + y^2",
            field: linear_field(),
            certificate: Some(KnownCertificate::PolynomialGlobal(circle())),
        },
    ]
}

/// Look up a gallery entry by name.
pub fn find_system(name: &str) -> Result<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| {
            let names: Vec<_> = catalog().iter().map(|e| e.name).collect();
            Error::InvalidInput(format!(
                "unknown system `{name}`; available: {}",
                names.join(", ")
            ))
        })
}
