//! Rational functions in two variables, stored as unreduced numerator /
//! denominator pairs of sparse polynomials.
//!
//! No gcd cancellation is ever performed: equality is decided by exact
//! cross-multiplication, which keeps every operation a finite polynomial
//! computation.  The denominator is required to be a nonzero polynomial.

use crate::error::{Error, Result};
use crate::poly::BivariatePolynomial;
use crate::rational::Rational;
use num_traits::Zero;

/// A quotient of two bivariate polynomials with rational coefficients.
///
/// The pair is kept exactly as constructed; two values represent the same
/// function iff `num * other.den == other.num * den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: BivariatePolynomial,
    pub den: BivariatePolynomial,
}

impl RationalFunction {
    /// Builds `num / den`, rejecting a zero denominator.
    pub fn new(num: BivariatePolynomial, den: BivariatePolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalFunction { num, den })
    }

    /// Embeds a polynomial as `p / 1`.
    pub fn from_polynomial(num: BivariatePolynomial) -> Self {
        RationalFunction {
            num,
            den: BivariatePolynomial::one(),
        }
    }

    /// True iff the function is identically zero (numerator is the zero
    /// polynomial).
    pub fn is_zero_function(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact equality as functions, via cross-multiplication.
    pub fn equals(&self, other: &RationalFunction) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &RationalFunction) -> Self {
        RationalFunction {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn sub(&self, other: &RationalFunction) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RationalFunction) -> Self {
        RationalFunction {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    /// Multiplies by a polynomial without touching the denominator.
    pub fn mul_poly(&self, p: &BivariatePolynomial) -> Self {
        RationalFunction {
            num: self.num.mul(p),
            den: self.den.clone(),
        }
    }

    /// Exact evaluation.  Fails when the denominator vanishes at the point;
    /// no continuous extension is attempted here.
    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Result<Rational> {
        let d = self.den.evaluate(x, y);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.evaluate(x, y) / d)
    }

    /// Floating-point evaluation with the removable-singularity convention
    /// `0/0 = 0`, so that quotients vanishing at the origin (numerator order
    /// exceeding denominator order) evaluate cleanly there.
    pub fn evaluate_f64(&self, x: f64, y: f64) -> f64 {
        let n = self.num.evaluate_f64(x, y);
        let d = self.den.evaluate_f64(x, y);
        if d == 0.0 {
            if n == 0.0 {
                0.0
            } else {
                f64::INFINITY * n.signum()
            }
        } else {
            n / d
        }
    }

    /// Gradient with the common denominator `den^2`: returns numerators
    /// `(a, b)` such that `grad(num/den) = (a, b) / den^2`.
    pub fn gradient_numerators(&self) -> (BivariatePolynomial, BivariatePolynomial) {
        let (nx, ny) = self.num.gradient();
        let (dx, dy) = self.den.gradient();
        let a = nx.mul(&self.den).sub(&self.num.mul(&dx));
        let b = ny.mul(&self.den).sub(&self.num.mul(&dy));
        (a, b)
    }

    /// Denominator of the gradient, `den^2`.
    pub fn gradient_denominator(&self) -> BivariatePolynomial {
        self.den.mul(&self.den)
    }

    /// Derivative along a polynomial vector field `(fx, fy)`:
    /// `(a*fx + b*fy) / den^2` with `(a, b)` the gradient numerators.
    pub fn lie_derivative(
        &self,
        fx: &BivariatePolynomial,
        fy: &BivariatePolynomial,
    ) -> RationalFunction {
        let (a, b) = self.gradient_numerators();
        RationalFunction {
            num: a.mul(fx).add(&b.mul(fy)),
            den: self.gradient_denominator(),
        }
    }

    /// Renders as `(num) / (den)`, or just the numerator when the
    /// denominator is the constant 1.
    pub fn render(&self) -> String {
        if self.den == BivariatePolynomial::one() {
            self.num.render()
        } else {
            format!("({}) / ({})", self.num.render(), self.den.render())
        }
    }

    /// Parses either a bare polynomial or the `(num) / (den)` form produced
    /// by [`render`](Self::render).  Parenthesised numerator and denominator
    /// keep the quotient slash unambiguous next to `p/q` coefficients.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if !t.starts_with('(') {
            return Ok(Self::from_polynomial(BivariatePolynomial::parse(t)?));
        }
        let close = t
            .rfind(") / (")
            .ok_or_else(|| Error::Parse(format!("expected `(num) / (den)`, got `{t}`")))?;
        let num_text = &t[1..close];
        let rest = &t[close + ") / (".len()..];
        let den_text = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unterminated denominator in `{t}`")))?;
        let num = BivariatePolynomial::parse(num_text)?;
        let den = BivariatePolynomial::parse(den_text)?;
        Self::new(num, den)
    }
}

impl std::fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::BivariatePolynomial as Poly;
    use crate::rational::{rat, rat_int};

    fn quartic_over_circle() -> RationalFunction {
        let num = Poly::parse("x^4 + y^4").unwrap();
        let den = Poly::parse("x^2 + y^2").unwrap();
        RationalFunction::new(num, den).unwrap()
    }

    #[test]
    fn rejects_zero_denominator() {
        let e = RationalFunction::new(Poly::one(), Poly::zero());
        assert!(e.is_err());
    }

    #[test]
    fn cross_multiplication_equality_ignores_common_factors() {
        let w = quartic_over_circle();
        let s = Poly::parse("x^2 + y^2").unwrap();
        let blown_up = RationalFunction::new(w.num.mul(&s), w.den.mul(&s)).unwrap();
        assert!(w.equals(&blown_up));
        assert!(!w.equals(&RationalFunction::from_polynomial(Poly::one())));
    }

    #[test]
    fn gradient_numerators_of_quartic_over_circle() {
        let w = quartic_over_circle();
        let (a, b) = w.gradient_numerators();
        let expect_a = Poly::parse("2*x^5 + 4*x^3*y^2 - 2*x*y^4").unwrap();
        let expect_b = Poly::parse("-2*x^4*y + 4*x^2*y^3 + 2*y^5").unwrap();
        assert_eq!(a, expect_a);
        assert_eq!(b, expect_b);
        let den = w.gradient_denominator();
        assert_eq!(den, Poly::parse("x^4 + 2*x^2*y^2 + y^4").unwrap());
    }

    #[test]
    fn gradient_of_reciprocal() {
        let w = RationalFunction::new(Poly::one(), Poly::parse("x^2 + y^2").unwrap()).unwrap();
        let (a, b) = w.gradient_numerators();
        assert_eq!(a, Poly::parse("-2*x").unwrap());
        assert_eq!(b, Poly::parse("-2*y").unwrap());
    }

    #[test]
    fn lie_derivative_is_additive_in_the_field() {
        let w = quartic_over_circle();
        let f = (Poly::parse("x^2 - y").unwrap(), Poly::parse("x*y").unwrap());
        let g = (Poly::parse("y^3").unwrap(), Poly::parse("-x").unwrap());
        let sum = (f.0.add(&g.0), f.1.add(&g.1));
        let lhs = w.lie_derivative(&sum.0, &sum.1);
        let rhs = w.lie_derivative(&f.0, &f.1).add(&w.lie_derivative(&g.0, &g.1));
        assert!(lhs.equals(&rhs));
    }

    #[test]
    fn exact_evaluation_and_pole_rejection() {
        let w = quartic_over_circle();
        let v = w.evaluate(&rat_int(1), &rat_int(1)).unwrap();
        assert_eq!(v, rat_int(1));
        let v2 = w.evaluate(&rat(1, 2), &rat_int(0)).unwrap();
        assert_eq!(v2, rat(1, 4));
        assert!(w.evaluate(&rat_int(0), &rat_int(0)).is_err());
    }

    #[test]
    fn float_evaluation_extends_by_zero_at_the_origin() {
        let w = quartic_over_circle();
        assert_eq!(w.evaluate_f64(0.0, 0.0), 0.0);
        let v = w.evaluate_f64(1.0, 1.0);
        assert!((v - 1.0).abs() < 1e-15);
    }

    #[test]
    fn parse_render_round_trip() {
        let w = quartic_over_circle();
        let text = w.render();
        assert_eq!(text, "(1*x^4 + 1*y^4) / (1*x^2 + 1*y^2)");
        let back = RationalFunction::parse(&text).unwrap();
        assert_eq!(back, w);

        let p = RationalFunction::parse("1/2*x^2 + y").unwrap();
        assert_eq!(p.den, Poly::one());
        assert_eq!(p.num, Poly::parse("1/2*x^2 + y").unwrap());

        assert!(RationalFunction::parse("(x) / (0)").is_err());
        assert!(RationalFunction::parse("(x / y").is_err());
    }

    #[test]
    fn arithmetic_matches_common_denominator_algebra() {
        let w = quartic_over_circle();
        let half = RationalFunction::from_polynomial(Poly::constant(rat(1, 2)));
        let doubled = w.add(&w);
        let expect = w.mul_poly(&Poly::constant(rat_int(2)));
        assert!(doubled.equals(&expect));
        assert!(w.sub(&w).is_zero_function());
        let quarter = half.mul(&half);
        assert_eq!(
            quarter.evaluate(&rat_int(3), &rat_int(7)).unwrap(),
            rat(1, 4)
        );
    }
}
