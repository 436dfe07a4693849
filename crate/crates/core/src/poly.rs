//! Sparse bivariate polynomials over the rationals.
//!
//! A polynomial in the variables `x` and `y` is stored as a map from exponent
//! pairs `(i, j)` to nonzero rational coefficients. The map is kept canonical:
//! no zero coefficients are ever stored, so structural equality is polynomial
//! equality and the zero polynomial is the empty map.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{
    format_rational, gaussian, parse_rational, rat_int, rational_to_f64, GaussianRational,
    Rational,
};

/// Sparse bivariate polynomial with exact rational coefficients.
///
/// The exponent map is ordered, which makes iteration, rendering, and
/// hashing-free equality deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn one() -> Self {
        Self::constant(rat_int(1))
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::monomial(1, 0, rat_int(1))
    }

    /// The monomial `y`.
    pub fn y() -> Self {
        Self::monomial(0, 1, rat_int(1))
    }

    pub fn monomial(i: u32, j: u32, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, Rational)>) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Add `c * x^i * y^j`, removing the entry if the coefficient cancels.
    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// True when every stored term has the same total degree.
    ///
    /// The zero polynomial and constants are homogeneous (of degree `None`
    /// and 0 respectively).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|&(i, j)| i + j);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(i, j), coeff) in &self.terms {
            out.add_term(i, j, coeff * c);
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * pow_rat(x, i) * pow_rat(y, j);
        }
        acc
    }

    /// Exact evaluation at a Gaussian-rational point.
    pub fn evaluate_gaussian(&self, x: &GaussianRational, y: &GaussianRational) -> GaussianRational {
        let mut acc = gaussian(Rational::zero(), Rational::zero());
        for (&(i, j), c) in &self.terms {
            let term = pow_gauss(x, i) * pow_gauss(y, j);
            acc += term * gaussian(c.clone(), Rational::zero());
        }
        acc
    }

    /// Floating-point evaluation (simulation/plotting only).
    pub fn evaluate_f64(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j), c)| rational_to_f64(c) * x.powi(i as i32) * y.powi(j as i32))
            .sum()
    }

    /// Partial derivatives `(d/dx, d/dy)`.
    pub fn gradient(&self) -> (Self, Self) {
        let mut dx = Self::zero();
        let mut dy = Self::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                dx.add_term(i - 1, j, c * rat_int(i as i64));
            }
            if j > 0 {
                dy.add_term(i, j - 1, c * rat_int(j as i64));
            }
        }
        (dx, dy)
    }

    /// Split into homogeneous parts, keyed by total degree; no zero parts.
    pub fn homogeneous_decompose(&self) -> BTreeMap<u32, Self> {
        let mut parts: BTreeMap<u32, Self> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            parts
                .entry(i + j)
                .or_insert_with(Self::zero)
                .add_term(i, j, c.clone());
        }
        parts
    }

    /// Homogeneous part of one total degree (zero polynomial if absent).
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        let mut part = Self::zero();
        for (&(i, j), c) in &self.terms {
            if i + j == degree {
                part.add_term(i, j, c.clone());
            }
        }
        part
    }

    /// Dehomogenize along the chart `x = 1`: coefficients of `p(1, t)` by
    /// ascending power of `t`. Meaningful for homogeneous input but defined
    /// for any polynomial (powers of `y` collapse).
    pub fn restrict_x1(&self) -> Vec<Rational> {
        let n = self.degree().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![Rational::zero(); n.max(1)];
        for (&(_, j), c) in &self.terms {
            coeffs[j as usize] += c;
        }
        coeffs
    }

    /// Directional derivative along a two-component polynomial field:
    /// `<grad p, (fx, fy)>`.
    pub fn lie_derivative(&self, fx: &Self, fy: &Self) -> Self {
        let (px, py) = self.gradient();
        px.mul(fx).add(&py.mul(fy))
    }

    /// Parse the polynomial text format: a signed sum of terms
    /// `c*x^i*y^j` with rational `c` (e.g. `1*x^4 + 1*y^4`, `-1/2*x*y`).
    /// Whitespace-insensitive; only the variables `x` and `y` are accepted.
    pub fn parse(input: &str) -> Result<Self> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Self::zero();
        for piece in split_signed_terms(&compact)? {
            let (i, j, c) = parse_term(&piece)?;
            p.add_term(i, j, c);
        }
        Ok(p)
    }

    /// Render in the polynomial text format. Terms appear in graded order,
    /// highest total degree first and higher `x` power first within a degree;
    /// the zero polynomial renders as `0`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by(|a, b| (a.0 + a.1, a.0).cmp(&(b.0 + b.1, b.0)).reverse());
        let mut out = String::new();
        for (idx, &&(i, j)) in keys.iter().enumerate() {
            let c = &self.terms[&(i, j)];
            let positive = *c >= Rational::zero();
            let magnitude = if positive { c.clone() } else { -c.clone() };
            if idx == 0 {
                if !positive {
                    out.push('-');
                }
            } else {
                out.push_str(if positive { " + " } else { " - " });
            }
            out.push_str(&format_rational(&magnitude));
            if i > 0 {
                out.push_str("*x");
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
            if j > 0 {
                out.push_str("*y");
                if j > 1 {
                    out.push_str(&format!("^{j}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn pow_rat(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

fn pow_gauss(base: &GaussianRational, exp: u32) -> GaussianRational {
    let mut acc = gaussian(Rational::one(), Rational::zero());
    for _ in 0..exp {
        acc *= base.clone();
    }
    acc
}

/// Split `a+b-c` into signed pieces `["a", "b", "-c"]`, respecting that `-`
/// may also introduce the leading term.
fn split_signed_terms(compact: &str) -> Result<Vec<String>> {
    let mut pieces = Vec::new();
    let mut current = String::new();
    for (idx, ch) in compact.chars().enumerate() {
        match ch {
            '+' | '-' if idx > 0 && !matches!(compact.as_bytes()[idx - 1], b'+' | b'-' | b'^') => {
                pieces.push(std::mem::take(&mut current));
                if ch == '-' {
                    current.push('-');
                }
            }
            _ => current.push(ch),
        }
    }
    pieces.push(current);
    if pieces.iter().any(|p| p.is_empty() || p == "-") {
        return Err(Error::Parse(format!("malformed term list in `{compact}`")));
    }
    Ok(pieces)
}

/// Parse one signed term `c*x^i*y^j` (factors optional, `*` separated).
fn parse_term(term: &str) -> Result<(u32, u32, Rational)> {
    let mut coeff = Rational::one();
    let mut xi: u32 = 0;
    let mut yj: u32 = 0;
    let mut saw_coeff = false;
    let body = if let Some(rest) = term.strip_prefix('-') {
        coeff = -coeff;
        rest
    } else {
        term
    };
    for factor in body.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in term `{term}`")));
        }
        if let Some(rest) = factor.strip_prefix('x') {
            xi = xi
                .checked_add(parse_exponent(rest, term)?)
                .ok_or_else(|| Error::Parse(format!("exponent overflow in `{term}`")))?;
        } else if let Some(rest) = factor.strip_prefix('y') {
            yj = yj
                .checked_add(parse_exponent(rest, term)?)
                .ok_or_else(|| Error::Parse(format!("exponent overflow in `{term}`")))?;
        } else {
            if saw_coeff {
                return Err(Error::Parse(format!(
                    "unexpected second coefficient in term `{term}`"
                )));
            }
            coeff *= parse_rational(factor)?;
            saw_coeff = true;
        }
    }
    Ok((xi, yj, coeff))
}

fn parse_exponent(rest: &str, term: &str) -> Result<u32> {
    if rest.is_empty() {
        return Ok(1);
    }
    let digits = rest
        .strip_prefix('^')
        .ok_or_else(|| Error::Parse(format!("malformed variable factor in `{term}`")))?;
    digits
        .parse::<u32>()
        .map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(s: &str) -> BivariatePolynomial {
        BivariatePolynomial::parse(s).unwrap()
    }

    #[test]
    fn canonical_form_drops_cancelling_terms() {
        let mut q = BivariatePolynomial::zero();
        q.add_term(2, 0, rat_int(1));
        q.add_term(2, 0, rat_int(-1));
        assert!(q.is_zero());
        assert_eq!(q.degree(), None);
    }

    #[test]
    fn sum_of_quartics_minus_square_of_sum() {
        // 2(x^4 + y^4) - (x^2 + y^2)^2 = (x^2 - y^2)^2
        let quartics = p("1*x^4 + 1*y^4").scale(&rat_int(2));
        let sum_sq = p("1*x^2 + 1*y^2").pow(2);
        let expect = p("1*x^2 - 1*y^2").pow(2);
        assert_eq!(quartics.sub(&sum_sq), expect);
    }

    #[test]
    fn evaluation_at_gaussian_point() {
        let i = crate::rational::gaussian_i();
        let one = gaussian(rat_int(1), rat_int(0));
        // x^2 + y^2 vanishes at (i, 1)
        let s = p("1*x^2 + 1*y^2");
        assert!(crate::rational::gaussian_is_zero(
            &s.evaluate_gaussian(&i, &one)
        ));
        // x^4 + y^4 evaluates to 2 at (i, 1)
        let q = p("1*x^4 + 1*y^4");
        assert_eq!(q.evaluate_gaussian(&i, &one), gaussian(rat_int(2), rat_int(0)));
    }

    #[test]
    fn gradient_of_quartic_sum() {
        let (dx, dy) = p("1*x^4 + 1*y^4").gradient();
        assert_eq!(dx, p("4*x^3"));
        assert_eq!(dy, p("4*y^3"));
    }

    #[test]
    fn decompose_into_homogeneous_parts() {
        let parts = p("1*x^2 + 1*x*y^2").homogeneous_decompose();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&2], p("1*x^2"));
        assert_eq!(parts[&3], p("1*x*y^2"));
        // Parts sum back to the original.
        let sum = parts
            .values()
            .fold(BivariatePolynomial::zero(), |acc, part| acc.add(part));
        assert_eq!(sum, p("1*x^2 + 1*x*y^2"));
    }

    #[test]
    fn homogeneity_flags() {
        assert!(p("1*x^2 + 2*x*y + 1*y^2").is_homogeneous());
        assert!(!p("1*x^2 + 1*x*y^2").is_homogeneous());
        assert!(BivariatePolynomial::zero().is_homogeneous());
        assert!(p("5").is_homogeneous());
    }

    #[test]
    fn parse_round_trip_and_rejects() {
        for text in [
            "1*x^4 + 1*y^4",
            "-1/2*x*y + 3*y^2 - 7",
            "2*x^7 - 2/3*x^2*y^3",
        ] {
            let q = p(text);
            assert_eq!(BivariatePolynomial::parse(&q.render()).unwrap(), q);
        }
        // whitespace-insensitive
        assert_eq!(p("1*x^2+1*y^2"), p(" 1*x^2 + 1*y^2 "));
        // unknown variable
        assert!(BivariatePolynomial::parse("1*z^2").is_err());
        assert!(BivariatePolynomial::parse("").is_err());
        assert!(BivariatePolynomial::parse("1*x^-2").is_err());
        assert!(BivariatePolynomial::parse("+").is_err());
    }

    #[test]
    fn display_orders_terms_by_grade() {
        let q = p("1*y^2 + 1*x^2 + 3*x*y - 2");
        assert_eq!(q.render(), "1*x^2 + 3*x*y + 1*y^2 - 2");
    }

    #[test]
    fn restrict_to_x1_chart() {
        // (x^2 - y^2)^2 -> (1 - t^2)^2 = 1 - 2t^2 + t^4
        let coeffs = p("1*x^2 - 1*y^2").pow(2).restrict_x1();
        let expect: Vec<Rational> =
            [1, 0, -2, 0, 1].iter().map(|&n| rat_int(n)).collect();
        assert_eq!(coeffs, expect);
    }

    #[test]
    fn lie_derivative_against_simple_field() {
        // V = x^2 + y^2 along (-x, -y): <grad V, f> = -2x^2 - 2y^2
        let v = p("1*x^2 + 1*y^2");
        let lie = v.lie_derivative(&p("-1*x"), &p("-1*y"));
        assert_eq!(lie, p("-2*x^2 - 2*y^2"));
    }

    #[test]
    fn pow_and_scale() {
        assert_eq!(p("1*x + 1*y").pow(0), BivariatePolynomial::one());
        assert_eq!(
            p("1*x + 1*y").pow(2),
            p("1*x^2 + 2*x*y + 1*y^2")
        );
        assert_eq!(p("1*x^2").scale(&rat(1, 2)), p("1/2*x^2"));
    }
}
