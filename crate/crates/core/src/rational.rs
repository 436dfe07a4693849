//! Exact scalar arithmetic: arbitrary-precision rationals and Gaussian
//! rationals (complex numbers with rational real and imaginary parts).
//!
//! `Rational` values are always kept in lowest terms with a positive
//! denominator; that canonical form is maintained by the underlying
//! big-rational type on every operation.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in lowest terms.
pub type Rational = BigRational;

/// Complex number with exact rational real and imaginary parts.
///
/// Arithmetic (addition, multiplication, conjugation) stays inside the field,
/// so equality against zero is an exact test on both components.
pub type GaussianRational = Complex<Rational>;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics if `q == 0`; intended for literals in code and tests.
pub fn rat(p: i64, q: i64) -> Rational {
    assert!(q != 0, "rational literal with zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// The imaginary unit as a Gaussian rational.
pub fn gaussian_i() -> GaussianRational {
    Complex::new(Rational::zero(), Rational::one())
}

/// Gaussian rational from two rationals.
pub fn gaussian(re: Rational, im: Rational) -> GaussianRational {
    Complex::new(re, im)
}

/// Exact zero test for a Gaussian rational.
pub fn gaussian_is_zero(z: &GaussianRational) -> bool {
    z.re.is_zero() && z.im.is_zero()
}

/// Parse a rational from `p/q` or integer text, e.g. `-3/7`, `12`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    let mk = |txt: &str| -> Result<BigInt> {
        txt.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad integer literal `{txt}`")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(mk(s)?)),
        Some((num, den)) => {
            let d = mk(den)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(mk(num)?, d))
        }
    }
}

/// Render a rational as `p/q`, or just `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Convert to `f64` (for simulation and plotting only; may round).
pub fn rational_to_f64(r: &Rational) -> f64 {
    // num-rational's conversion handles magnitudes beyond f64 by saturating
    // through the float path of numerator/denominator separately.
    let num = big_to_f64(r.numer());
    let den = big_to_f64(r.denom());
    num / den
}

fn big_to_f64(b: &BigInt) -> f64 {
    // Walk through string conversion only when the magnitude is large enough
    // to overflow i128; exact for all values used in practice.
    if let Ok(small) = i128::try_from(b.clone()) {
        small as f64
    } else {
        b.to_string().parse::<f64>().unwrap_or(if b.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        })
    }
}

/// Sign of a rational as -1, 0, or +1.
pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["3/4", "-3/4", "0", "17", "-22/7"] {
            let r = parse_rational(text).unwrap();
            assert_eq!(format_rational(&r), text);
        }
        // Non-canonical input normalizes.
        assert_eq!(format_rational(&parse_rational("6/8").unwrap()), "3/4");
        assert_eq!(format_rational(&parse_rational("5/-10").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn gaussian_arithmetic_is_exact() {
        let i = gaussian_i();
        // i^2 = -1
        let i2 = i.clone() * i.clone();
        assert_eq!(i2, gaussian(rat_int(-1), rat_int(0)));
        // i^4 = 1
        let i4 = i2.clone() * i2;
        assert_eq!(i4, gaussian(rat_int(1), rat_int(0)));
        // conjugation
        let z = gaussian(rat(1, 2), rat(-3, 4));
        assert_eq!(z.conj(), gaussian(rat(1, 2), rat(3, 4)));
        // exact zero test: i^2 + 1 = 0
        let w = i.clone() * i + gaussian(rat_int(1), rat_int(0));
        assert!(gaussian_is_zero(&w));
    }

    #[test]
    fn conversion_to_f64() {
        assert_eq!(rational_to_f64(&rat(1, 2)), 0.5);
        assert_eq!(rational_to_f64(&rat(-7, 4)), -1.75);
    }
}
