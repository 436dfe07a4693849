//! Dense univariate polynomials over the rationals, supporting the exact
//! real-root machinery: Euclidean division, greatest common divisors,
//! square-free parts, and root bounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{rat_int, Rational};

/// Univariate polynomial as coefficients by ascending power.
/// Canonical form: no trailing zero coefficients (zero polynomial = empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_ints(ints: &[i64]) -> Self {
        Self::new(ints.iter().map(|&n| rat_int(n)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn evaluate(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat_int(k as i64))
            .collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Rational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            for (b, cb) in other.coeffs.iter().enumerate() {
                coeffs[a + b] += ca * cb;
            }
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|k| k * c).collect())
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    /// Panics on division by the zero polynomial.
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "univariate division by zero polynomial");
        let dlead = div.leading().unwrap().clone();
        let ddeg = div.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![
            Rational::zero();
            self.coeffs.len().saturating_sub(div.coeffs.len()) + 1
        ];
        while rem.len() >= div.coeffs.len() && !rem.is_empty() {
            let shift = rem.len() - div.coeffs.len();
            let factor = rem.last().unwrap() / &dlead;
            if !factor.is_zero() {
                quot[shift] = factor.clone();
                for (k, c) in div.coeffs.iter().enumerate() {
                    rem[shift + k] -= &factor * c;
                }
            }
            // The leading entry cancels exactly.
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            while rem.last().is_some_and(Rational::is_zero) {
                rem.pop();
            }
            if rem.len() <= ddeg {
                break;
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    /// `gcd(0, 0)` is the zero polynomial.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            None => a,
            Some(lead) => {
                let inv = Rational::one() / lead.clone();
                a.scale(&inv)
            }
        }
    }

    /// Square-free part `self / gcd(self, self')`, normalized monic.
    pub fn square_free_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        let inv = Rational::one() / q.leading().unwrap().clone();
        q.scale(&inv)
    }

    /// Scale to an integer-coefficient polynomial with content 1, preserving
    /// sign. Controls coefficient growth inside remainder sequences.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let denom_lcm = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * &denom_lcm / c.denom())
            .collect();
        let content = ints
            .iter()
            .filter(|n| !n.is_zero())
            .fold(BigInt::zero(), |acc, n| acc.gcd(n));
        let scale = Rational::new(denom_lcm, content);
        self.scale(&scale)
    }

    /// Cauchy root bound: all real roots lie in `(-B, B)`.
    pub fn root_bound(&self) -> Rational {
        match self.leading() {
            None => Rational::one(),
            Some(lead) => {
                let mut max = Rational::zero();
                for c in &self.coeffs[..self.coeffs.len() - 1] {
                    let ratio = (c / lead).abs();
                    if ratio > max {
                        max = ratio;
                    }
                }
                max + Rational::one()
            }
        }
    }

    /// Sign of the polynomial at `+inf`: sign of the leading coefficient.
    pub fn sign_at_pos_inf(&self) -> i32 {
        self.leading().map_or(0, crate::rational::sign)
    }

    /// Sign at `-inf`: leading sign flipped for odd degree.
    pub fn sign_at_neg_inf(&self) -> i32 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = self.sign_at_pos_inf();
                if d % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn division_with_remainder() {
        // t^3 - 1 = (t - 1)(t^2 + t + 1)
        let p = UniPoly::from_ints(&[-1, 0, 0, 1]);
        let d = UniPoly::from_ints(&[-1, 1]);
        let (q, r) = p.div_rem(&d);
        assert_eq!(q, UniPoly::from_ints(&[1, 1, 1]));
        assert!(r.is_zero());

        // t^2 + 1 = (t/2)(2t) + 1
        let p = UniPoly::from_ints(&[1, 0, 1]);
        let d = UniPoly::from_ints(&[0, 2]);
        let (q, r) = p.div_rem(&d);
        assert_eq!(q, UniPoly::new(vec![rat_int(0), rat(1, 2)]));
        assert_eq!(r, UniPoly::from_ints(&[1]));
    }

    #[test]
    fn gcd_of_shared_factor() {
        // gcd((t-1)(t-2), (t-1)(t+3)) = t - 1 (monic)
        let a = UniPoly::from_ints(&[-1, 1]).mul(&UniPoly::from_ints(&[-2, 1]));
        let b = UniPoly::from_ints(&[-1, 1]).mul(&UniPoly::from_ints(&[3, 1]));
        assert_eq!(a.gcd(&b), UniPoly::from_ints(&[-1, 1]));
        // Coprime inputs give gcd 1.
        let c = UniPoly::from_ints(&[1, 0, 1]);
        let d = UniPoly::from_ints(&[-1, 1]);
        assert_eq!(c.gcd(&d), UniPoly::from_ints(&[1]));
    }

    #[test]
    fn square_free_part_strips_multiplicity() {
        // (t-1)^2 (t+2) -> monic multiple of (t-1)(t+2)
        let sq = UniPoly::from_ints(&[-1, 1])
            .mul(&UniPoly::from_ints(&[-1, 1]))
            .mul(&UniPoly::from_ints(&[2, 1]));
        let sf = sq.square_free_part();
        assert_eq!(
            sf,
            UniPoly::from_ints(&[-1, 1]).mul(&UniPoly::from_ints(&[2, 1]))
        );
    }

    #[test]
    fn primitive_normalization() {
        let p = UniPoly::new(vec![rat(1, 2), rat(3, 4)]);
        // (1/2, 3/4) -> lcm denominators 4 -> (2, 3), content 1
        assert_eq!(p.primitive(), UniPoly::from_ints(&[2, 3]));
        let q = UniPoly::from_ints(&[-4, -6]);
        assert_eq!(q.primitive(), UniPoly::from_ints(&[-2, -3]));
    }

    #[test]
    fn root_bound_contains_roots() {
        // t^2 - 4: roots +-2, bound 1 + 4 = 5
        let p = UniPoly::from_ints(&[-4, 0, 1]);
        assert_eq!(p.root_bound(), rat_int(5));
    }

    #[test]
    fn signs_at_infinity() {
        let p = UniPoly::from_ints(&[0, 0, 0, -2]); // -2t^3
        assert_eq!(p.sign_at_pos_inf(), -1);
        assert_eq!(p.sign_at_neg_inf(), 1);
        let q = UniPoly::from_ints(&[1, 0, 3]); // 3t^2 + 1
        assert_eq!(q.sign_at_pos_inf(), 1);
        assert_eq!(q.sign_at_neg_inf(), 1);
    }
}
