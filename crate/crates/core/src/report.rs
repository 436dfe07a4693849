//! Serialization glue for report documents.
//!
//! All exact values cross the serialization boundary as strings: rationals
//! as `p/q`, polynomials in the term text format, univariate chain entries as
//! coefficient vectors. This keeps the emitted documents human-diffable and
//! guarantees byte-identical output for identical runs.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::poly::BivariatePolynomial;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::unipoly::UniPoly;

pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(D::Error::custom)
    }
}

pub mod serde_rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = v.iter().map(format_rational).collect();
        strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings
            .iter()
            .map(|t| parse_rational(t).map_err(D::Error::custom))
            .collect()
    }
}

pub mod serde_opt_rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        r.as_ref().map(format_rational).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Option<Rational>, D::Error> {
        let text = Option::<String>::deserialize(d)?;
        text.map(|t| parse_rational(&t).map_err(D::Error::custom))
            .transpose()
    }
}

pub mod serde_opt_interval {
    use super::*;

    pub fn serialize<S: Serializer>(
        v: &Option<(Rational, Rational)>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        v.as_ref()
            .map(|(lo, hi)| [format_rational(lo), format_rational(hi)])
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Option<(Rational, Rational)>, D::Error> {
        let pair = Option::<[String; 2]>::deserialize(d)?;
        pair.map(|[lo, hi]| {
            Ok((
                parse_rational(&lo).map_err(D::Error::custom)?,
                parse_rational(&hi).map_err(D::Error::custom)?,
            ))
        })
        .transpose()
    }
}

/// Same wire format as [`serde_opt_interval`]; used where the pair is a
/// point in the plane rather than an interval.
pub use serde_opt_interval as serde_opt_point;

/// A required pair of rationals, serialized as two `p/q` strings; used for
/// points in the plane.
pub mod serde_point {
    use super::*;

    pub fn serialize<S: Serializer>(
        v: &(Rational, Rational),
        s: S,
    ) -> Result<S::Ok, S::Error> {
        [format_rational(&v.0), format_rational(&v.1)].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<(Rational, Rational), D::Error> {
        let [x, y] = <[String; 2]>::deserialize(d)?;
        Ok((
            parse_rational(&x).map_err(D::Error::custom)?,
            parse_rational(&y).map_err(D::Error::custom)?,
        ))
    }
}

pub mod serde_poly {
    use super::*;

    pub fn serialize<S: Serializer>(p: &BivariatePolynomial, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&p.render())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BivariatePolynomial, D::Error> {
        let text = String::deserialize(d)?;
        BivariatePolynomial::parse(&text).map_err(D::Error::custom)
    }
}

pub mod serde_poly_vec {
    use super::*;

    pub fn serialize<S: Serializer>(
        v: &[BivariatePolynomial],
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = v.iter().map(BivariatePolynomial::render).collect();
        strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Vec<BivariatePolynomial>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings
            .iter()
            .map(|t| BivariatePolynomial::parse(t).map_err(D::Error::custom))
            .collect()
    }
}

pub mod serde_opt_poly {
    use super::*;

    pub fn serialize<S: Serializer>(
        p: &Option<BivariatePolynomial>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        p.as_ref().map(BivariatePolynomial::render).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Option<BivariatePolynomial>, D::Error> {
        let text = Option::<String>::deserialize(d)?;
        text.map(|t| BivariatePolynomial::parse(&t).map_err(D::Error::custom))
            .transpose()
    }
}

pub mod serde_chain {
    use super::*;

    pub fn serialize<S: Serializer>(chain: &[UniPoly], s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = chain
            .iter()
            .map(|p| p.coeffs().iter().map(format_rational).collect())
            .collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<UniPoly>, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        rows.iter()
            .map(|row| {
                let coeffs = row
                    .iter()
                    .map(|t| parse_rational(t).map_err(D::Error::custom))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(UniPoly::new(coeffs))
            })
            .collect()
    }
}
