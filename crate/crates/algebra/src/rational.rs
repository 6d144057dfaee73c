use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::AlgebraError;

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`. Whitespace around the parts is ignored.
pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let bad = || AlgebraError::Parse(s.to_string());
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p = BigInt::from_str(p).map_err(|_| bad())?;
    let q = BigInt::from_str(q).map_err(|_| bad())?;
    if q.is_zero() {
        return Err(AlgebraError::DivisionByZero(format!("denominator in {s:?}")));
    }
    Ok(Rational::new(p, q))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Number of bits in numerator plus denominator; a rough size measure used in reports.
pub fn bit_size(r: &Rational) -> u64 {
    r.numer().abs().bits() + r.denom().bits()
}

/// Serde adapter that stores a rational as its `"p/q"` string.
pub mod as_string {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3/4", "10/4"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
        assert_eq!(format_rational(&parse_rational("10/4").unwrap()), "5/2");
        assert_eq!(format_rational(&parse_rational("6/-3").unwrap()), "-2");
        assert_eq!(format_rational(&int(0)), "0");
    }

    #[test]
    fn rejects_garbage_and_zero_denominator() {
        assert!(matches!(parse_rational("1/0"), Err(AlgebraError::DivisionByZero(_))));
        assert!(matches!(parse_rational("x"), Err(AlgebraError::Parse(_))));
        assert!(parse_rational("1/2/3").is_err());
    }
}
