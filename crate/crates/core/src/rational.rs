//! Arbitrary-precision rationals and their text form.
//!
//! `num_rational::BigRational` keeps every value reduced with a positive
//! denominator, and zero is stored as `0/1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `-?\d+(/\d+)?`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let token = text.trim();
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("malformed rational '{token}'")));
    }
    let numerator: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("malformed rational '{token}'")))?;
    let denominator = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("malformed rational '{token}'")));
            }
            let d: BigInt = d
                .parse()
                .map_err(|_| Error::Parse(format!("malformed rational '{token}'")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in '{token}'")));
            }
            d
        }
    };
    Ok(Rational::new(numerator, denominator))
}

/// Always `p/q`, including `q = 1`.
pub fn format_rational(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// `p` for integers, `p/q` otherwise.
pub fn format_rational_short(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format_rational(value)
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn sign(value: &Rational) -> i8 {
    if value.is_zero() {
        0
    } else if value.is_positive() {
        1
    } else {
        -1
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Serde adapters writing rationals as `p/q` strings.
pub mod serde_q {
    use super::{format_rational, Rational};
    use serde::ser::{SerializeSeq, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(value))
    }

    pub fn vec<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&format_rational(v))?;
        }
        seq.end()
    }

    pub fn opt<S: Serializer>(value: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => s.serialize_str(&format_rational(v)),
            None => s.serialize_none(),
        }
    }

    pub fn opt_vec<S: Serializer>(values: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
        match values {
            Some(v) => vec(v, s),
            None => s.serialize_none(),
        }
    }
}

pub fn rational_json(value: &Rational) -> serde_json::Value {
    serde_json::Value::String(format_rational(value))
}

pub fn rationals_json(values: &[Rational]) -> serde_json::Value {
    serde_json::Value::Array(values.iter().map(rational_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("1").unwrap(), int(1));
        assert_eq!(parse_rational("3/7").unwrap(), ratio(3, 7));
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational(" 5/2 ").unwrap(), ratio(5, 2));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("--1").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn reduced_form() {
        let r = parse_rational("10/4").unwrap();
        assert_eq!(format_rational(&r), "5/2");
        assert_eq!(format_rational(&int(0)), "0/1");
        assert_eq!(format_rational_short(&int(-3)), "-3");
    }
}
