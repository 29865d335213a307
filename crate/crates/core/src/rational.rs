//! Exact rational helpers shared by every module.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserializer, Serializer};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse rational from {0:?}")]
pub struct ParseRationalError(pub String);

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `num/den` in lowest terms, always with an explicit denominator.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `p/q`, a bare integer `p`, and surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| err())?;
            let q: BigInt = q.trim().parse().map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = t.parse().map_err(|_| err())?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// Binomial coefficient with the convention `C(p, q) = 0` whenever `q < 0`,
/// `p < 0` or `p < q`.
pub fn binomial(p: i64, q: i64) -> BigInt {
    if q < 0 || p < 0 || p < q {
        return BigInt::zero();
    }
    let q = q.min(p - q);
    let mut acc = BigInt::one();
    for k in 0..q {
        acc *= BigInt::from(p - k);
        acc /= BigInt::from(k + 1);
    }
    acc
}

pub fn binomial_usize(p: i64, q: i64) -> usize {
    binomial(p, q)
        .to_usize()
        .expect("binomial coefficient does not fit in usize")
}

/// Clears denominators and divides out the content, keeping orientation.
/// Returns `None` for the zero vector.
pub fn primitive_integer_vector(v: &[Rational]) -> Option<Vec<BigInt>> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Some(scaled.into_iter().map(|x| x / &g).collect())
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn to_rationals(v: &[BigInt]) -> Vec<Rational> {
    v.iter().cloned().map(Rational::from_integer).collect()
}

pub fn is_nonnegative(q: &Rational) -> bool {
    !q.is_negative()
}

/// Serde adapter: rationals travel as `"num/den"` strings.
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Rational;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational as \"num/den\" or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
                parse_rational(v).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
                Ok(int(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
                Ok(Rational::from_integer(BigInt::from(v)))
            }
        }
        d.deserialize_any(V)
    }
}

pub mod serde_rational_vec {
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::Deserialize;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&format_rational(q))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rational(s).map_err(de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(40, 20), "137846528820".parse::<BigInt>().unwrap());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&frac(14, 5)), "14/5");
        assert_eq!(format_rational(&int(3)), "3/1");
        assert_eq!(format_rational(&frac(-4, 6)), "-2/3");
        assert_eq!(parse_rational(" 10/4 ").unwrap(), frac(5, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn primitive_vectors_keep_orientation() {
        let v = [frac(-1, 2), frac(3, 4), int(0)];
        let p = primitive_integer_vector(&v).unwrap();
        assert_eq!(p, vec![BigInt::from(-2), BigInt::from(3), BigInt::from(0)]);
        assert!(primitive_integer_vector(&[int(0), int(0)]).is_none());
    }
}
