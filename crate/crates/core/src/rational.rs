//! Exact rationals and their string form ("p/q", or "p" when integral).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let err = || Error::Parse { what: "rational", input: s.to_string() };
    let v = match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Q::new(n, d)
        }
        None => Q::from_integer(t.parse().map_err(|_| err())?),
    };
    Ok(v)
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(if x.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

/// True if `b = lambda * a` for some nonzero rational lambda.
pub fn projectively_equal(a: &[Q], b: &[Q]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut ratio: Option<Q> = None;
    for (x, y) in a.iter().zip(b) {
        match (x.is_zero(), y.is_zero()) {
            (true, true) => {}
            (false, false) => {
                let r = y / x;
                match &ratio {
                    None => ratio = Some(r),
                    Some(r0) if *r0 == r => {}
                    Some(_) => return false,
                }
            }
            _ => return false,
        }
    }
    ratio.is_some()
}

/// serde adapter: a rational as a string.
pub mod serde_q {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(x)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(de::Error::custom)
    }
}

/// serde adapter: a slice of rationals as an array of strings.
pub mod serde_qs {
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer, const N: usize>(
        xs: &[Q; N],
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(N))?;
        for x in xs {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>, const N: usize>(
        d: D,
    ) -> std::result::Result<[Q; N], D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        if v.len() != N {
            return Err(de::Error::invalid_length(v.len(), &"fixed-length rational array"));
        }
        let parsed: Vec<Q> =
            v.iter().map(|s| parse_q(s)).collect::<Result<_>>().map_err(de::Error::custom)?;
        Ok(parsed.try_into().expect("length checked"))
    }
}
