//! Serde helpers for exact numeric types.
//!
//! Big integers travel as decimal strings (plain JSON integers are accepted
//! on input); rationals travel as `"n"` or `"p/q"` strings in lowest terms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};

#[derive(Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Int(i64),
    Str(String),
}

pub mod bigint_string {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        match IntRepr::deserialize(d)? {
            IntRepr::Int(i) => Ok(BigInt::from(i)),
            IntRepr::Str(s) => s
                .trim()
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid integer literal {s:?}"))),
        }
    }
}

pub mod biguint_string {
    use super::*;
    use num_bigint::BigUint;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    #[allow(dead_code)]
    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        match IntRepr::deserialize(d)? {
            IntRepr::Int(i) if i >= 0 => Ok(BigUint::from(i as u64)),
            IntRepr::Int(i) => Err(D::Error::custom(format!("expected nonnegative, got {i}"))),
            IntRepr::Str(s) => s
                .trim()
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid integer literal {s:?}"))),
        }
    }
}

/// Rationals render as `"n"` when integral, `"p/q"` in lowest terms
/// otherwise; reports are Serialize-only so no deserializer is needed.
pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_to_string(v))
    }
}

pub fn rational_to_string(v: &BigRational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_formatting() {
        let two = BigRational::new(BigInt::from(16), BigInt::from(8));
        assert_eq!(rational_to_string(&two), "2");
        let frac = BigRational::new(BigInt::from(-7), BigInt::from(8));
        assert_eq!(rational_to_string(&frac), "-7/8");
    }
}
