//! Integer polynomials in one variable `t`.
//!
//! A [`PoincarePolynomial`] is the Betti-number fingerprint of a space:
//! coefficient `i` is the rank of cohomology in degree `i`. The type is a
//! general dense ℤ[t] polynomial, so it also serves as the carrier for the
//! factorization routines; nothing restricts coefficients to be nonnegative.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::zpoly;

/// Dense univariate integer polynomial, normalized (no trailing zeros).
///
/// Wire format: a JSON array of decimal coefficient strings, index = degree,
/// e.g. `["1","0","9","0","1"]` for `1 + 9t² + t⁴`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PoincarePolynomial {
    coeffs: Vec<BigInt>,
}

impl PoincarePolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![1])
    }

    /// The polynomial `t`.
    pub fn variable() -> Self {
        Self::from_coeffs(vec![0, 1])
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: Vec<T>) -> Self {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        zpoly::normalize(&mut coeffs);
        Self { coeffs }
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    pub(crate) fn from_raw(mut coeffs: Vec<BigInt>) -> Self {
        zpoly::normalize(&mut coeffs);
        Self { coeffs }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        zpoly::deg(&self.coeffs)
    }

    /// Coefficient of `t^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        zpoly::eval(&self.coeffs, x)
    }

    /// Coefficient vector reads the same in both directions. The zero
    /// polynomial counts as palindromic.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Whether this is a plausible Poincaré polynomial of a closed oriented
    /// `n`-manifold: degree `n`, constant and top coefficients 1, all
    /// coefficients nonnegative, and the duality palindrome.
    pub fn is_closed_manifold_poly(&self, n: usize) -> bool {
        self.degree() == Some(n)
            && self.coeff(0).is_one()
            && self.coeffs.iter().all(|c| !c.is_negative())
            && self.is_palindromic()
    }

    /// Signed content and primitive part (positive leading coefficient).
    pub fn primitive_parts(&self) -> (BigInt, PoincarePolynomial) {
        let (c, prim) = zpoly::primitive_part(&self.coeffs);
        (c, PoincarePolynomial { coeffs: prim })
    }

    /// Canonical ordering key: degree first, then coefficients from the
    /// constant term up. Used to keep factor multisets in a stable order.
    pub(crate) fn cmp_canonical(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

/// Exact convolution product.
pub fn poly_mul(p: &PoincarePolynomial, q: &PoincarePolynomial) -> PoincarePolynomial {
    PoincarePolynomial {
        coeffs: zpoly::mul(&p.coeffs, &q.coeffs),
    }
}

impl std::ops::Mul for &PoincarePolynomial {
    type Output = PoincarePolynomial;
    fn mul(self, rhs: &PoincarePolynomial) -> PoincarePolynomial {
        poly_mul(self, rhs)
    }
}

impl std::ops::Mul for PoincarePolynomial {
    type Output = PoincarePolynomial;
    fn mul(self, rhs: PoincarePolynomial) -> PoincarePolynomial {
        poly_mul(&self, &rhs)
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PoincarePolynomial({self})")
    }
}

impl Serialize for PoincarePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(serializer)
    }
}

/// Accepts decimal strings (the canonical form) or plain JSON integers.
#[derive(Deserialize)]
#[serde(untagged)]
pub(crate) enum JsonInt {
    Int(i64),
    Str(String),
}

impl JsonInt {
    pub(crate) fn into_bigint<E: serde::de::Error>(self) -> Result<BigInt, E> {
        match self {
            JsonInt::Int(i) => Ok(BigInt::from(i)),
            JsonInt::Str(s) => s
                .trim()
                .parse::<BigInt>()
                .map_err(|_| E::custom(format!("invalid integer literal {s:?}"))),
        }
    }
}

impl<'de> Deserialize<'de> for PoincarePolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<JsonInt>::deserialize(deserializer)?;
        let coeffs = raw
            .into_iter()
            .map(JsonInt::into_bigint)
            .collect::<Result<Vec<BigInt>, D::Error>>()?;
        Ok(PoincarePolynomial::from_raw(coeffs))
    }
}
