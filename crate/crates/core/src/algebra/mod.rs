//! Exact integer algebra: polynomials over the integers with factorization,
//! matrices with rational rank, and combinatorial counting.

mod factor;
mod hensel;
mod matrix;
mod modp;
mod poly;
pub(crate) mod zpoly;

pub use factor::{is_irreducible, poly_factor, FactorMultiset, MAX_FACTOR_DEGREE};
pub use matrix::IntMatrix;
pub use poly::{poly_mul, PoincarePolynomial};

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("degree {degree} exceeds the factorization bound {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("binomial arguments out of order: k={k} > n={n}")]
    ArgumentOrder { n: u64, k: u64 },
    #[error("the zero polynomial cannot be factored")]
    ZeroPolynomial,
    #[error("irreducibility is undefined for constant polynomials")]
    ConstantPolynomial,
    #[error("matrix shape mismatch: {0}")]
    MatrixShape(String),
}

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> Result<BigUint, AlgebraError> {
    if k > n {
        return Err(AlgebraError::ArgumentOrder { n, k });
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1; // exact: i+1 consecutive integers contain a multiple of each j ≤ i+1
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 3).unwrap(), BigUint::from(10u32));
        assert_eq!(binomial(6, 3).unwrap(), BigUint::from(20u32));
        assert_eq!(binomial(8, 3).unwrap(), BigUint::from(56u32));
        assert_eq!(binomial(0, 0).unwrap(), BigUint::from(1u32));
        assert_eq!(binomial(7, 7).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn binomial_rejects_reversed_arguments() {
        assert_eq!(
            binomial(3, 5),
            Err(AlgebraError::ArgumentOrder { n: 3, k: 5 })
        );
    }

    #[test]
    fn binomial_large_exact() {
        // C(64, 32), spot value
        let v = binomial(64, 32).unwrap();
        assert_eq!(v.to_string(), "1832624140942590534");
    }
}
