//! Counting diffeotypes of k-fold products of the rational surfaces
//! `CP² # (9-ℓ) CP²bar`, ℓ ∈ {1,2,3,4}, by Poincaré-polynomial arithmetic.
//!
//! Each factor contributes the quartic `1 + (10-ℓ)t² + t⁴`; these quartics
//! are irreducible over ℤ, so unique factorization in ℤ[t] makes the product
//! polynomial separate distinct multisets of factors. In dimension 4k ≥ 8
//! the h-cobordism theorem applies, so the count is a lower bound on
//! diffeotypes realized by such products.

use num_bigint::BigUint;
use serde::Serialize;

use super::four::{four_invariants, FourManifoldDesc};
use super::ManifoldError;
use crate::algebra::{binomial, is_irreducible, poly_mul, PoincarePolynomial};

/// Poincaré polynomial `1 + (10-ℓ)t² + t⁴` of `CP² # (9-ℓ) CP²bar`.
pub fn product_factor_poly(ell: u8) -> PoincarePolynomial {
    let desc = FourManifoldDesc::new(1, 9 - u32::from(ell), false, "");
    four_invariants(&desc).poincare
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductWitness {
    /// Sorted multiset of the chosen ℓ values.
    pub multiset: Vec<u8>,
    /// Poincaré polynomial of the corresponding 4k-manifold product.
    pub poincare: PoincarePolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductCount {
    /// Number of distinct product Poincaré polynomials.
    pub count: u64,
    /// `C(k + |ells| - 1, |ells| - 1)`, the multiset count.
    #[serde(with = "crate::serde_util::biguint_string")]
    pub expected_binomial: BigUint,
    /// Whether every factor quartic was confirmed irreducible over ℤ (the
    /// unique-factorization argument that separates multisets).
    pub quartics_irreducible: bool,
    pub witnesses: Vec<ProductWitness>,
}

/// Enumerate all size-`k` multisets over `ells`, form each product Poincaré
/// polynomial, and count distinct polynomials.
pub fn product_diffeotype_count(ells: &[u8], k: u32) -> Result<ProductCount, ManifoldError> {
    if k < 2 {
        return Err(ManifoldError::KTooSmall(k));
    }
    let mut ells: Vec<u8> = ells.to_vec();
    ells.sort_unstable();
    ells.dedup();
    if ells.is_empty() {
        return Err(ManifoldError::EmptyEllSet);
    }
    if let Some(&bad) = ells.iter().find(|&&e| !(1..=4).contains(&e)) {
        return Err(ManifoldError::InvalidEll(bad));
    }

    let quartics_irreducible = ells
        .iter()
        .all(|&e| is_irreducible(&product_factor_poly(e)).expect("quartic has degree 4"));

    let mut witnesses = Vec::new();
    let mut multiset = Vec::with_capacity(k as usize);
    enumerate_multisets(&ells, k as usize, 0, &mut multiset, &mut witnesses);

    let mut distinct: Vec<&PoincarePolynomial> = witnesses.iter().map(|w| &w.poincare).collect();
    distinct.sort_by(|a, b| a.cmp_canonical(b));
    distinct.dedup();

    let s = ells.len() as u64;
    let expected_binomial = binomial(u64::from(k) + s - 1, s - 1).expect("k + s - 1 >= s - 1");

    Ok(ProductCount {
        count: distinct.len() as u64,
        expected_binomial,
        quartics_irreducible,
        witnesses,
    })
}

fn enumerate_multisets(
    ells: &[u8],
    k: usize,
    start: usize,
    current: &mut Vec<u8>,
    out: &mut Vec<ProductWitness>,
) {
    if current.len() == k {
        let poincare = current
            .iter()
            .map(|&e| product_factor_poly(e))
            .fold(PoincarePolynomial::one(), |acc, p| poly_mul(&acc, &p));
        out.push(ProductWitness {
            multiset: current.clone(),
            poincare,
        });
        return;
    }
    for i in start..ells.len() {
        current.push(ells[i]);
        enumerate_multisets(ells, k, i, current, out);
        current.pop();
    }
}
