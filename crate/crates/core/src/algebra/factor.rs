//! Exact factorization over the integers.
//!
//! Pipeline: content/primitive split, `t^k` strip, Yun squarefree
//! decomposition, then for each squarefree part a modular factorization
//! (Berlekamp mod a small good prime), quadratic Hensel lifting past a
//! Mignotte-style coefficient bound, and subset recombination. Recombination
//! is worst-case exponential in the number of modular factors (2^r subsets),
//! which is why degrees are capped at [`MAX_FACTOR_DEGREE`]; every use in
//! this crate stays far below that.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::modp::{berlekamp, is_squarefree_mod, ModPoly};
use super::poly::PoincarePolynomial;
use super::zpoly;
use super::{hensel, AlgebraError};

/// Desk-scale cap on factorization inputs.
pub const MAX_FACTOR_DEGREE: usize = 64;

/// A complete factorization: `content × Π factorᵢ^multᵢ` reproduces the
/// input exactly. Factors are primitive irreducible polynomials with positive
/// leading coefficient, kept in a canonical order (degree, then
/// coefficients), so equality is plain multiset equality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorMultiset {
    #[serde(with = "crate::serde_util::bigint_string")]
    content: BigInt,
    factors: Vec<(PoincarePolynomial, u32)>,
}

impl FactorMultiset {
    fn new(content: BigInt, mut factors: Vec<(PoincarePolynomial, u32)>) -> Self {
        factors.sort_by(|a, b| a.0.cmp_canonical(&b.0));
        Self { content, factors }
    }

    pub fn content(&self) -> &BigInt {
        &self.content
    }

    /// `(factor, multiplicity)` pairs in canonical order.
    pub fn factors(&self) -> &[(PoincarePolynomial, u32)] {
        &self.factors
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn total_multiplicity(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    /// Reassemble `content × Π factorᵢ^multᵢ`.
    pub fn product(&self) -> PoincarePolynomial {
        let mut acc = PoincarePolynomial::constant(self.content.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * f;
            }
        }
        acc
    }
}

/// Factor a nonzero integer polynomial into content and primitive
/// irreducibles.
pub fn poly_factor(p: &PoincarePolynomial) -> Result<FactorMultiset, AlgebraError> {
    let degree = p.degree().ok_or(AlgebraError::ZeroPolynomial)?;
    if degree > MAX_FACTOR_DEGREE {
        return Err(AlgebraError::DegreeTooLarge {
            degree,
            max: MAX_FACTOR_DEGREE,
        });
    }
    let (content, prim) = zpoly::primitive_part(p.coeffs());
    let mut factors: Vec<(PoincarePolynomial, u32)> = Vec::new();

    // t^k strip: k = number of leading zero coefficients
    let k = prim.iter().take_while(|c| c.is_zero()).count();
    if k > 0 {
        factors.push((PoincarePolynomial::variable(), k as u32));
    }
    // core is primitive with nonzero constant term; degree 0 means core == [1]
    let core: Vec<BigInt> = prim[k..].to_vec();
    if let Some(d) = zpoly::deg(&core) {
        if d >= 1 {
            for (squarefree, mult) in squarefree_decompose(core) {
                for irr in factor_squarefree(squarefree) {
                    factors.push((PoincarePolynomial::from_raw(irr), mult));
                }
            }
        }
    }
    Ok(FactorMultiset::new(content, factors))
}

/// Whether the primitive part admits no factorization into lower-degree
/// integer polynomials.
pub fn is_irreducible(p: &PoincarePolynomial) -> Result<bool, AlgebraError> {
    match p.degree() {
        None => Err(AlgebraError::ZeroPolynomial),
        Some(0) => Err(AlgebraError::ConstantPolynomial),
        Some(d) if d > MAX_FACTOR_DEGREE => Err(AlgebraError::DegreeTooLarge {
            degree: d,
            max: MAX_FACTOR_DEGREE,
        }),
        Some(_) => {
            let fs = poly_factor(p)?;
            Ok(fs.factors().len() == 1 && fs.factors()[0].1 == 1)
        }
    }
}

/// Yun's algorithm: `u = Π aᵢ^i` with the `aᵢ` squarefree, primitive,
/// pairwise coprime. Input must be primitive with positive leading
/// coefficient, nonzero constant term, and degree ≥ 1.
fn squarefree_decompose(u: Vec<BigInt>) -> Vec<(Vec<BigInt>, u32)> {
    let du = zpoly::derivative(&u);
    let g = zpoly::gcd_primitive(&u, &du);
    if zpoly::deg(&g) == Some(0) {
        return vec![(u, 1)];
    }
    let mut out = Vec::new();
    let mut w = zpoly::div_exact(&u, &g).expect("gcd divides u");
    let mut y = zpoly::div_exact(&du, &g).expect("gcd divides u'");
    let mut i = 1u32;
    loop {
        let z = zpoly::sub(&y, &zpoly::derivative(&w));
        if z.is_empty() {
            if zpoly::deg(&w).is_some_and(|d| d >= 1) {
                out.push((w, i));
            }
            break;
        }
        let a = zpoly::gcd_primitive(&w, &z);
        if zpoly::deg(&a).is_some_and(|d| d >= 1) {
            out.push((a.clone(), i));
        }
        w = zpoly::div_exact(&w, &a).expect("a divides w");
        y = zpoly::div_exact(&z, &a).expect("a divides z");
        i += 1;
    }
    out
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Mignotte-style bound: any divisor `g` of `s` over ℤ with `lc(g) | lc(s)`
/// has `‖lc(s)/lc(g)·g‖∞ ≤ 2^n (n+1) ‖s‖∞ |lc(s)|` where `n = deg s`. The
/// lifting modulus must exceed twice this so symmetric residues recover the
/// true coefficients.
fn coefficient_bound(s: &[BigInt]) -> BigInt {
    let n = s.len() - 1;
    let height = s.iter().map(|c| c.abs()).max().unwrap();
    let lc = zpoly::leading(s).abs();
    (BigInt::one() << n) * BigInt::from(n + 1) * height * lc * 2 + 1
}

fn symmetric_residue(c: &BigInt, m: &BigInt) -> BigInt {
    let mut r = c % m;
    if r.is_negative() {
        r += m;
    }
    if &r * 2 > *m {
        r -= m;
    }
    r
}

/// Factor a primitive squarefree polynomial (positive leading coefficient,
/// nonzero constant term, degree ≥ 1) into primitive irreducibles.
fn factor_squarefree(s: Vec<BigInt>) -> Vec<Vec<BigInt>> {
    let n = zpoly::deg(&s).expect("nonzero input");
    if n == 1 {
        return vec![s];
    }

    // Pick a good small prime: p ∤ lc(s) and s squarefree mod p. Among the
    // first few good primes keep the one giving the fewest modular factors,
    // since recombination is 2^r in that count.
    let lc = zpoly::leading(&s).clone();
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut tried = 0;
    let mut candidate = 3u64;
    while tried < 3 {
        if is_prime_u64(candidate) && !(&lc % candidate).is_zero() {
            let sp = ModPoly::from_bigints(candidate, &s);
            if sp.deg() == Some(n) && is_squarefree_mod(&sp) {
                let factors = berlekamp(&sp.monic());
                tried += 1;
                let better = best.as_ref().is_none_or(|(_, bf)| factors.len() < bf.len());
                if better {
                    best = Some((candidate, factors));
                }
                if best.as_ref().unwrap().1.len() == 1 {
                    break;
                }
            }
        }
        candidate += 2;
    }
    let (p, modular) = best.expect("a good prime exists for a squarefree polynomial");
    if modular.len() == 1 {
        return vec![s];
    }

    let bound = coefficient_bound(&s);
    let (modulus, lifted) = hensel::lift_factorization(&s, p, &modular, &bound);
    recombine(s, lifted, &modulus)
}

/// Try subsets of the lifted modular factors in order of increasing
/// cardinality; a subset whose symmetric-residue product divides the
/// remaining polynomial is a true irreducible factor.
fn recombine(mut s: Vec<BigInt>, mut pool: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut k = 1usize;
    while 2 * k <= pool.len() {
        let mut combo = first_combination(k);
        let mut found = false;
        loop {
            if let Some(g) = candidate_factor(&s, &pool, &combo, modulus) {
                if let Some(q) = zpoly::div_exact(&s, &g) {
                    out.push(g);
                    let (_, q_prim) = zpoly::primitive_part(&q);
                    s = q_prim;
                    remove_indices(&mut pool, &combo);
                    found = true;
                    break;
                }
            }
            if !next_combination(&mut combo, pool.len()) {
                break;
            }
        }
        if !found {
            k += 1;
        }
    }
    if zpoly::deg(&s).is_some_and(|d| d >= 1) {
        out.push(s);
    }
    out
}

fn candidate_factor(
    s: &[BigInt],
    pool: &[Vec<BigInt>],
    combo: &[usize],
    modulus: &BigInt,
) -> Option<Vec<BigInt>> {
    let target_deg: usize = combo.iter().map(|&i| pool[i].len() - 1).sum();
    if target_deg == 0 || 2 * target_deg > s.len() - 1 {
        return None;
    }
    let mut prod = vec![zpoly::leading(s).clone()];
    for &i in combo {
        prod = zpoly::mul(&prod, &pool[i])
            .into_iter()
            .map(|c| {
                let mut r = &c % modulus;
                if r.is_negative() {
                    r += modulus;
                }
                r
            })
            .collect();
    }
    let sym: Vec<BigInt> = prod.iter().map(|c| symmetric_residue(c, modulus)).collect();
    let (_, prim) = zpoly::primitive_part(&sym);
    if zpoly::deg(&prim) != Some(target_deg) {
        return None;
    }
    Some(prim)
}

fn first_combination(k: usize) -> Vec<usize> {
    (0..k).collect()
}

/// Lexicographic successor of a k-combination of {0..n-1}; false when done.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn remove_indices(pool: &mut Vec<Vec<BigInt>>, combo: &[usize]) {
    for &i in combo.iter().rev() {
        pool.remove(i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly_mul;

    fn poly(v: &[i64]) -> PoincarePolynomial {
        PoincarePolynomial::from_coeffs(v.to_vec())
    }

    fn quartic(b2: i64) -> PoincarePolynomial {
        poly(&[1, 0, b2, 0, 1])
    }

    #[test]
    fn factor_standard_quartic() {
        // t^4 - 1 = (t - 1)(t + 1)(t^2 + 1)
        let fs = poly_factor(&poly(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(*fs.content(), BigInt::one());
        let expect = vec![
            (poly(&[-1, 1]), 1),
            (poly(&[1, 1]), 1),
            (poly(&[1, 0, 1]), 1),
        ];
        assert_eq!(fs.factors(), expect.as_slice());
        assert_eq!(fs.product(), poly(&[-1, 0, 0, 0, 1]));
    }

    #[test]
    fn factor_product_of_two_quartics() {
        let p = poly_mul(&quartic(9), &quartic(8));
        let fs = poly_factor(&p).unwrap();
        assert_eq!(fs.factors(), &[(quartic(8), 1), (quartic(9), 1)]);
    }

    #[test]
    fn factor_with_content_sign_and_power_of_t() {
        // -6t^2(1+t)^2
        let p = poly(&[0, 0, -6, -12, -6]);
        let fs = poly_factor(&p).unwrap();
        assert_eq!(*fs.content(), BigInt::from(-6));
        assert_eq!(
            fs.factors(),
            &[(PoincarePolynomial::variable(), 2), (poly(&[1, 1]), 2)]
        );
        assert_eq!(fs.product(), p);
    }

    #[test]
    fn irreducibility_examples() {
        for ell in 1..=4i64 {
            assert!(is_irreducible(&quartic(10 - ell)).unwrap(), "ell={ell}");
        }
        assert!(!is_irreducible(&poly(&[1, 2, 1])).unwrap()); // (1+t)^2
        assert!(is_irreducible(&quartic(4)).unwrap());
        assert!(is_irreducible(&poly(&[3, 2])).unwrap()); // 3 + 2t, degree 1
        assert!(!is_irreducible(&poly(&[0, 0, 1])).unwrap()); // t^2
        assert!(is_irreducible(&poly(&[0, 7])).unwrap()); // 7t: primitive part is t
    }

    #[test]
    fn irreducibility_rejects_constants_and_huge_degrees() {
        assert!(matches!(
            is_irreducible(&PoincarePolynomial::one()),
            Err(AlgebraError::ConstantPolynomial)
        ));
        assert!(matches!(
            is_irreducible(&PoincarePolynomial::zero()),
            Err(AlgebraError::ZeroPolynomial)
        ));
        let mut coeffs = vec![0i64; 66];
        coeffs[0] = 1;
        coeffs[65] = 1;
        assert!(matches!(
            poly_factor(&poly(&coeffs)),
            Err(AlgebraError::DegreeTooLarge {
                degree: 65,
                max: 64
            })
        ));
    }

    #[test]
    fn squarefree_structure_via_multiplicities() {
        // (1+t)^3 (2 - t)
        let cube = poly_mul(&poly_mul(&poly(&[1, 1]), &poly(&[1, 1])), &poly(&[1, 1]));
        let p = poly_mul(&cube, &poly(&[2, -1]));
        let fs = poly_factor(&p).unwrap();
        assert_eq!(*fs.content(), BigInt::from(-1));
        assert_eq!(fs.factors(), &[(poly(&[-2, 1]), 1), (poly(&[1, 1]), 3)]);
        assert_eq!(fs.product(), p);
    }

    #[test]
    fn repeated_non_monic_factor() {
        // -4 (3t^2 + 2t + 5)^2 (2t + 7)
        let quad = poly(&[5, 2, 3]);
        let p = poly_mul(
            &poly_mul(&poly_mul(&quad, &quad), &poly(&[7, 2])),
            &poly(&[-4]),
        );
        let fs = poly_factor(&p).unwrap();
        assert_eq!(*fs.content(), BigInt::from(-4));
        assert_eq!(fs.factors(), &[(poly(&[7, 2]), 1), (quad, 2)]);
        assert_eq!(fs.product(), p);
    }

    #[test]
    fn factors_at_the_degree_bound() {
        // t^64 - 1 splits into the seven cyclotomic-product factors
        let mut coeffs = vec![0i64; 65];
        coeffs[0] = -1;
        coeffs[64] = 1;
        let p = poly(&coeffs);
        let fs = poly_factor(&p).unwrap();
        assert_eq!(fs.factors().len(), 7);
        assert_eq!(fs.product(), p);
        let degrees: Vec<usize> = fs
            .factors()
            .iter()
            .map(|(f, _)| f.degree().unwrap())
            .collect();
        assert_eq!(degrees, vec![1, 1, 2, 4, 8, 16, 32]);
    }

    #[test]
    fn recombination_rejects_modular_ghost_factors() {
        // t^4 + 1 factors mod every prime but is irreducible over Z
        assert!(is_irreducible(&poly(&[1, 0, 0, 0, 1])).unwrap());
        let fs = poly_factor(&poly(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(fs.factors().len(), 1);

        // t^8 - 16 = (t^2-2)(t^2-2t+2)(t^2+2)(t^2+2t+2)
        let p = poly(&[-16, 0, 0, 0, 0, 0, 0, 0, 1]);
        let fs = poly_factor(&p).unwrap();
        assert_eq!(
            fs.factors(),
            &[
                (poly(&[-2, 0, 1]), 1),
                (poly(&[2, -2, 1]), 1),
                (poly(&[2, 0, 1]), 1),
                (poly(&[2, 2, 1]), 1),
            ]
        );
        assert_eq!(fs.product(), p);

        // (t^2-2)(t^2-3)(t^2-6): quadratic surds multiply to a rational,
        // so wrong pairings divide modularly but not over Z
        let p = poly_mul(
            &poly_mul(&poly(&[-2, 0, 1]), &poly(&[-3, 0, 1])),
            &poly(&[-6, 0, 1]),
        );
        let fs = poly_factor(&p).unwrap();
        assert_eq!(
            fs.factors(),
            &[
                (poly(&[-6, 0, 1]), 1),
                (poly(&[-3, 0, 1]), 1),
                (poly(&[-2, 0, 1]), 1),
            ]
        );
    }

    #[test]
    fn pure_power_of_t_at_the_bound() {
        let mut coeffs = vec![0i64; 65];
        coeffs[64] = 3;
        let fs = poly_factor(&poly(&coeffs)).unwrap();
        assert_eq!(*fs.content(), BigInt::from(3));
        assert_eq!(fs.factors(), &[(PoincarePolynomial::variable(), 64)]);
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert!(matches!(
            poly_factor(&PoincarePolynomial::zero()),
            Err(AlgebraError::ZeroPolynomial)
        ));
    }

    #[test]
    fn constant_polynomial_is_pure_content() {
        let fs = poly_factor(&poly(&[-6])).unwrap();
        assert_eq!(*fs.content(), BigInt::from(-6));
        assert!(fs.factors().is_empty());
    }
}
