//! Hensel lifting of a mod-p factorization to a prime-power modulus.
//!
//! Everything works on monic factors of the monicized input: the integer
//! polynomial `s` is multiplied by `lc(s)^{-1} mod p^k` at each stage, and the
//! lifted factors multiply to that monic image. Coefficients live in `[0, m)`
//! as `BigInt`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::modp::{ext_gcd, ModPoly};
use super::zpoly;

type ZmodPoly = Vec<BigInt>;

fn reduce(v: &[BigInt], m: &BigInt) -> ZmodPoly {
    let mut out: Vec<BigInt> = v
        .iter()
        .map(|c| {
            let mut r = c % m;
            if r.is_negative() {
                r += m;
            }
            r
        })
        .collect();
    zpoly::normalize(&mut out);
    out
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZmodPoly {
    reduce(&zpoly::mul(a, b), m)
}

fn sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZmodPoly {
    reduce(&zpoly::sub(a, b), m)
}

fn add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZmodPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push(x + y);
    }
    reduce(&out, m)
}

/// Division with remainder mod m by a monic divisor.
fn divrem_monic(a: &[BigInt], d: &[BigInt], m: &BigInt) -> (ZmodPoly, ZmodPoly) {
    debug_assert!(d.last().is_some_and(|c| c.is_one()), "divisor not monic");
    let dd = d.len() - 1;
    let mut rem = a.to_vec();
    if rem.len() < d.len() {
        return (Vec::new(), reduce(&rem, m));
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let top = &rem[dd + i] % m;
        if top.is_zero() {
            continue;
        }
        for j in 0..dd {
            let delta = &top * &d[j];
            rem[i + j] -= delta;
        }
        rem[dd + i] = BigInt::zero();
        quot[i] = top;
    }
    (reduce(&quot, m), reduce(&rem, m))
}

fn inv_mod_big(a: &BigInt, m: &BigInt) -> BigInt {
    // extended Euclid; a must be a unit mod m
    let (mut r0, mut r1) = (m.clone(), ((a % m) + m) % m);
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let nr = &r0 - &q * &r1;
        let ns = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, nr);
        s0 = std::mem::replace(&mut s1, ns);
    }
    debug_assert!(r0.is_one(), "inv_mod_big of non-unit");
    ((s0 % m) + m) % m
}

fn monicize(s: &[BigInt], m: &BigInt) -> ZmodPoly {
    let inv = inv_mod_big(zpoly::leading(s), m);
    reduce(&s.iter().map(|c| c * &inv).collect::<Vec<BigInt>>(), m)
}

fn from_modpoly(f: &ModPoly) -> ZmodPoly {
    f.c.iter().map(|&x| BigInt::from(x)).collect()
}

/// One quadratic Hensel step: inputs valid mod `m`, outputs valid mod `m²`.
/// `f` must be reduced mod `m²` and monic; `g`, `h` monic with `f ≡ g·h (mod
/// m)` and `s·g + t·h ≡ 1 (mod m)`.
#[allow(clippy::many_single_char_names)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (ZmodPoly, ZmodPoly, ZmodPoly, ZmodPoly) {
    let m2 = m * m;
    let e = sub_mod(f, &zpoly::mul(g, h), &m2);
    let (q, r) = divrem_monic(&mul_mod(s, &e, &m2), h, &m2);
    let g1 = add_mod(
        &add_mod(g, &mul_mod(t, &e, &m2), &m2),
        &mul_mod(&q, g, &m2),
        &m2,
    );
    let h1 = add_mod(h, &r, &m2);

    let one = vec![BigInt::one()];
    let b = sub_mod(
        &add_mod(&mul_mod(s, &g1, &m2), &mul_mod(t, &h1, &m2), &m2),
        &one,
        &m2,
    );
    let (c, d) = divrem_monic(&mul_mod(s, &b, &m2), &h1, &m2);
    let s1 = sub_mod(s, &d, &m2);
    let t1 = sub_mod(
        &sub_mod(t, &mul_mod(t, &b, &m2), &m2),
        &mul_mod(&c, &g1, &m2),
        &m2,
    );
    (g1, h1, s1, t1)
}

/// Lift the pair (Πleft, Πright) from mod p to mod `target` (a power of p on
/// the quadratic ladder). `f_full` is the monic integer image valid mod
/// `target`.
fn lift_pair(
    f_full: &[BigInt],
    g0: &ModPoly,
    h0: &ModPoly,
    p: u64,
    target: &BigInt,
) -> (ZmodPoly, ZmodPoly) {
    let (one, s0, t0) = ext_gcd(g0, h0);
    debug_assert_eq!(one.deg(), Some(0), "halves not coprime mod p");
    let mut g = from_modpoly(&g0.monic());
    let mut h = from_modpoly(&h0.monic());
    let mut s = from_modpoly(&s0);
    let mut t = from_modpoly(&t0);
    let mut m = BigInt::from(p);
    while &m < target {
        let m2 = &m * &m;
        let f = reduce(f_full, &m2);
        let (g1, h1, s1, t1) = hensel_step(&f, &g, &h, &s, &t, &m);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = m2;
    }
    (g, h)
}

fn lift_tree(f_full: &[BigInt], parts: &[ModPoly], p: u64, target: &BigInt) -> Vec<ZmodPoly> {
    if parts.len() == 1 {
        return vec![reduce(f_full, target)];
    }
    let mid = parts.len() / 2;
    let (left, right) = parts.split_at(mid);
    let g0 = left
        .iter()
        .fold(ModPoly::constant(p, 1), |acc, f| acc.mul(f))
        .monic();
    let h0 = right
        .iter()
        .fold(ModPoly::constant(p, 1), |acc, f| acc.mul(f))
        .monic();
    let (g, h) = lift_pair(f_full, &g0, &h0, p, target);
    let mut out = lift_tree(&g, left, p, target);
    out.extend(lift_tree(&h, right, p, target));
    out
}

/// Lift the Berlekamp factorization of `s mod p` to a modulus `M = p^(2^k) ≥
/// bound`. Returns `(M, monic factors mod M)` whose product is `s/lc(s) mod M`.
pub(crate) fn lift_factorization(
    s: &[BigInt],
    p: u64,
    modular_factors: &[ModPoly],
    bound: &BigInt,
) -> (BigInt, Vec<ZmodPoly>) {
    let mut modulus = BigInt::from(p);
    while &modulus < bound {
        modulus = &modulus * &modulus;
    }
    let f_full = monicize(s, &modulus);
    let lifted = lift_tree(&f_full, modular_factors, p, &modulus);
    (modulus, lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::modp::berlekamp;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn lift_reconstructs_product_mod_m() {
        // s = (2t + 1)(t^2 + 3)(t - 4), squarefree, lc = 2
        let s = zpoly::mul(&zpoly::mul(&z(&[1, 2]), &z(&[3, 0, 1])), &z(&[-4, 1]));
        let p = 7;
        let sp = ModPoly::from_bigints(p, &s).monic();
        let factors = berlekamp(&sp);
        assert!(factors.len() >= 3); // t^2+3 splits or not mod 7; either way ≥ 3 pieces total
        let bound = BigInt::from(100_000_000u64);
        let (m, lifted) = lift_factorization(&s, p, &factors, &bound);
        assert!(m >= bound);
        // product of lifted factors ≡ s/lc(s) mod m
        let prod = lifted
            .iter()
            .fold(vec![BigInt::one()], |acc, f| mul_mod(&acc, f, &m));
        assert_eq!(prod, monicize(&s, &m));
        for f in &lifted {
            assert!(f.last().unwrap().is_one());
        }
    }
}
