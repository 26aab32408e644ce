//! Internal dense integer-polynomial helpers.
//!
//! Coefficient vectors are little-endian (`v[i]` is the coefficient of `t^i`)
//! and normalized: no stored trailing zeros, the zero polynomial is the empty
//! vector. Everything here is exact `BigInt` arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub(crate) fn normalize(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Degree, or `None` for the zero polynomial.
pub(crate) fn deg(v: &[BigInt]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

pub(crate) fn leading(v: &[BigInt]) -> &BigInt {
    v.last().expect("leading coefficient of zero polynomial")
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    normalize(&mut out);
    out
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push(x - y);
    }
    normalize(&mut out);
    out
}

pub(crate) fn derivative(a: &[BigInt]) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    normalize(&mut out);
    out
}

pub(crate) fn eval(a: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Nonnegative gcd of all coefficients; 0 for the zero polynomial.
pub(crate) fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
    }
    g
}

/// Split into (signed content, primitive part with positive leading
/// coefficient). The zero polynomial yields (0, []).
pub(crate) fn primitive_part(a: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    if a.is_empty() {
        return (BigInt::zero(), Vec::new());
    }
    let mut c = content(a);
    if leading(a).is_negative() {
        c = -c;
    }
    let prim: Vec<BigInt> = a.iter().map(|x| x / &c).collect();
    (c, prim)
}

/// Exact division in ℤ[t]: `Some(q)` with `a = q·b`, or `None` when `b` does
/// not divide `a` over the integers.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    let (da, db) = (a.len() - 1, b.len() - 1);
    if da < db {
        return None;
    }
    let lb = leading(b);
    let mut rem = a.to_vec();
    let mut q = vec![BigInt::zero(); da - db + 1];
    for i in (0..=da - db).rev() {
        let c = rem[db + i].clone();
        if c.is_zero() {
            continue;
        }
        let (quot, r) = c.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for j in 0..=db {
            let delta = &quot * &b[j];
            rem[i + j] -= delta;
        }
        q[i] = quot;
    }
    if rem.iter().all(|c| c.is_zero()) {
        normalize(&mut q);
        Some(q)
    } else {
        None
    }
}

/// Pseudo-remainder up to a scalar: repeatedly cancels the top coefficient of
/// `a` against `b` after scaling. Only used inside the primitive-PRS gcd,
/// where scalar multiples are irrelevant.
fn prem_scaled(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = leading(b).clone();
    let mut r = a.to_vec();
    while deg(&r).is_some_and(|dr| dr >= db) {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        let shift = dr - db;
        for j in 0..=db {
            let delta = &lr * &b[j];
            r[shift + j] -= delta;
        }
        normalize(&mut r);
    }
    r
}

/// Primitive gcd (positive leading coefficient) via the primitive PRS.
/// Content is deliberately discarded: callers combine integer contents
/// themselves when they need the full ℤ[t] gcd.
pub(crate) fn gcd_primitive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (_, mut a) = primitive_part(a);
    let (_, mut b) = primitive_part(b);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = prem_scaled(&a, &b);
        let (_, r) = primitive_part(&r);
        a = b;
        b = r;
    }
    a
}
