//! Polynomial arithmetic over a small prime field F_p.
//!
//! Used only inside the integer factorization pipeline: primes are small
//! (fits in u64, well below 2^31 so products never overflow), polynomials are
//! dense `Vec<u64>` with coefficients reduced into `[0, p)` and no trailing
//! zeros.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid on signed 128-bit, a != 0 mod p
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "inv_mod of non-unit");
    (s0.rem_euclid(p as i128)) as u64
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct ModPoly {
    pub p: u64,
    pub c: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        let mut out = Self { p, c };
        out.normalize();
        out
    }

    pub fn zero(p: u64) -> Self {
        Self { p, c: Vec::new() }
    }

    pub fn constant(p: u64, v: u64) -> Self {
        Self::new(p, vec![v])
    }

    pub fn from_bigints(p: u64, coeffs: &[BigInt]) -> Self {
        let pb = BigInt::from(p);
        let c = coeffs
            .iter()
            .map(|x| {
                let mut r = x % &pb;
                if r.is_negative() {
                    r += &pb;
                }
                r.to_u64().expect("reduced residue fits u64")
            })
            .collect();
        Self::new(p, c)
    }

    fn normalize(&mut self) {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
    }

    pub fn deg(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn lc(&self) -> u64 {
        *self.c.last().expect("lc of zero polynomial")
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() || self.lc() == 1 {
            return self.clone();
        }
        let inv = inv_mod(self.lc(), self.p);
        Self::new(self.p, self.c.iter().map(|&x| x * inv % self.p).collect())
    }

    #[cfg(test)]
    pub fn add(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.c.len().max(other.c.len());
        let c = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = other.c.get(i).copied().unwrap_or(0);
                (a + b) % p
            })
            .collect();
        Self::new(p, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.c.len().max(other.c.len());
        let c = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = other.c.get(i).copied().unwrap_or(0);
                (a + p - b) % p
            })
            .collect();
        Self::new(p, c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        Self::new(p, out)
    }

    /// Division with remainder; divisor must be nonzero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = d.deg().expect("division by zero polynomial");
        if self.deg().is_none_or(|n| n < dd) {
            return (Self::zero(p), self.clone());
        }
        let inv = inv_mod(d.lc(), p);
        let mut rem = self.c.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = rem[dd + i] % p;
            if top == 0 {
                continue;
            }
            let q = top * inv % p;
            quot[i] = q;
            for j in 0..=dd {
                rem[i + j] = (rem[i + j] + p * p - (q * d.c[j] % p)) % p;
                // (a + p^2 - qb) may exceed u64 for p near 2^31; keep p small
            }
        }
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn gcd_monic(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &x)| (i as u64 % p) * x % p)
            .collect();
        Self::new(p, c)
    }

    /// `x^e mod m`, by square-and-multiply on polynomials.
    pub fn x_pow_mod(e: u64, m: &Self) -> Self {
        let p = m.p;
        let mut result = Self::constant(p, 1).rem(m);
        let mut base = Self::new(p, vec![0, 1]).rem(m);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        result
    }
}

/// Extended gcd: returns (g, s, t) with `s·a + t·b = g`, g monic.
pub(crate) fn ext_gcd(a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly, ModPoly) {
    let p = a.p;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (ModPoly::constant(p, 1), ModPoly::zero(p));
    let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::constant(p, 1));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let ns = s0.sub(&q.mul(&s1));
        let nt = t0.sub(&q.mul(&t1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, ns);
        (t0, t1) = (t1, nt);
    }
    if r0.is_zero() {
        return (r0, s0, t0);
    }
    let inv = inv_mod(r0.lc(), p);
    let scale = ModPoly::constant(p, inv);
    (r0.monic(), s0.mul(&scale), t0.mul(&scale))
}

pub(crate) fn is_squarefree_mod(f: &ModPoly) -> bool {
    let d = f.derivative();
    if d.is_zero() {
        return false;
    }
    f.gcd_monic(&d).deg() == Some(0)
}

/// Berlekamp factorization of a monic squarefree polynomial over F_p.
/// Returns monic irreducible factors (unsorted).
pub(crate) fn berlekamp(f: &ModPoly) -> Vec<ModPoly> {
    let p = f.p;
    let n = match f.deg() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![f.monic()],
        Some(n) => n,
    };
    let f = f.monic();

    // Q has column j = coefficients of x^{j·p} mod f; the fixed space of the
    // Frobenius (Q - I)v = 0 has dimension = number of irreducible factors.
    let xp = ModPoly::x_pow_mod(p, &f);
    let mut cols: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = ModPoly::constant(p, 1);
    for _ in 0..n {
        let mut col = cur.c.clone();
        col.resize(n, 0);
        cols.push(col);
        cur = cur.mul(&xp).rem(&f);
    }
    // B = Q - I, row-major
    let mut b = vec![vec![0u64; n]; n];
    for j in 0..n {
        for i in 0..n {
            let mut v = cols[j][i] % p;
            if i == j {
                v = (v + p - 1) % p;
            }
            b[i][j] = v;
        }
    }
    let basis = nullspace(&mut b, n, p);
    let r = basis.len();
    debug_assert!(r >= 1);
    if r == 1 {
        return vec![f];
    }

    let mut factors = vec![f];
    for v in &basis {
        if factors.len() == r {
            break;
        }
        let vp = ModPoly::new(p, v.clone());
        if vp.deg().is_none_or(|d| d == 0) {
            continue; // constant vectors split nothing
        }
        let mut next: Vec<ModPoly> = Vec::with_capacity(factors.len());
        for u in factors.into_iter() {
            if u.deg() == Some(1) {
                next.push(u);
                continue;
            }
            let mut pieces = vec![u];
            for c in 0..p {
                let shift = vp.sub(&ModPoly::constant(p, c));
                let mut refined: Vec<ModPoly> = Vec::with_capacity(pieces.len());
                for w in pieces.into_iter() {
                    if w.deg() == Some(1) {
                        refined.push(w);
                        continue;
                    }
                    let g = w.gcd_monic(&shift.rem(&w));
                    match g.deg() {
                        Some(dg) if dg > 0 && dg < w.deg().unwrap() => {
                            let (q, rem) = w.divrem(&g);
                            debug_assert!(rem.is_zero());
                            refined.push(g);
                            refined.push(q.monic());
                        }
                        _ => refined.push(w),
                    }
                }
                pieces = refined;
            }
            next.extend(pieces);
        }
        factors = next;
    }
    debug_assert_eq!(factors.len(), r, "Berlekamp split incomplete");
    factors
}

/// Nullspace basis of an n×n matrix over F_p (destroys the input).
#[allow(clippy::needless_range_loop)] // pivot row and target row alias
fn nullspace(m: &mut [Vec<u64>], n: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut row = 0;
    for col in 0..n {
        if let Some(r) = (row..n).find(|&r| !m[r][col].is_multiple_of(p)) {
            m.swap(row, r);
            let inv = inv_mod(m[row][col], p);
            for j in 0..n {
                m[row][j] = m[row][j] % p * inv % p;
            }
            for i in 0..n {
                if i != row && !m[i][col].is_multiple_of(p) {
                    let factor = m[i][col] % p;
                    for j in 0..n {
                        m[i][j] = (m[i][j] + p * p - factor * m[row][j] % p) % p;
                    }
                }
            }
            pivot_of_col[col] = Some(row);
            row += 1;
        }
    }
    let mut basis = Vec::new();
    for col in 0..n {
        if pivot_of_col[col].is_some() {
            continue;
        }
        let mut v = vec![0u64; n];
        v[col] = 1;
        for (c, pr) in pivot_of_col.iter().enumerate() {
            if let Some(r) = pr {
                v[c] = (p - m[*r][col] % p) % p;
            }
        }
        basis.push(v);
    }
    basis
}
