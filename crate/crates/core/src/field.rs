//! Finite fields `GF(p^e)` as `GF(p)[x] / (f)` with table-driven arithmetic.
//!
//! An element is an index in `0..q`; its base-`p` digits, least significant
//! first, are the polynomial coefficients (constant term first). So the
//! integers `0..p` are the prime subfield and the index order is the
//! lexicographic order of coefficient vectors read from the top degree down.

use crate::arith::prime_power;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct PrimePowerField {
    p: u64,
    e: u32,
    q: usize,
    /// Monic modulus, constant term first, length `e + 1`.
    modulus: Vec<u64>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl PrimePowerField {
    /// Builds `GF(q)` with the lexicographically smallest monic irreducible
    /// modulus (coefficients compared from the constant term up).
    pub fn new(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotAPrimePower(q))?;
        let modulus = smallest_irreducible(p, e);
        let q = q as usize;

        let digits: Vec<Vec<u64>> = (0..q).map(|x| to_digits(x, p, e)).collect();
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<u64> = digits[a]
                    .iter()
                    .zip(&digits[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * q + b] = from_digits(&sum, p) as u32;
                mul[a * q + b] = from_digits(&mul_mod(&digits[a], &digits[b], &modulus, p), p) as u32;
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u32)
            .collect();
        let mut inv = vec![0u32; q];
        for a in 1..q {
            inv[a] = (1..q)
                .find(|&b| mul[a * q + b] == 1)
                .expect("irreducible modulus gives inverses") as u32;
        }

        Ok(Self {
            p,
            e,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    /// `None` for zero.
    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.inv[a] as usize)
    }
}

fn to_digits(mut x: usize, p: u64, e: u32) -> Vec<u64> {
    (0..e)
        .map(|_| {
            let d = x as u64 % p;
            x /= p as usize;
            d
        })
        .collect()
}

fn from_digits(digits: &[u64], p: u64) -> usize {
    digits.iter().rev().fold(0, |acc, &d| acc * p as usize + d as usize)
}

/// `a·b mod f` over `GF(p)`, `f` monic of degree `e`; inputs have length `e`.
fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let e = f.len() - 1;
    let mut prod = vec![0u64; 2 * e];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for top in (e..prod.len()).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        for (i, &fi) in f.iter().enumerate() {
            let slot = &mut prod[top - e + i];
            *slot = (*slot + (p - c) * fi) % p;
        }
    }
    prod.truncate(e);
    prod
}

/// Remainder of `a` modulo monic `m` over `GF(p)`, both constant term first.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * mi) % p;
            }
        }
        r.pop();
    }
    r
}

/// Monic polynomials of degree `d`, constant term first, in the order where
/// the constant term varies slowest.
fn monic_polys(p: u64, d: u32) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(d);
    (0..count).map(move |t| {
        let mut poly = vec![0u64; d as usize + 1];
        let mut rest = t;
        for i in (0..d as usize).rev() {
            poly[i] = rest % p;
            rest /= p;
        }
        poly[d as usize] = 1;
        poly
    })
}

pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let e = (f.len() - 1) as u32;
    (1..=e / 2).all(|d| monic_polys(p, d).all(|g| poly_rem(f, &g, p).iter().any(|&c| c != 0)))
}

fn smallest_irreducible(p: u64, e: u32) -> Vec<u64> {
    monic_polys(p, e)
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
