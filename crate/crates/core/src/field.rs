//! Arithmetic in prime fields `F_p` and dense univariate polynomials over them.
//!
//! Elements are plain `u64` residues below `p`; `p` stays below `2^31` so
//! products fit in a `u64`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut k = 3;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            while n % k == 0 {
                n /= k;
            }
        }
        k += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A residue together with its prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeFieldElement {
    pub value: u64,
    pub p: u64,
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.p)
    }
}

/// The field `F_p` for an odd prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 || p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(self) -> u64 {
        self.p
    }

    pub fn elem(self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn element(self, x: u64) -> PrimeFieldElement {
        PrimeFieldElement {
            value: x % self.p,
            p: self.p,
        }
    }

    #[inline]
    pub fn add(self, x: u64, y: u64) -> u64 {
        let s = x + y;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, x: u64, y: u64) -> u64 {
        if x >= y {
            x - y
        } else {
            x + self.p - y
        }
    }

    #[inline]
    pub fn neg(self, x: u64) -> u64 {
        if x == 0 {
            0
        } else {
            self.p - x
        }
    }

    #[inline]
    pub fn mul(self, x: u64, y: u64) -> u64 {
        x * y % self.p
    }

    pub fn pow(self, mut x: u64, mut e: u64) -> u64 {
        let mut r = 1;
        x %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, x);
            }
            x = self.mul(x, x);
            e >>= 1;
        }
        r
    }

    /// Inverse of a nonzero element.
    pub fn inv(self, x: u64) -> u64 {
        assert!(x % self.p != 0, "zero has no inverse");
        self.pow(x, self.p - 2)
    }

    /// Least generator of the multiplicative group.
    pub fn primitive_root(self) -> u64 {
        let n = self.p - 1;
        let factors = prime_factors(n);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, n / q) != 1))
            .expect("F_p^* is cyclic")
    }

    /// A primitive `n`-th root of unity; requires `n | p - 1`.
    pub fn root_of_unity(self, n: u64) -> Result<u64> {
        if n == 0 || (self.p - 1) % n != 0 {
            return Err(Error::InvalidArgument(format!(
                "F_{} has no primitive {n}-th root of unity",
                self.p
            )));
        }
        Ok(self.pow(self.primitive_root(), (self.p - 1) / n))
    }

    /// Some `x` with `x^k = c`, if one exists. Linear search; meant for the
    /// small fields used by the group machinery.
    pub fn nth_root(self, c: u64, k: u64) -> Option<u64> {
        let c = c % self.p;
        if c == 0 {
            return Some(0);
        }
        (1..self.p).find(|&x| self.pow(x, k) == c)
    }
}

/// Dense polynomial, coefficients from degree 0 upward, no trailing zeros.
pub type Poly = Vec<u64>;

pub fn poly_trim(f: &mut Poly) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

/// Degree, or `None` for the zero polynomial.
pub fn poly_degree(f: &Poly) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

/// `f mod g` for nonzero `g`.
pub fn poly_rem(fp: PrimeField, f: &Poly, g: &Poly) -> Poly {
    let mut r = f.clone();
    poly_trim(&mut r);
    let dg = g.len() - 1;
    let lead_inv = fp.inv(g[dg]);
    while r.len() > dg {
        let shift = r.len() - 1 - dg;
        let q = fp.mul(*r.last().unwrap(), lead_inv);
        for (t, &gc) in g.iter().enumerate() {
            r[shift + t] = fp.sub(r[shift + t], fp.mul(q, gc));
        }
        poly_trim(&mut r);
    }
    r
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn poly_gcd(fp: PrimeField, f: &Poly, g: &Poly) -> Poly {
    let (mut a, mut b) = (f.clone(), g.clone());
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(fp, &a, &b);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let li = fp.inv(lead);
        for c in a.iter_mut() {
            *c = fp.mul(*c, li);
        }
    }
    a
}

pub fn poly_eval(fp: PrimeField, f: &Poly, x: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| fp.add(fp.mul(acc, x), c))
}
