//! Integer and modular arithmetic for the case systems.
//!
//! Every order that occurs is bounded by `d(d-1)`, so exhaustive scans over
//! the `m x m` residue grid are cheap and leave nothing to get wrong.

use crate::error::{Error, Result};

/// Largest degree accepted anywhere in the crate.
pub const MAX_DEGREE: u64 = 1000;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Reduce a signed integer into `0..m`.
pub fn modulo(x: i64, m: u64) -> u64 {
    debug_assert!(m >= 1);
    x.rem_euclid(m as i64) as u64
}

/// A residue class `value mod modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn new(x: i64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidArgument("modulus must be at least 1".into()));
        }
        Ok(Residue {
            value: modulo(x, modulus),
            modulus,
        })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors of zero are not defined");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n % k == 0 {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn check_degree(d: u64) -> Result<()> {
    if d < 4 {
        return Err(Error::DegreeTooSmall(d));
    }
    if d > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(d, MAX_DEGREE));
    }
    Ok(())
}

/// The six integers one of which every automorphism order divides:
/// `d-1, d, d^2-3d+3, (d-1)^2, d(d-2), d(d-1)`, in that order.
pub fn divisor_candidates(d: u64) -> Result<[u64; 6]> {
    check_degree(d)?;
    Ok([d - 1, d, d * d - 3 * d + 3, (d - 1) * (d - 1), d * (d - 2), d * (d - 1)])
}

/// `coef_a * a + coef_b * b == rhs (mod m)`, coefficients stored reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Constraint {
    pub coef_a: u64,
    pub coef_b: u64,
    pub rhs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceSystem {
    pub modulus: u64,
    pub constraints: Vec<Constraint>,
}

impl CongruenceSystem {
    pub fn new(modulus: u64) -> Self {
        CongruenceSystem {
            modulus,
            constraints: Vec::new(),
        }
    }

    /// Add `coef_a * a + coef_b * b == rhs`; inputs may be negative.
    pub fn with(mut self, coef_a: i64, coef_b: i64, rhs: i64) -> Self {
        let m = self.modulus;
        self.constraints.push(Constraint {
            coef_a: modulo(coef_a, m),
            coef_b: modulo(coef_b, m),
            rhs: modulo(rhs, m),
        });
        self
    }

    pub fn holds(&self, a: u64, b: u64) -> bool {
        let m = self.modulus as u128;
        self.constraints
            .iter()
            .all(|c| (c.coef_a as u128 * a as u128 + c.coef_b as u128 * b as u128) % m == c.rhs as u128)
    }
}

/// Which residue pairs `solve_system` scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaFilter {
    /// `1 <= a != b <= m-1` with `gcd(a, b) = 1`.
    Gamma,
    /// `a = 0`, `1 <= b <= m-1` with `gcd(b, m) = 1`.
    ZeroA,
}

impl GammaFilter {
    pub fn admits(self, m: u64, a: u64, b: u64) -> bool {
        match self {
            GammaFilter::Gamma => a >= 1 && b >= 1 && a < m && b < m && a != b && gcd(a, b) == 1,
            GammaFilter::ZeroA => a == 0 && b >= 1 && b < m && gcd(b, m) == 1,
        }
    }
}

/// Every admitted pair satisfying all constraints, lexicographic in `(a, b)`.
pub fn solve_system(sys: &CongruenceSystem, domain: GammaFilter) -> Vec<(u64, u64)> {
    let m = sys.modulus;
    let mut out = Vec::new();
    if m < 2 {
        return out;
    }
    for a in 0..m {
        for b in 0..m {
            if domain.admits(m, a, b) && sys.holds(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}
