//! Cyclic types `m,(a,b)` and the case analysis that lists every candidate
//! for a given degree.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::congruence::{check_degree, divisors, gcd, solve_system, CongruenceSystem, GammaFilter};
use crate::error::{Error, Result};

/// The diagonal automorphism `(x:y:z) -> (x : w^a y : w^b z)` with `w` a
/// primitive `m`-th root of unity.
///
/// Conventions: `b != 0`, `a != b`; `gcd(b, m) = 1` when `a = 0`, otherwise
/// `gcd(a, b, m) = 1` so that `(a, b)` generates a faithful action. The
/// stricter `gcd(a, b) = 1` of the case analysis is applied by the solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicType {
    m: u64,
    a: u64,
    b: u64,
}

impl CyclicType {
    pub fn new(m: u64, a: u64, b: u64) -> Result<Self> {
        match Self::violation(m, a, b) {
            None => Ok(CyclicType { m, a, b }),
            Some(reason) => Err(Error::InvalidType {
                m,
                a,
                b,
                reason: reason.into(),
            }),
        }
    }

    pub fn is_valid(m: u64, a: u64, b: u64) -> bool {
        Self::violation(m, a, b).is_none()
    }

    fn violation(m: u64, a: u64, b: u64) -> Option<&'static str> {
        if m < 2 {
            Some("order must be at least 2")
        } else if a >= m || b >= m {
            Some("exponents must be reduced mod m")
        } else if a == b {
            Some("a = b gives a homology with the wrong normalization")
        } else if b == 0 {
            Some("b = 0 is normalized away by swapping Y and Z")
        } else if a == 0 && gcd(b, m) != 1 {
            Some("a = 0 requires gcd(b, m) = 1")
        } else if a != 0 && gcd(gcd(a, b), m) != 1 {
            Some("gcd(a, b, m) must be 1")
        } else {
            None
        }
    }

    pub fn m(self) -> u64 {
        self.m
    }
    pub fn a(self) -> u64 {
        self.a
    }
    pub fn b(self) -> u64 {
        self.b
    }

    /// Character of `X^i Y^j Z^k`: `a j + b k mod m`.
    pub fn character(self, j: u64, k: u64) -> u64 {
        ((self.a as u128 * j as u128 + self.b as u128 * k as u128) % self.m as u128) as u64
    }
}

impl fmt::Display for CyclicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},({},{})", self.m, self.a, self.b)
    }
}

/// The cases of the classification, in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseId {
    C1,
    C2,
    C3,
    C41,
    C42,
    C43,
    C5,
    C6,
}

impl CaseId {
    pub const ALL: [CaseId; 8] = [
        CaseId::C1,
        CaseId::C2,
        CaseId::C3,
        CaseId::C41,
        CaseId::C42,
        CaseId::C43,
        CaseId::C5,
        CaseId::C6,
    ];

    /// The integer every order in this case divides.
    pub fn divisor_integer(self, d: u64) -> u64 {
        match self {
            CaseId::C1 | CaseId::C43 => d - 1,
            CaseId::C2 | CaseId::C6 => d,
            CaseId::C3 => d * d - 3 * d + 3,
            CaseId::C41 => d * (d - 2),
            CaseId::C42 => (d - 1) * (d - 1),
            CaseId::C5 => d * (d - 1),
        }
    }

    /// Homology cases, generated by `(a, b) = (0, 1)`.
    pub fn is_homology(self) -> bool {
        matches!(self, CaseId::C1 | CaseId::C2)
    }

    pub fn label(self) -> &'static str {
        match self {
            CaseId::C1 => "C1",
            CaseId::C2 => "C2",
            CaseId::C3 => "C3",
            CaseId::C41 => "C41",
            CaseId::C42 => "C42",
            CaseId::C43 => "C43",
            CaseId::C5 => "C5",
            CaseId::C6 => "C6",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The congruences `(a, b)` must satisfy in `case` for order `m`.
/// Homology cases return the empty system; their generator is fixed to `(0, 1)`.
pub fn case_system(case: CaseId, d: u64, m: u64) -> Result<CongruenceSystem> {
    check_degree(d)?;
    let integer = case.divisor_integer(d);
    if m < 2 || integer % m != 0 {
        return Err(Error::OrderNotAdmissible {
            case: case.label().into(),
            m,
            integer,
        });
    }
    let d = d as i64;
    let sys = CongruenceSystem::new(m);
    Ok(match case {
        CaseId::C1 | CaseId::C2 => sys,
        // a == (d-1)a + b == (d-1)b
        CaseId::C3 => sys.with(d - 2, 1, 0).with(1, -(d - 1), 0),
        CaseId::C41 => sys.with(d - 1, 1, 0).with(1, d - 1, 0),
        CaseId::C42 => sys.with(d - 1, 1, 0).with(0, d - 1, 0),
        CaseId::C43 => sys.with(d - 1, 0, 0).with(0, d - 1, 0),
        CaseId::C5 => sys.with(d, 0, 0).with(0, d - 1, 0),
        CaseId::C6 => sys.with(d, 0, 0).with(0, d, 0),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeCandidate {
    pub case: CaseId,
    pub ty: CyclicType,
    pub degree: u64,
}

impl TypeCandidate {
    /// Validate `ty` against the congruences of `case`.
    pub fn new(case: CaseId, ty: CyclicType, degree: u64) -> Result<Self> {
        let inconsistent = || Error::InconsistentCandidate {
            case: case.label().into(),
            d: degree,
            m: ty.m(),
            a: ty.a(),
            b: ty.b(),
        };
        let sys = case_system(case, degree, ty.m())?;
        let ok = if case.is_homology() {
            ty.a() == 0 && ty.b() == 1
        } else {
            GammaFilter::Gamma.admits(ty.m(), ty.a(), ty.b()) && sys.holds(ty.a(), ty.b())
        };
        if ok {
            Ok(TypeCandidate { case, ty, degree })
        } else {
            Err(inconsistent())
        }
    }
}

/// Every `(case, m, (a, b))` allowed by the case analysis in degree `d`:
/// cases in declaration order, orders ascending, pairs lexicographic.
pub fn enumerate_candidates(d: u64) -> Result<Vec<TypeCandidate>> {
    check_degree(d)?;
    let mut out = Vec::new();
    for case in CaseId::ALL {
        for m in divisors(case.divisor_integer(d)) {
            if m < 2 {
                continue;
            }
            let sys = case_system(case, d, m)?;
            let pairs = if case.is_homology() {
                vec![(0, 1)]
            } else {
                solve_system(&sys, GammaFilter::Gamma)
            };
            for (a, b) in pairs {
                let ty = CyclicType::new(m, a, b)?;
                out.push(TypeCandidate { case, ty, degree: d });
            }
        }
    }
    Ok(out)
}
