//! Elements of `PGL_3(F_p)`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::normal_form::Monomial;
use crate::verification::SpecializedCurve;

/// An invertible 3x3 matrix up to scalars, scaled so that its first nonzero
/// entry (row-major) is 1. It acts by the substitution `x_i -> sum_j e[i][j] x_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveMatrix {
    p: u64,
    e: [[u64; 3]; 3],
}

impl Serialize for ProjectiveMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.row_major().serialize(s)
    }
}

impl fmt::Display for ProjectiveMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.e.iter().map(|r| format!("{} {} {}", r[0], r[1], r[2])).collect();
        write!(f, "[{}] mod {}", rows.join("; "), self.p)
    }
}

impl ProjectiveMatrix {
    pub fn new(field: PrimeField, entries: [[i64; 3]; 3]) -> Result<Self> {
        let e = entries.map(|r| r.map(|x| field.elem(x)));
        Self::from_residues(field, e)
    }

    pub fn from_residues(field: PrimeField, e: [[u64; 3]; 3]) -> Result<Self> {
        let e = e.map(|r| r.map(|x| x % field.p()));
        let m = ProjectiveMatrix { p: field.p(), e };
        if m.det() == 0 {
            return Err(Error::InvalidArgument(format!("singular matrix {m}")));
        }
        Ok(m.normalized())
    }

    pub fn identity(field: PrimeField) -> Self {
        Self::diag(field, [1, 1, 1])
    }

    /// `diag(d0, d1, d2)`; entries must be nonzero.
    pub fn diag(field: PrimeField, d: [u64; 3]) -> Self {
        let mut e = [[0; 3]; 3];
        for i in 0..3 {
            e[i][i] = d[i];
        }
        Self::from_residues(field, e).expect("nonzero diagonal")
    }

    /// The substitution `[x_{p0}; x_{p1}; x_{p2}]`, so `perm(f, [0, 2, 1])` is `[X;Z;Y]`.
    pub fn perm(field: PrimeField, p: [usize; 3]) -> Self {
        let mut e = [[0; 3]; 3];
        for i in 0..3 {
            e[i][p[i]] = 1;
        }
        Self::from_residues(field, e).expect("permutation matrices are invertible")
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("validated at construction")
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn entries(&self) -> [[u64; 3]; 3] {
        self.e
    }

    pub fn row_major(&self) -> [u64; 9] {
        let mut out = [0; 9];
        for (i, r) in self.e.iter().enumerate() {
            out[3 * i..3 * i + 3].copy_from_slice(r);
        }
        out
    }

    fn f(&self) -> PrimeField {
        self.field()
    }

    fn det(&self) -> u64 {
        let f = self.f();
        let e = &self.e;
        let t = |i: usize, j: usize, k: usize| f.mul(e[0][i], f.mul(e[1][j], e[2][k]));
        let pos = f.add(f.add(t(0, 1, 2), t(1, 2, 0)), t(2, 0, 1));
        let neg = f.add(f.add(t(0, 2, 1), t(1, 0, 2)), t(2, 1, 0));
        f.sub(pos, neg)
    }

    fn normalized(mut self) -> Self {
        let f = self.f();
        let lead = *self.e.iter().flatten().find(|&&x| x != 0).expect("nonzero matrix");
        let li = f.inv(lead);
        for r in self.e.iter_mut() {
            for x in r.iter_mut() {
                *x = f.mul(*x, li);
            }
        }
        self
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::FieldMismatch(self.p, other.p));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let f = self.f();
        let mut e = [[0; 3]; 3];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = (0..3).fold(0, |acc, k| f.add(acc, f.mul(self.e[i][k], other.e[k][j])));
            }
        }
        Ok(ProjectiveMatrix { p: self.p, e }.normalized())
    }

    /// Inverse via the adjugate (a scalar multiple of the inverse).
    pub fn inverse(&self) -> Self {
        let f = self.f();
        let e = &self.e;
        let mut adj = [[0; 3]; 3];
        for (i, row) in adj.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                let (r0, r1) = ((j + 1) % 3, (j + 2) % 3);
                let (c0, c1) = ((i + 1) % 3, (i + 2) % 3);
                *x = f.sub(f.mul(e[r0][c0], e[r1][c1]), f.mul(e[r0][c1], e[r1][c0]));
            }
        }
        ProjectiveMatrix { p: self.p, e: adj }.normalized()
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { *self };
        let mut r = Self::identity(self.f());
        let mut b = base;
        let mut n = k.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                r = r.mul(&b).expect("same field");
            }
            b = b.mul(&b).expect("same field");
            n >>= 1;
        }
        r
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.f())
    }

    /// Least `k >= 1` with `self^k` scalar, or `None` above `cap`.
    pub fn order(&self, cap: u64) -> Option<u64> {
        let mut x = *self;
        for k in 1..=cap {
            if x.is_identity() {
                return Some(k);
            }
            x = x.mul(self).expect("same field");
        }
        None
    }

    /// Apply to a point given as a column vector.
    pub fn apply(&self, v: [u64; 3]) -> [u64; 3] {
        let f = self.f();
        self.e.map(|r| (0..3).fold(0, |acc, k| f.add(acc, f.mul(r[k], v[k]))))
    }

    /// `F(M x)` expanded as a polynomial.
    pub fn substitute(&self, c: &SpecializedCurve) -> Result<BTreeMap<Monomial, u64>> {
        if c.p() != self.p {
            return Err(Error::FieldMismatch(self.p, c.p()));
        }
        let f = self.f();
        let d = c.degree() as usize;
        // powers[v][k] = (row v of M . x)^k
        let mut powers: Vec<Vec<BTreeMap<Monomial, u64>>> = Vec::with_capacity(3);
        for row in self.e {
            let lin: Vec<(Monomial, u64)> = [
                (Monomial::new(1, 0, 0), row[0]),
                (Monomial::new(0, 1, 0), row[1]),
                (Monomial::new(0, 0, 1), row[2]),
            ]
            .into_iter()
            .filter(|(_, x)| *x != 0)
            .collect();
            let mut pw = vec![BTreeMap::from([(Monomial::new(0, 0, 0), 1)])];
            for k in 1..=d {
                let mut next = BTreeMap::new();
                for (m, x) in &pw[k - 1] {
                    for (l, y) in &lin {
                        let e = next.entry(mono_mul(*m, *l)).or_insert(0);
                        *e = f.add(*e, f.mul(*x, *y));
                    }
                }
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut out: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (m, coef) in c.terms() {
            let [i, j, k] = m.exponents().map(|x| x as usize);
            for (ma, xa) in &powers[0][i] {
                for (mb, xb) in &powers[1][j] {
                    let ab = mono_mul(*ma, *mb);
                    let xab = f.mul(coef, f.mul(*xa, *xb));
                    for (mc, xc) in &powers[2][k] {
                        let e = out.entry(mono_mul(ab, *mc)).or_insert(0);
                        *e = f.add(*e, f.mul(xab, *xc));
                    }
                }
            }
        }
        out.retain(|_, x| *x != 0);
        Ok(out)
    }
}

fn mono_mul(a: Monomial, b: Monomial) -> Monomial {
    let (x, y) = (a.exponents(), b.exponents());
    Monomial::new(x[0] + y[0], x[1] + y[1], x[2] + y[2])
}

/// Is `F(M x) = lambda F(x)` for some nonzero `lambda`?
pub fn preserves_curve(mat: &ProjectiveMatrix, c: &SpecializedCurve) -> Result<bool> {
    let image = mat.substitute(c)?;
    let f = mat.field();
    let (m0, c0) = c.terms().next().expect("curves are nonzero");
    let Some(&i0) = image.get(&m0) else {
        return Ok(false);
    };
    let lambda = f.mul(i0, f.inv(c0));
    if image.len() != c.terms().count() {
        return Ok(false);
    }
    Ok(c.terms().all(|(m, x)| image.get(&m) == Some(&f.mul(lambda, x))))
}

/// The subgroup generated by `gens`, by breadth-first products. Errors when
/// more than `cap` elements appear.
pub fn closure(gens: &[ProjectiveMatrix], cap: usize) -> Result<HashSet<ProjectiveMatrix>> {
    let Some(first) = gens.first() else {
        return Err(Error::MissingGenerators);
    };
    for g in gens {
        first.check_field(g)?;
    }
    let id = ProjectiveMatrix::identity(first.field());
    let mut seen = HashSet::from([id]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = x.mul(g)?;
                if seen.insert(y) {
                    if seen.len() > cap {
                        return Err(Error::ClosureCap(cap));
                    }
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    Ok(seen)
}
