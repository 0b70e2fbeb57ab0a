//! Monomial bookkeeping, the S-sets, and the parameterized normal forms
//! attached to each case.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::{CaseId, CyclicType, TypeCandidate};

/// `X^i Y^j Z^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u64; 3]", into = "[u64; 3]")]
pub struct Monomial {
    pub i: u64,
    pub j: u64,
    pub k: u64,
}

impl From<[u64; 3]> for Monomial {
    fn from(e: [u64; 3]) -> Self {
        Monomial::new(e[0], e[1], e[2])
    }
}

impl From<Monomial> for [u64; 3] {
    fn from(m: Monomial) -> Self {
        m.exponents()
    }
}

impl Monomial {
    pub const fn new(i: u64, j: u64, k: u64) -> Self {
        Monomial { i, j, k }
    }

    pub fn degree(self) -> u64 {
        self.i + self.j + self.k
    }

    pub fn exponents(self) -> [u64; 3] {
        [self.i, self.j, self.k]
    }

    /// Variable `v` of the result is variable `perm[v]` of `self`.
    pub fn permuted(self, perm: [usize; 3]) -> Self {
        let e = self.exponents();
        Monomial::new(e[perm[0]], e[perm[1]], e[perm[2]])
    }

    pub fn character(self, ty: CyclicType) -> u64 {
        ty.character(self.j, self.k)
    }
}

/// All monomials of degree `d`, from `X^d` down to `Z^d`.
pub fn monomials_of_degree(d: u64) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(((d + 1) * (d + 2) / 2) as usize);
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push(Monomial::new(i, j, d - i - j));
        }
    }
    out
}

fn write_power(f: &mut String, var: char, e: u64, latex: bool, sep: &str) {
    if e == 0 {
        return;
    }
    if !f.is_empty() {
        f.push_str(sep);
    }
    f.push(var);
    if e > 1 {
        if latex && e > 9 {
            f.push_str(&format!("^{{{e}}}"));
        } else {
            f.push_str(&format!("^{e}"));
        }
    }
}

impl Monomial {
    fn render(self, latex: bool) -> String {
        let sep = if latex { "" } else { "*" };
        let mut s = String::new();
        write_power(&mut s, 'X', self.i, latex, sep);
        write_power(&mut s, 'Y', self.j, latex, sep);
        write_power(&mut s, 'Z', self.k, latex, sep);
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// The S-sets. Each yields the integers `i` (or `j` for `Reference`) in the
/// stated range satisfying the defining congruence mod `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SSetKind {
    /// `{j : u <= j <= d-1, d-j == 0}`
    Reference { u: u64 },
    /// `{i : 0 <= i <= j, a i + (j-i) b == a}`
    XShifted { j: u64 },
    /// `{i : 0 <= i <= j, a i + (j-i) b == 0}`
    XInvariant { j: u64 },
    /// `{i : 0 <= i <= j, b i + (d-j) a == a}`
    Y { j: u64 },
    /// `{i : 0 <= i <= j, a i + (d-j) b == a}`
    Z { j: u64 },
    /// `{i : u <= i <= d-u, a i + (d-i) b == 0}`
    TopX { u: u64 },
    /// `{i : 1 <= i <= d-u, a i + (d-1-i) b == 0}`
    SubTopX { u: u64 },
}

pub fn s_set(kind: SSetKind, d: u64, ty: CyclicType) -> Result<Vec<u64>> {
    let (m, a, b) = (ty.m() as i128, ty.a() as i128, ty.b() as i128);
    let di = d as i128;
    let is = |x: i128, target: i128| (x - target).rem_euclid(m) == 0;
    let range_err = |what: &str| {
        Err(Error::InvalidArgument(format!(
            "S-set parameter {what} out of range for degree {d}"
        )))
    };
    let out: Vec<u64> = match kind {
        SSetKind::Reference { u } => {
            if u > d {
                return range_err("u");
            }
            (u..d).filter(|&j| is(di - j as i128, 0)).collect()
        }
        SSetKind::XShifted { j } | SSetKind::XInvariant { j } => {
            if j > d {
                return range_err("j");
            }
            let target = if matches!(kind, SSetKind::XShifted { .. }) {
                a
            } else {
                0
            };
            (0..=j)
                .filter(|&i| is(a * i as i128 + (j - i) as i128 * b, target))
                .collect()
        }
        SSetKind::Y { j } => {
            if j > d {
                return range_err("j");
            }
            (0..=j)
                .filter(|&i| is(b * i as i128 + (di - j as i128) * a, a))
                .collect()
        }
        SSetKind::Z { j } => {
            if j > d {
                return range_err("j");
            }
            (0..=j)
                .filter(|&i| is(a * i as i128 + (di - j as i128) * b, a))
                .collect()
        }
        SSetKind::TopX { u } => {
            if u > d {
                return range_err("u");
            }
            (u..=d.saturating_sub(u))
                .filter(|&i| is(a * i as i128 + (di - i as i128) * b, 0))
                .collect()
        }
        SSetKind::SubTopX { u } => {
            if u > d {
                return range_err("u");
            }
            (1..=d.saturating_sub(u))
                .filter(|&i| i < d && is(a * i as i128 + (di - 1 - i as i128) * b, 0))
                .collect()
        }
    };
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSlot {
    pub name: String,
    pub monomial: Monomial,
}

/// `Z^zexp L_{deg,Z}(X, Y)`: an arbitrary binary form of degree `deg`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericSlot {
    pub zexp: u64,
    pub deg: u64,
}

impl GenericSlot {
    pub fn expand(self) -> impl Iterator<Item = Monomial> {
        let (z, deg) = (self.zexp, self.deg);
        (0..=deg).rev().map(move |i| Monomial::new(i, deg - i, z))
    }
}

/// A parameterized equation: unit-coefficient monomials, an optional
/// nonzero `alpha` monomial, free `beta_{j,i}` parameters and generic binary
/// form slots (homology cases only).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "NormalFormWire", into = "NormalFormWire")]
pub struct NormalForm {
    pub degree: u64,
    pub ty: CyclicType,
    pub case: CaseId,
    pub fixed: Vec<Monomial>,
    pub alpha: Option<Monomial>,
    pub params: Vec<ParamSlot>,
    pub generic: Vec<GenericSlot>,
}

#[derive(Serialize, Deserialize)]
struct NormalFormWire {
    degree: u64,
    m: u64,
    a: u64,
    b: u64,
    case: CaseId,
    fixed: Vec<Monomial>,
    alpha: Option<Monomial>,
    params: Vec<ParamSlot>,
    generic: Vec<GenericSlot>,
}

impl From<NormalForm> for NormalFormWire {
    fn from(nf: NormalForm) -> Self {
        NormalFormWire {
            degree: nf.degree,
            m: nf.ty.m(),
            a: nf.ty.a(),
            b: nf.ty.b(),
            case: nf.case,
            fixed: nf.fixed,
            alpha: nf.alpha,
            params: nf.params,
            generic: nf.generic,
        }
    }
}

impl TryFrom<NormalFormWire> for NormalForm {
    type Error = Error;
    fn try_from(w: NormalFormWire) -> Result<Self> {
        let nf = NormalForm {
            degree: w.degree,
            ty: CyclicType::new(w.m, w.a, w.b)?,
            case: w.case,
            fixed: w.fixed,
            alpha: w.alpha,
            params: w.params,
            generic: w.generic,
        };
        nf.validate()?;
        Ok(nf)
    }
}

/// Name of the parameter in front of `mono`: `beta_{j,i}` with `j = d - i_X`
/// and `i` the exponent of `Y`.
pub fn param_name(d: u64, mono: Monomial) -> String {
    format!("beta_{{{},{}}}", d - mono.i, mono.j)
}

/// The character shared by every monomial of a case's normal form.
pub fn case_character(case: CaseId, ty: CyclicType) -> u64 {
    match case {
        CaseId::C3 => ty.a(),
        _ => 0,
    }
}

/// Monomials of the right character that a case's form leaves out because of
/// which reference points lie on the curve.
pub fn case_exclusions(case: CaseId, d: u64) -> Vec<Monomial> {
    let (x, y, z) = (Monomial::new(d, 0, 0), Monomial::new(0, d, 0), Monomial::new(0, 0, d));
    match case {
        CaseId::C1 | CaseId::C2 | CaseId::C6 => vec![],
        CaseId::C3 => vec![x, y, z],
        CaseId::C41 => vec![y, z],
        CaseId::C42 => vec![y, z, Monomial::new(0, 1, d - 1)],
        CaseId::C43 => vec![y, z, Monomial::new(0, 1, d - 1), Monomial::new(0, d - 1, 1)],
        CaseId::C5 => vec![z],
    }
}

pub fn build_form(cand: &TypeCandidate) -> Result<NormalForm> {
    let cand = TypeCandidate::new(cand.case, cand.ty, cand.degree)?;
    let (d, ty, case) = (cand.degree, cand.ty, cand.case);
    let mono = Monomial::new;
    let mut fixed = Vec::new();
    let mut alpha = None;
    let mut slots: Vec<Monomial> = Vec::new();
    let mut generic = Vec::new();

    let x_invariant = |slots: &mut Vec<Monomial>, js: std::ops::RangeInclusive<u64>| -> Result<()> {
        for j in js {
            for i in s_set(SSetKind::XInvariant { j }, d, ty)? {
                slots.push(mono(d - j, i, j - i));
            }
        }
        Ok(())
    };
    let top = |slots: &mut Vec<Monomial>, u: u64| -> Result<()> {
        for i in s_set(SSetKind::TopX { u }, d, ty)? {
            slots.push(mono(0, i, d - i));
        }
        Ok(())
    };
    let sub_top = |slots: &mut Vec<Monomial>, u: u64| -> Result<()> {
        for i in s_set(SSetKind::SubTopX { u }, d, ty)? {
            slots.push(mono(1, i, d - 1 - i));
        }
        Ok(())
    };

    match case {
        CaseId::C1 => {
            generic.push(GenericSlot { zexp: d - 1, deg: 1 });
            for j in s_set(SSetKind::Reference { u: 2 }, d, ty)? {
                generic.push(GenericSlot { zexp: d - j, deg: j });
            }
            generic.push(GenericSlot { zexp: 0, deg: d });
        }
        CaseId::C2 => {
            fixed.push(mono(0, 0, d));
            for j in s_set(SSetKind::Reference { u: 1 }, d, ty)? {
                generic.push(GenericSlot { zexp: d - j, deg: j });
            }
            generic.push(GenericSlot { zexp: 0, deg: d });
        }
        CaseId::C3 => {
            fixed.extend([mono(d - 1, 1, 0), mono(0, d - 1, 1)]);
            alpha = Some(mono(1, 0, d - 1));
            let taken: BTreeSet<Monomial> = fixed.iter().copied().chain(alpha).collect();
            for j in 2..=d {
                for i in s_set(SSetKind::XShifted { j }, d, ty)? {
                    slots.push(mono(d - j, i, j - i));
                }
                for i in s_set(SSetKind::Y { j }, d, ty)? {
                    slots.push(mono(j - i, d - j, i));
                }
                for i in s_set(SSetKind::Z { j }, d, ty)? {
                    slots.push(mono(j - i, i, d - j));
                }
            }
            // The three slot families overlap; keep each monomial once and
            // drop those with an exponent of d-1 or d (anchors and monomials
            // of the wrong character).
            let mut seen = BTreeSet::new();
            slots.retain(|m| m.exponents().iter().all(|&e| e + 1 < d) && !taken.contains(m) && seen.insert(*m));
        }
        CaseId::C41 => {
            fixed.extend([mono(d, 0, 0), mono(0, d - 1, 1)]);
            alpha = Some(mono(0, 1, d - 1));
            x_invariant(&mut slots, 2..=d - 1)?;
            top(&mut slots, 2)?;
        }
        CaseId::C42 => {
            fixed.extend([mono(d, 0, 0), mono(0, d - 1, 1)]);
            alpha = Some(mono(1, 0, d - 1));
            x_invariant(&mut slots, 2..=d - 2)?;
            sub_top(&mut slots, 1)?;
            top(&mut slots, 2)?;
        }
        CaseId::C43 => {
            fixed.extend([mono(d, 0, 0), mono(1, 0, d - 1)]);
            alpha = Some(mono(1, d - 1, 0));
            x_invariant(&mut slots, 2..=d - 2)?;
            top(&mut slots, 2)?;
            sub_top(&mut slots, 2)?;
        }
        CaseId::C5 => {
            fixed.extend([mono(d, 0, 0), mono(0, d, 0)]);
            alpha = Some(mono(1, 0, d - 1));
            x_invariant(&mut slots, 2..=d - 2)?;
            top(&mut slots, 1)?;
            sub_top(&mut slots, 1)?;
        }
        CaseId::C6 => {
            fixed.extend([mono(d, 0, 0), mono(0, d, 0), mono(0, 0, d)]);
            x_invariant(&mut slots, 2..=d - 1)?;
            top(&mut slots, 1)?;
        }
    }

    slots.sort_by_key(|p| std::cmp::Reverse((p.i, p.j)));
    slots.dedup();
    let params = slots
        .into_iter()
        .map(|m| ParamSlot {
            name: param_name(d, m),
            monomial: m,
        })
        .collect();
    let nf = NormalForm {
        degree: d,
        ty,
        case,
        fixed,
        alpha,
        params,
        generic,
    };
    nf.validate()?;
    Ok(nf)
}

impl NormalForm {
    /// Every monomial that can carry a nonzero coefficient.
    pub fn support(&self) -> BTreeSet<Monomial> {
        let mut s: BTreeSet<Monomial> = self.fixed.iter().copied().collect();
        s.extend(self.alpha);
        s.extend(self.params.iter().map(|p| p.monomial));
        for g in &self.generic {
            s.extend(g.expand());
        }
        s
    }

    fn validate(&self) -> Result<()> {
        let d = self.degree;
        let bad = |msg: String| Err(Error::InvalidArgument(format!("malformed normal form: {msg}")));
        let mut seen = BTreeSet::new();
        let mut count = 0usize;
        let mut push = |m: Monomial| {
            count += 1;
            seen.insert(m);
            m.degree() == d
        };
        for m in self
            .fixed
            .iter()
            .copied()
            .chain(self.alpha)
            .chain(self.params.iter().map(|p| p.monomial))
        {
            if !push(m) {
                return bad(format!("monomial {m} is not of degree {d}"));
            }
        }
        for g in &self.generic {
            if g.zexp + g.deg != d {
                return bad(format!("generic slot Z^{} L_{} has the wrong degree", g.zexp, g.deg));
            }
            for m in g.expand() {
                push(m);
            }
        }
        if seen.len() != count {
            return bad("a monomial appears twice".into());
        }
        let names: BTreeSet<&str> = self.params.iter().map(|p| p.name.as_str()).collect();
        if names.len() != self.params.len() {
            return bad("parameter names collide".into());
        }
        Ok(())
    }

    pub fn render(&self, format: Format, opts: RenderOptions) -> String {
        match format {
            Format::Json => serde_json::to_string(self).expect("normal forms serialize"),
            Format::Latex => self.render_terms(true, opts),
            Format::Plain => self.render_terms(false, opts),
        }
    }

    fn render_terms(&self, latex: bool, opts: RenderOptions) -> String {
        let mut terms: Vec<String> = self.fixed.iter().map(|m| m.render(latex)).collect();
        if let Some(a) = self.alpha {
            terms.push(match (opts.alpha_one, latex) {
                (true, _) => a.render(latex),
                (false, true) => format!("\\alpha {}", a.render(true)),
                (false, false) => format!("alpha*{}", a.render(false)),
            });
        }
        for p in &self.params {
            terms.push(if latex {
                format!("\\{}{}", p.name, p.monomial.render(true))
            } else {
                format!("{}*{}", p.name, p.monomial.render(false))
            });
        }
        for g in &self.generic {
            let l = format!("L_{{{},Z}}", g.deg);
            terms.push(match (g.zexp, latex) {
                (0, _) => l,
                (z, true) => format!("{}{l}", Monomial::new(0, 0, z).render(true)),
                (z, false) => format!("{}*{l}", Monomial::new(0, 0, z).render(false)),
            });
        }
        terms.join(if latex { "+" } else { " + " })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Format::Plain),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RenderOptions {
    /// Print the `alpha` monomial with coefficient 1.
    pub alpha_one: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::enumerate_candidates;

    fn ty(m: u64, a: u64, b: u64) -> CyclicType {
        CyclicType::new(m, a, b).unwrap()
    }

    fn form(case: CaseId, d: u64, m: u64, a: u64, b: u64) -> NormalForm {
        build_form(&TypeCandidate::new(case, ty(m, a, b), d).unwrap()).unwrap()
    }

    fn set(ms: &[[u64; 3]]) -> BTreeSet<Monomial> {
        ms.iter().map(|&e| Monomial::from(e)).collect()
    }

    #[test]
    fn s_sets_on_very_large_types() {
        for d in 4..=12u64 {
            let t = ty(d * (d - 1), d - 1, d);
            for j in 2..=d - 2 {
                assert!(s_set(SSetKind::XInvariant { j }, d, t).unwrap().is_empty());
            }
            let t = ty((d - 1) * (d - 1), 1, (d - 1) * (d - 2));
            assert!(s_set(SSetKind::TopX { u: 2 }, d, t).unwrap().is_empty());
        }
        for d in (6..=16u64).step_by(2) {
            let t = ty(2 * (d - 2), 1, d - 3);
            for j in 2..d - 2 {
                let expect = if j % 4 == 0 { vec![j / 2] } else { vec![] };
                assert_eq!(s_set(SSetKind::XInvariant { j }, d, t).unwrap(), expect, "d={d} j={j}");
            }
        }
    }

    #[test]
    fn s_set_ranges() {
        let t = ty(5, 1, 2);
        assert!(s_set(SSetKind::XInvariant { j: 9 }, 5, t).is_err());
        assert_eq!(s_set(SSetKind::Reference { u: 1 }, 4, ty(2, 0, 1)).unwrap(), vec![2]);
    }

    #[test]
    fn quintic_16_1_12() {
        let nf = form(CaseId::C42, 5, 16, 1, 12);
        assert!(nf.params.is_empty());
        assert_eq!(nf.support(), set(&[[5, 0, 0], [0, 4, 1], [1, 0, 4]]));
    }

    #[test]
    fn sextic_8_1_3() {
        let nf = form(CaseId::C41, 6, 8, 1, 3);
        assert_eq!(nf.alpha, Some(Monomial::new(0, 1, 5)));
        assert_eq!(nf.params.len(), 1);
        assert_eq!(nf.params[0].monomial, Monomial::new(2, 2, 2));
        assert_eq!(nf.params[0].name, "beta_{4,2}");
    }

    #[test]
    fn quartic_3_1_2() {
        let nf = form(CaseId::C43, 4, 3, 1, 2);
        // X^4 + X(Z^3 + aY^3) + b X^2YZ + b' Y^2Z^2, up to which anchor is alpha.
        assert_eq!(
            nf.support(),
            set(&[[4, 0, 0], [1, 0, 3], [1, 3, 0], [2, 1, 1], [0, 2, 2]])
        );
    }

    #[test]
    fn latex_rendering() {
        let nf = form(CaseId::C5, 4, 12, 3, 4);
        assert_eq!(
            nf.render(Format::Latex, RenderOptions::default()),
            "X^4+Y^4+\\alpha XZ^3"
        );
        let nf = form(CaseId::C5, 7, 42, 6, 7);
        assert_eq!(
            nf.render(Format::Latex, RenderOptions::default()),
            "X^7+Y^7+\\alpha XZ^6"
        );
        assert_eq!(
            nf.render(Format::Latex, RenderOptions { alpha_one: true }),
            "X^7+Y^7+XZ^6"
        );
        let nf = form(CaseId::C5, 5, 10, 2, 5);
        assert_eq!(
            nf.render(Format::Latex, RenderOptions::default()),
            "X^5+Y^5+\\alpha XZ^4+\\beta_{2,0}X^3Z^2"
        );
        assert_eq!(
            nf.render(Format::Plain, RenderOptions::default()),
            "X^5 + Y^5 + alpha*X*Z^4 + beta_{2,0}*X^3*Z^2"
        );
        let nf = form(CaseId::C2, 4, 2, 0, 1);
        assert_eq!(
            nf.render(Format::Latex, RenderOptions::default()),
            "Z^4+Z^2L_{2,Z}+L_{4,Z}"
        );
        let nf = form(CaseId::C5, 10, 90, 9, 10);
        assert!(nf
            .render(Format::Latex, RenderOptions::default())
            .starts_with("X^{10}+Y^{10}"));
    }

    #[test]
    fn fermat_only_and_klein_supports() {
        let fermat = NormalForm {
            degree: 5,
            ty: ty(5, 1, 2),
            case: CaseId::C6,
            fixed: vec![Monomial::new(5, 0, 0), Monomial::new(0, 5, 0), Monomial::new(0, 0, 5)],
            alpha: None,
            params: vec![],
            generic: vec![],
        };
        assert_eq!(fermat.support(), set(&[[5, 0, 0], [0, 5, 0], [0, 0, 5]]));
        assert_eq!(fermat.render(Format::Latex, RenderOptions::default()), "X^5+Y^5+Z^5");
        let nf = form(CaseId::C3, 5, 13, 1, 10);
        assert_eq!(nf.support(), set(&[[4, 1, 0], [0, 4, 1], [1, 0, 4]]));
    }

    #[test]
    fn homology_support_is_every_invariant_monomial() {
        for d in 4..=9u64 {
            let nf = form(CaseId::C2, d, d, 0, 1);
            let expect: BTreeSet<Monomial> = monomials_of_degree(d).into_iter().filter(|m| m.k % d == 0).collect();
            assert_eq!(nf.support(), expect);
        }
    }

    #[test]
    fn character_and_completeness_small_degrees() {
        for d in 4..=7 {
            for c in enumerate_candidates(d).unwrap() {
                let nf = build_form(&c).unwrap();
                let ch = case_character(c.case, c.ty);
                let sup = nf.support();
                assert!(sup.iter().all(|m| m.character(c.ty) == ch));
                let excl: BTreeSet<Monomial> = case_exclusions(c.case, d).into_iter().collect();
                let expect: BTreeSet<Monomial> = monomials_of_degree(d)
                    .into_iter()
                    .filter(|m| m.character(c.ty) == ch && !excl.contains(m))
                    .collect();
                assert_eq!(sup, expect, "{} {}", c.case, c.ty);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let nf = form(CaseId::C42, 5, 8, 1, 4);
        let s = nf.render(Format::Json, RenderOptions::default());
        assert!(s.starts_with(
            "{\"degree\":5,\"m\":8,\"a\":1,\"b\":4,\"case\":\"C42\",\"fixed\":[[5,0,0],[0,4,1]],\"alpha\":[1,0,4]"
        ));
        let back: NormalForm = serde_json::from_str(&s).unwrap();
        assert_eq!(back, nf);
    }

    #[test]
    fn unknown_format() {
        assert!("html".parse::<Format>().is_err());
        assert_eq!("latex".parse::<Format>().unwrap(), Format::Latex);
    }
}
