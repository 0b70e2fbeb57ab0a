//! Loci of smooth curves with an automorphism of very large or large order,
//! each with its normal form and a verified subgroup of its automorphisms.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::binary::mobius_maps;
use super::matrix::{closure, preserves_curve, ProjectiveMatrix};
use super::{primes_one_mod, GroupDescriptor, Relation, Word, CLOSURE_CAP};
use crate::congruence::{lcm, modulo};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::normal_form::{build_form, NormalForm};
use crate::types::{CaseId, CyclicType, TypeCandidate};
use crate::verification::{is_smooth, sample_specialization_with, SampleOptions, SpecializedCurve};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocusKind {
    DTimesDMinus1,
    DMinus1Squared,
    DTimesDMinus2,
    Klein,
    EllDMinus1,
    EllD,
    EllDMinus2,
}

impl LocusKind {
    pub fn label(self) -> &'static str {
        match self {
            LocusKind::DTimesDMinus1 => "d(d-1)",
            LocusKind::DMinus1Squared => "(d-1)^2",
            LocusKind::DTimesDMinus2 => "d(d-2)",
            LocusKind::Klein => "d^2-3d+3",
            LocusKind::EllDMinus1 => "l(d-1)",
            LocusKind::EllD => "ld",
            LocusKind::EllDMinus2 => "l(d-2)",
        }
    }
}

impl fmt::Display for LocusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for LocusKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// Which large order `l d`, `l (d-1)` or `l (d-2)` is asked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LargeKind {
    DMinus1,
    D,
    DMinus2,
}

impl LargeKind {
    pub fn label(self) -> &'static str {
        match self {
            LargeKind::DMinus1 => "d-1",
            LargeKind::D => "d",
            LargeKind::DMinus2 => "d-2",
        }
    }
}

impl fmt::Display for LargeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for LargeKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl FromStr for LargeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "d-1" => Ok(LargeKind::DMinus1),
            "d" => Ok(LargeKind::D),
            "d-2" => Ok(LargeKind::DMinus2),
            _ => Err(Error::InvalidArgument(format!(
                "unknown kind {s:?}; expected d-1, d or d-2"
            ))),
        }
    }
}

/// A sub-locus with a larger group, selected by a condition on the parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialBranch {
    pub condition: String,
    pub group: String,
    pub order: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecialLocusRecord {
    pub kind: LocusKind,
    pub degree: u64,
    pub ell: Option<u64>,
    pub curve: NormalForm,
    pub group: GroupDescriptor,
    pub special_branches: Vec<SpecialBranch>,
    pub exceptions_note: String,
}

/// Result of `large_locus`: a record, or the congruence that rules the locus out.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum LargeLocus {
    Record(Box<SpecialLocusRecord>),
    Empty {
        kind: LargeKind,
        degree: u64,
        ell: u64,
        empty_locus: String,
    },
}

const SAMPLE_ATTEMPTS: u64 = 64;

/// A smooth member over `F_p` with `alpha = 1` and nonzero parameters,
/// deterministic in `p`.
fn smooth_member(nf: &NormalForm, p: u64) -> Result<Option<SpecializedCurve>> {
    let opts = SampleOptions {
        alpha_one: true,
        nonzero_params: true,
    };
    for seed in 0..SAMPLE_ATTEMPTS {
        let c = sample_specialization_with(nf, p, seed, opts)?;
        if is_smooth(&c)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Generators and their names for one group, built over a given field.
struct Generators {
    names: Vec<String>,
    mats: Vec<ProjectiveMatrix>,
}

impl Generators {
    fn new() -> Self {
        Generators {
            names: Vec::new(),
            mats: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, m: ProjectiveMatrix) {
        self.names.push(name.into());
        self.mats.push(m);
    }

    /// Add the candidates one at a time, keeping only those that enlarge
    /// the closure.
    fn extend_reduced(&mut self, prefix: &str, cands: impl IntoIterator<Item = ProjectiveMatrix>) -> Result<()> {
        let mut current = closure(&self.mats, CLOSURE_CAP)?;
        let mut k = 1;
        for c in cands {
            if !current.contains(&c) {
                self.push(format!("{prefix}{k}"), c);
                k += 1;
                current = closure(&self.mats, CLOSURE_CAP)?;
            }
        }
        Ok(())
    }
}

/// `diag(1, xi^a, xi^b)` with `xi` a primitive `n`-th root of unity.
fn diag_root(f: PrimeField, n: u64, a: i64, b: i64) -> Result<ProjectiveMatrix> {
    let x = f.root_of_unity(n)?;
    Ok(ProjectiveMatrix::diag(
        f,
        [1, f.pow(x, modulo(a, n)), f.pow(x, modulo(b, n))],
    ))
}

fn sigma_tau_relations(n: u64, d: u64) -> Vec<Relation> {
    vec![
        Relation::new(Word::power(1, 2), Word::identity()),
        Relation::new(Word::power(0, n as i64), Word::identity()),
        Relation::new(Word(vec![(1, 1), (0, 1), (1, 1)]), Word::power(0, -(d as i64 - 1))),
    ]
}

fn cyclic_relations(n: u64) -> Vec<Relation> {
    vec![Relation::new(Word::power(0, n as i64), Word::identity())]
}

/// `[lambda X; A(Y, Z)]` for every Moebius `A` mapping the roots of `src`
/// onto those of `dst`, with `lambda^d` matching the scale; `None` if some
/// scale has no `d`-th root in `F_p`.
fn lifted_mobius(f: PrimeField, d: u64, src: &[u64], dst: &[u64]) -> Option<Vec<ProjectiveMatrix>> {
    let maps = mobius_maps(f, &src.to_vec(), &dst.to_vec());
    if maps.is_empty() {
        return None;
    }
    let mut out = Vec::new();
    for (a, c) in maps {
        let lambda = f.nth_root(c, d)?;
        let e = [[lambda, 0, 0], [0, a[0][0], a[0][1]], [0, a[1][0], a[1][1]]];
        out.push(ProjectiveMatrix::from_residues(f, e).ok()?);
    }
    Some(out)
}

/// Binary form `Y Z (Y^(n-2) + Z^(n-2))` as coefficients of `Y^(n-k) Z^k`.
fn yz_form(n: usize) -> Vec<u64> {
    let mut v = vec![0; n + 1];
    v[1] = 1;
    v[n - 1] = 1;
    v
}

/// Group of `X^d + Y^(d-1) Z + Y Z^(d-1)`, or `None` if `F_p` is unsuitable.
fn d_times_d_minus_2_group(f: PrimeField, d: u64) -> Result<Option<Generators>> {
    let n = d * (d - 2);
    let mut g = Generators::new();
    g.push("sigma", diag_root(f, n, 1, -(d as i64 - 1))?);
    g.push("tau", ProjectiveMatrix::perm(f, [0, 2, 1]));
    match d {
        6 => {
            let b = yz_form(6);
            let Some(extra) = lifted_mobius(f, 6, &b, &b) else {
                return Ok(None);
            };
            g.extend_reduced("mu", extra)?;
        }
        4 => {
            // A coordinate change P taking the curve to the Fermat quartic;
            // conjugate the Fermat generators back by P.
            let src = yz_form(4);
            let dst = vec![1, 0, 0, 0, 1];
            let Some(ps) = lifted_mobius(f, 4, &src, &dst) else {
                return Ok(None);
            };
            let p = ps[0];
            let pinv = p.inverse();
            let i = f.root_of_unity(4)?;
            let fermat = [
                ProjectiveMatrix::diag(f, [i, 1, 1]),
                ProjectiveMatrix::diag(f, [1, i, 1]),
                ProjectiveMatrix::perm(f, [1, 0, 2]),
                ProjectiveMatrix::perm(f, [1, 2, 0]),
            ];
            let conj: Vec<ProjectiveMatrix> = fermat
                .iter()
                .map(|x| pinv.mul(x).and_then(|y| y.mul(&p)))
                .collect::<Result<_>>()?;
            g.extend_reduced("phi", conj)?;
        }
        _ => {}
    }
    Ok(Some(g))
}

/// Group of the Klein curve `X^(d-1) Y + Y^(d-1) Z + Z^(d-1) X`.
fn klein_group(f: PrimeField, d: u64) -> Result<Option<Generators>> {
    let n = d * d - 3 * d + 3;
    let mut g = Generators::new();
    g.push("sigma", diag_root(f, n, 1, -(d as i64 - 2))?);
    g.push("rho", ProjectiveMatrix::perm(f, [2, 0, 1]));
    if d == 4 {
        let z = f.root_of_unity(7)?;
        let e = |k: u64| f.sub(f.pow(z, k % 7), f.pow(z, (7 - k % 7) % 7));
        let m = [[e(1), e(2), e(4)], [e(2), e(4), e(1)], [e(4), e(1), e(2)]];
        match ProjectiveMatrix::from_residues(f, m) {
            Ok(iota) => g.push("iota", iota),
            Err(_) => return Ok(None),
        }
    }
    Ok(Some(g))
}

struct Spec {
    kind: LocusKind,
    ell: Option<u64>,
    candidate: TypeCandidate,
    name: String,
    order: u64,
    relations: Vec<Relation>,
    root_orders: Vec<u64>,
    branches: Vec<SpecialBranch>,
    note: String,
}

/// Pick the least suitable prime, build the generators there and check that
/// the form has a smooth member over it.
fn assemble(spec: Spec, build: impl Fn(PrimeField) -> Result<Option<Generators>>) -> Result<SpecialLocusRecord> {
    let d = spec.candidate.degree;
    let curve = build_form(&spec.candidate)?;
    let l = spec.root_orders.iter().fold(1, |acc, &n| lcm(acc, n));
    for p in primes_one_mod(l, d) {
        let f = PrimeField::new(p)?;
        let Some(gens) = build(f)? else { continue };
        if smooth_member(&curve, p)?.is_none() {
            continue;
        }
        return Ok(SpecialLocusRecord {
            kind: spec.kind,
            degree: d,
            ell: spec.ell,
            curve,
            group: GroupDescriptor {
                name: spec.name,
                order: spec.order,
                generator_names: gens.names,
                relations: spec.relations,
                prime: p,
                generators: gens.mats,
            },
            special_branches: spec.branches,
            exceptions_note: spec.note,
        });
    }
    Err(Error::NoPrime(l))
}

fn candidate(case: CaseId, m: u64, a: u64, b: u64, d: u64) -> Result<TypeCandidate> {
    TypeCandidate::new(case, CyclicType::new(m, a, b)?, d)
}

const MAXIMALITY: &str =
    "Closure verifies a subgroup of the stated order; that it is the whole automorphism group is not checked.";

/// The four loci with an automorphism of order `d(d-1)`, `(d-1)^2`,
/// `d(d-2)` or `d^2-3d+3`.
pub fn very_large_records(d: u64) -> Result<Vec<SpecialLocusRecord>> {
    if d < 4 {
        return Err(Error::DegreeTooSmall(d));
    }
    crate::congruence::check_degree(d)?;
    let di = d as i64;
    let mut out = Vec::with_capacity(4);

    let n = d * (d - 1);
    let note = if d == 4 {
        "d = 4: the full automorphism group of X^4 + Y^4 + XZ^3 is Z/4 (.) A4 of order 48; \
         only its cyclic subgroup of order 12 is verified here (no generators for the rest)."
            .to_string()
    } else {
        format!("Aut(C) is cyclic of order {n}. {MAXIMALITY}")
    };
    out.push(assemble(
        Spec {
            kind: LocusKind::DTimesDMinus1,
            ell: None,
            candidate: candidate(CaseId::C5, n, d - 1, d, d)?,
            name: format!("Z/{n}"),
            order: n,
            relations: cyclic_relations(n),
            root_orders: vec![n],
            branches: Vec::new(),
            note,
        },
        |f| {
            let mut g = Generators::new();
            g.push("sigma", diag_root(f, n, di - 1, di)?);
            Ok(Some(g))
        },
    )?);

    let n = (d - 1) * (d - 1);
    out.push(assemble(
        Spec {
            kind: LocusKind::DMinus1Squared,
            ell: None,
            candidate: candidate(CaseId::C42, n, 1, (d - 1) * (d - 2), d)?,
            name: format!("Z/{n}"),
            order: n,
            relations: cyclic_relations(n),
            root_orders: vec![n],
            branches: Vec::new(),
            note: format!("Aut(C) is cyclic of order {n}. {MAXIMALITY}"),
        },
        |f| {
            let mut g = Generators::new();
            g.push("sigma", diag_root(f, n, 1, (di - 1) * (di - 2))?);
            Ok(Some(g))
        },
    )?);

    let n = d * (d - 2);
    let (name, order, roots, note) = match d {
        4 => (
            "(Z/4)^2 x| S3".to_string(),
            96,
            vec![n, 8],
            "d = 4: the curve is isomorphic to the Fermat quartic; generators of its group are transported by an explicit change of coordinates.".to_string(),
        ),
        6 => (
            "Z/6 . S4".to_string(),
            144,
            vec![n, 8, 6],
            "d = 6: central extension of S4 by Z/6; extra generators permute the six roots of YZ(Y^4 + Z^4).".to_string(),
        ),
        _ => (
            format!("H_{d}"),
            2 * n,
            vec![n],
            format!("Central extension of D_{} by Z/{d}. {MAXIMALITY}", 2 * (d - 2)),
        ),
    };
    out.push(assemble(
        Spec {
            kind: LocusKind::DTimesDMinus2,
            ell: None,
            candidate: candidate(CaseId::C41, n, 1, modulo(-(di - 1), n), d)?,
            name,
            order,
            relations: sigma_tau_relations(n, d),
            root_orders: roots,
            branches: Vec::new(),
            note,
        },
        |f| d_times_d_minus_2_group(f, d),
    )?);

    let n = d * d - 3 * d + 3;
    let (name, order, note) = if d == 4 {
        (
            "PSL(2,7)".to_string(),
            168,
            "d = 4: Klein quartic; PSL(2,7), the simple group of order 168.".to_string(),
        )
    } else {
        (
            format!("Z/{n} x| Z/3"),
            3 * n,
            format!("Aut(C) has order 3(d^2-3d+3) = {}. {MAXIMALITY}", 3 * n),
        )
    };
    out.push(assemble(
        Spec {
            kind: LocusKind::Klein,
            ell: None,
            candidate: candidate(CaseId::C3, n, 1, modulo(-(di - 2), n), d)?,
            name,
            order,
            relations: vec![
                Relation::new(Word::power(1, 3), Word::identity()),
                Relation::new(Word::power(0, n as i64), Word::identity()),
                Relation::new(Word(vec![(0, 1), (1, 1)]), Word(vec![(1, 1), (0, -(di - 1))])),
            ],
            root_orders: vec![n],
            branches: Vec::new(),
            note,
        },
        |f| klein_group(f, d),
    )?);
    Ok(out)
}

/// Names of the groups `<sigma, tau>` of order `2 l (d-2)` singled out in
/// the small cases.
fn small_group_name(d: u64, ell: u64) -> Option<&'static str> {
    match (d, ell) {
        (6, 2) => Some("SmallGroup(16,8)"),
        (10, 2) => Some("SmallGroup(32,19)"),
        (10, 5) => Some("SmallGroup(80,25)"),
        _ => None,
    }
}

/// The locus with an automorphism of order `l(d-1)`, `l d` or `l(d-2)`.
pub fn large_locus(d: u64, ell: u64, kind: LargeKind) -> Result<LargeLocus> {
    if ell < 2 {
        return Err(Error::InvalidArgument(format!("ell must be at least 2, got {ell}")));
    }
    let min_d = if kind == LargeKind::DMinus2 { 6 } else { 5 };
    if d < min_d {
        return Err(Error::InvalidArgument(format!(
            "kind {kind} needs degree at least {min_d}, got {d}"
        )));
    }
    crate::congruence::check_degree(d)?;
    let empty = |why: String| {
        Ok(LargeLocus::Empty {
            kind,
            degree: d,
            ell,
            empty_locus: why,
        })
    };
    let r = d % ell;
    let (lk, m, cand) = match kind {
        LargeKind::DMinus1 => {
            let m = ell * (d - 1);
            let cand = match r {
                0 => candidate(CaseId::C5, m, d - 1, ell, d)?,
                1 => candidate(CaseId::C42, m, 1, (ell - 1) * (d - 1), d)?,
                _ => return empty(format!("needs d = 0 or 1 mod {ell}, but d = {r} mod {ell}")),
            };
            (LocusKind::EllDMinus1, m, cand)
        }
        LargeKind::D => {
            let m = ell * d;
            let cand = match r {
                1 => candidate(CaseId::C5, m, ell, d, d)?,
                _ if (d + ell - 2) % ell == 0 => candidate(CaseId::C41, m, 1, ell * d - d + 1, d)?,
                _ => return empty(format!("needs d = 1 or 2 mod {ell}, but d = {r} mod {ell}")),
            };
            (LocusKind::EllD, m, cand)
        }
        LargeKind::DMinus2 => {
            if r != 0 {
                return empty(format!("needs d = 0 mod {ell}, but d = {r} mod {ell}"));
            }
            let m = ell * (d - 2);
            (
                LocusKind::EllDMinus2,
                m,
                candidate(CaseId::C41, m, 1, modulo(-(d as i64 - 1), m), d)?,
            )
        }
    };
    let ty = cand.ty;
    let (a, b) = (ty.a() as i64, ty.b() as i64);
    let rec = if kind == LargeKind::DMinus2 {
        let order = 2 * m;
        let full = if d == 6 { 144 } else { 2 * d * (d - 2) };
        let branches = vec![SpecialBranch {
            condition: "all beta = 0".into(),
            group: if d == 6 { "Z/6 . S4".into() } else { format!("H_{d}") },
            order: full,
        }];
        let (name, note) =
            match small_group_name(d, ell) {
                Some(n) => (n.to_string(), format!("Some beta != 0: Aut(C) = {n}. {MAXIMALITY}")),
                None => (
                    format!("<sigma, tau> of order {order}"),
                    format!(
                    "Some beta != 0: Aut(C) is an extension of a dihedral group by a cyclic N of order dividing d, \
                     with {} | |N|; it contains <sigma, tau> of order {order}. The group itself is not pinned down.",
                    if d % 2 == 0 { format!("{}", 2 * ell) } else { format!("{ell}") }
                ),
                ),
            };
        assemble(
            Spec {
                kind: lk,
                ell: Some(ell),
                candidate: cand,
                name,
                order,
                relations: sigma_tau_relations(m, d),
                root_orders: vec![m],
                branches,
                note,
            },
            |f| {
                let mut g = Generators::new();
                g.push("sigma", diag_root(f, m, a, b)?);
                g.push("tau", ProjectiveMatrix::perm(f, [0, 2, 1]));
                Ok(Some(g))
            },
        )?
    } else {
        let mut note = if kind == LargeKind::DMinus1 {
            format!("Aut(C) is cyclic of order divisible by {m}.")
        } else {
            format!("Aut(C) contains a cyclic subgroup of order {m}.")
        };
        if kind == LargeKind::D && ell == 2 {
            note.push_str(
                " ell = 2: either Aut(C) fixes a point and a line not through it, or C descends from the Fermat curve F_d.",
            );
        }
        note.push(' ');
        note.push_str(MAXIMALITY);
        assemble(
            Spec {
                kind: lk,
                ell: Some(ell),
                candidate: cand,
                name: format!("Z/{m}"),
                order: m,
                relations: cyclic_relations(m),
                root_orders: vec![m],
                branches: Vec::new(),
                note,
            },
            |f| {
                let mut g = Generators::new();
                g.push("sigma", diag_root(f, m, a, b)?);
                Ok(Some(g))
            },
        )?
    };
    Ok(LargeLocus::Record(Box::new(rec)))
}

/// Outcome of re-checking a record from scratch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordCheck {
    pub closure_order: usize,
    pub relations_hold: bool,
    pub smooth_member_found: bool,
    /// Every element of the closure preserves the smooth member.
    pub elements_preserve: bool,
}

impl RecordCheck {
    pub fn passes(&self, declared: u64) -> bool {
        self.relations_hold
            && self.smooth_member_found
            && self.elements_preserve
            && self.closure_order as u64 == declared
    }
}

pub fn check_record(rec: &SpecialLocusRecord) -> Result<RecordCheck> {
    let g = &rec.group;
    let mut relations_hold = true;
    for r in &g.relations {
        relations_hold &= r.holds(&g.generators)?;
    }
    let elements = closure(&g.generators, CLOSURE_CAP)?;
    let member = smooth_member(&rec.curve, g.prime)?;
    let elements_preserve = match &member {
        Some(c) => {
            let mut ok = true;
            for e in &elements {
                ok &= preserves_curve(e, c)?;
            }
            ok
        }
        None => false,
    };
    Ok(RecordCheck {
        closure_order: elements.len(),
        relations_hold,
        smooth_member_found: member.is_some(),
        elements_preserve,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonicalize;
    use crate::normal_form::{Format, Monomial, RenderOptions};
    use crate::types::enumerate_candidates;

    fn orders(d: u64) -> Vec<u64> {
        very_large_records(d).unwrap().iter().map(|r| r.group.order).collect()
    }

    #[test]
    fn quintic_orders() {
        assert_eq!(orders(5), vec![20, 16, 30, 39]);
        for r in very_large_records(5).unwrap() {
            let c = check_record(&r).unwrap();
            assert!(c.passes(r.group.order), "{} {:?}", r.kind, c);
        }
    }

    #[test]
    fn quartic_exceptions() {
        let recs = very_large_records(4).unwrap();
        assert_eq!(
            recs.iter().map(|r| r.group.order).collect::<Vec<_>>(),
            vec![12, 9, 96, 168]
        );
        assert!(recs[0].exceptions_note.contains("48"));
        assert!(recs[3].exceptions_note.contains("simple group of order 168"));
        for r in &recs {
            let c = check_record(r).unwrap();
            assert!(c.passes(r.group.order), "{} {:?}", r.kind, c);
        }
    }

    #[test]
    fn sextic_144() {
        let recs = very_large_records(6).unwrap();
        let r = &recs[2];
        assert_eq!(r.group.order, 144);
        assert!(check_record(r).unwrap().passes(144));
    }

    #[test]
    fn generator_orders() {
        for d in 4..=9u64 {
            let recs = very_large_records(d).unwrap();
            let expect = [d * (d - 1), (d - 1) * (d - 1), d * (d - 2), d * d - 3 * d + 3];
            for (r, n) in recs.iter().zip(expect) {
                assert_eq!(r.group.generators[0].order(1000), Some(n), "d={d} {}", r.kind);
            }
        }
        assert!(very_large_records(3).is_err());
    }

    #[test]
    fn special_types_are_enumerated() {
        for d in 4..=9u64 {
            let canon: Vec<CyclicType> = enumerate_candidates(d)
                .unwrap()
                .iter()
                .map(|c| canonicalize(c.ty))
                .collect();
            for r in very_large_records(d).unwrap() {
                assert!(canon.contains(&canonicalize(r.curve.ty)), "d={d} {}", r.kind);
            }
        }
    }

    #[test]
    fn large_quintic_d_minus_1() {
        let LargeLocus::Record(r) = large_locus(5, 2, LargeKind::DMinus1).unwrap() else {
            panic!("expected a record")
        };
        assert_eq!(r.curve.ty, CyclicType::new(8, 1, 4).unwrap());
        assert_eq!(
            r.curve.render(Format::Plain, RenderOptions::default()),
            "X^5 + Y^4*Z + alpha*X*Z^4 + beta_{2,0}*X^3*Z^2"
        );
        assert!(check_record(&r).unwrap().passes(8));
    }

    #[test]
    fn large_sextic_d_minus_2() {
        let LargeLocus::Record(r) = large_locus(6, 2, LargeKind::DMinus2).unwrap() else {
            panic!("expected a record")
        };
        assert_eq!(r.group.name, "SmallGroup(16,8)");
        let support = r.curve.support();
        let expect = [
            Monomial::new(6, 0, 0),
            Monomial::new(0, 5, 1),
            Monomial::new(0, 1, 5),
            Monomial::new(2, 2, 2),
        ];
        assert_eq!(support, expect.into_iter().collect());
        assert!(check_record(&r).unwrap().passes(16));
        assert_eq!(r.special_branches[0].order, 144);
    }

    #[test]
    fn small_groups_at_degree_ten() {
        for (ell, order) in [(2, 32), (5, 80)] {
            let LargeLocus::Record(r) = large_locus(10, ell, LargeKind::DMinus2).unwrap() else {
                panic!("expected a record")
            };
            assert_eq!(r.group.order, order);
            assert!(check_record(&r).unwrap().passes(order));
        }
    }

    #[test]
    fn empty_and_invalid() {
        assert!(matches!(
            large_locus(7, 3, LargeKind::DMinus2).unwrap(),
            LargeLocus::Empty { .. }
        ));
        assert!(matches!(
            large_locus(8, 3, LargeKind::DMinus1).unwrap(),
            LargeLocus::Empty { .. }
        ));
        assert!(large_locus(5, 1, LargeKind::D).is_err());
        assert!(large_locus(4, 2, LargeKind::D).is_err());
        assert!(large_locus(5, 2, LargeKind::DMinus2).is_err());
    }

    #[test]
    fn large_kind_parse() {
        assert_eq!("d-2".parse::<LargeKind>().unwrap(), LargeKind::DMinus2);
        assert!("d+1".parse::<LargeKind>().is_err());
    }
}
