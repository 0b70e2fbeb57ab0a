//! Canonical representatives of types up to change of generator and
//! permutation of coordinates, and the merge of candidates into classes.

use std::collections::{BTreeMap, BTreeSet};

use crate::congruence::gcd;
use crate::error::Result;
use crate::normal_form::{build_form, Monomial, NormalForm};
use crate::types::{CaseId, CyclicType, TypeCandidate};

/// The six permutations of `(X, Y, Z)`; new variable `v` is old variable `p[v]`.
pub const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn units(m: u64) -> impl Iterator<Item = u64> {
    (1..m).filter(move |&u| gcd(u, m) == 1)
}

/// `{u (a, b) : u a unit mod m}`.
pub fn unit_orbit(t: CyclicType) -> BTreeSet<CyclicType> {
    let m = t.m();
    units(m)
        .filter_map(|u| CyclicType::new(m, u * t.a() % m, u * t.b() % m).ok())
        .collect()
}

/// Exponents `(0, a, b)` permuted by `p` and shifted so the first is 0.
fn permuted_pair(t: CyclicType, p: [usize; 3]) -> (u64, u64) {
    let m = t.m();
    let e = [0, t.a(), t.b()];
    let e = [e[p[0]], e[p[1]], e[p[2]]];
    ((e[1] + m - e[0]) % m, (e[2] + m - e[0]) % m)
}

/// The images of `t` under the six coordinate permutations, each rescaled so
/// that `X` has exponent 0. Images that leave the type conventions
/// (homologies landing on `b = 0` or `a = b`) are dropped.
pub fn permutation_images(t: CyclicType) -> BTreeSet<CyclicType> {
    PERMUTATIONS
        .iter()
        .filter_map(|&p| {
            let (a, b) = permuted_pair(t, p);
            CyclicType::new(t.m(), a, b).ok()
        })
        .collect()
}

/// Every type reachable from `t` by generator changes and permutations.
pub fn closure(t: CyclicType) -> BTreeSet<CyclicType> {
    let mut seen = BTreeSet::from([t]);
    let mut frontier = vec![t];
    while let Some(s) = frontier.pop() {
        for n in unit_orbit(s).into_iter().chain(permutation_images(s)) {
            if seen.insert(n) {
                frontier.push(n);
            }
        }
    }
    seen
}

/// Least element of the closure of `t`, ordered by `a` then `b`.
pub fn canonicalize(t: CyclicType) -> CyclicType {
    let m = t.m();
    let mut best = t;
    for p in PERMUTATIONS {
        let (a, b) = permuted_pair(t, p);
        for u in units(m) {
            let (ua, ub) = (u * a % m, u * b % m);
            if (ua, ub) < (best.a(), best.b()) && CyclicType::is_valid(m, ua, ub) {
                best = CyclicType::new(m, ua, ub).expect("validated");
            }
        }
    }
    best
}

/// Canonical key of a type together with the monomial support of an
/// invariant form: the least `(type, sorted support)` over all generator
/// changes and permutations, the support being transported with the type.
pub fn canonical_pair(t: CyclicType, support: &BTreeSet<Monomial>) -> (CyclicType, Vec<Monomial>) {
    let m = t.m();
    let target = canonicalize(t);
    let mut best: Option<Vec<Monomial>> = None;
    for p in PERMUTATIONS {
        let (a, b) = permuted_pair(t, p);
        let hits = units(m).any(|u| (u * a % m, u * b % m) == (target.a(), target.b()));
        if !hits {
            continue;
        }
        let mut s: Vec<Monomial> = support.iter().map(|x| x.permuted(p)).collect();
        s.sort();
        if best.as_ref().is_none_or(|b| s < *b) {
            best = Some(s);
        }
    }
    (target, best.expect("the canonical type is reached by some permutation"))
}

/// One class of candidates: same canonical type and, after transport, the
/// same monomial support.
#[derive(Debug, Clone)]
pub struct TypeOrbit {
    pub representative: CyclicType,
    pub members: BTreeSet<CyclicType>,
    pub provenance: BTreeSet<CaseId>,
    pub candidates: Vec<TypeCandidate>,
    pub support_key: Vec<Monomial>,
    /// Form of the candidate with the least `(a, b)`; used for display.
    pub form: NormalForm,
}

impl TypeOrbit {
    /// Type of the displayed form, in the form's own coordinates.
    pub fn display_type(&self) -> CyclicType {
        self.form.ty
    }
}

type ClassKey = (CyclicType, Vec<Monomial>);

/// Merge candidates into classes keyed by `canonical_pair`. Output is sorted
/// by order descending, then by the displayed `(a, b)`.
pub fn dedupe(candidates: &[TypeCandidate]) -> Result<Vec<TypeOrbit>> {
    let mut classes: BTreeMap<ClassKey, Vec<(TypeCandidate, NormalForm)>> = BTreeMap::new();
    for c in candidates {
        let nf = build_form(c)?;
        let key = canonical_pair(c.ty, &nf.support());
        classes.entry(key).or_default().push((*c, nf));
    }
    let mut out: Vec<TypeOrbit> = classes
        .into_iter()
        .map(|((representative, support_key), mut members)| {
            members.sort_by_key(|(c, _)| (c.ty.a(), c.ty.b(), c.case));
            let form = members[0].1.clone();
            TypeOrbit {
                representative,
                members: members.iter().map(|(c, _)| c.ty).collect(),
                provenance: members.iter().map(|(c, _)| c.case).collect(),
                candidates: members.iter().map(|(c, _)| *c).collect(),
                support_key,
                form,
            }
        })
        .collect();
    out.sort_by(|x, y| {
        let (tx, ty) = (x.display_type(), y.display_type());
        (ty.m(), tx.a(), tx.b(), &x.support_key).cmp(&(tx.m(), ty.a(), ty.b(), &y.support_key))
    });
    Ok(out)
}
