//! Finite-field oracles: smoothness of specialized curves, evidence that a
//! family has smooth members, and the diagonal automorphisms allowed by a
//! monomial support.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::congruence::modulo;
use crate::error::{Error, Result};
use crate::field::{poly_gcd, poly_trim, Poly, PrimeField, PrimeFieldElement};
use crate::normal_form::{Monomial, NormalForm};
use crate::types::CyclicType;

pub const DEFAULT_PRIMES: [u64; 3] = [1009, 2003, 10007];
pub const DEFAULT_TRIALS: usize = 20;

/// A plane curve of degree `d` over `F_p` given by its nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializedCurve {
    degree: u64,
    field: PrimeField,
    coeffs: BTreeMap<Monomial, u64>,
}

impl SpecializedCurve {
    pub fn new(degree: u64, p: u64, terms: impl IntoIterator<Item = (Monomial, i64)>) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let mut coeffs = BTreeMap::new();
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(Error::InvalidArgument(format!(
                    "monomial {m} is not of degree {degree}"
                )));
            }
            let e = coeffs.entry(m).or_insert(0);
            *e = field.add(*e, field.elem(c));
        }
        coeffs.retain(|_, c| *c != 0);
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(SpecializedCurve { degree, field, coeffs })
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn coefficient(&self, m: Monomial) -> PrimeFieldElement {
        self.field.element(self.coeffs.get(&m).copied().unwrap_or(0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, u64)> + '_ {
        self.coeffs.iter().map(|(m, c)| (*m, *c))
    }

    pub fn support(&self) -> BTreeSet<Monomial> {
        self.coeffs.keys().copied().collect()
    }

    /// The same curve with coordinates permuted: new variable `v` is old
    /// variable `perm[v]`.
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        SpecializedCurve {
            degree: self.degree,
            field: self.field,
            coeffs: self.coeffs.iter().map(|(m, c)| (m.permuted(perm), *c)).collect(),
        }
    }

    fn partials(&self) -> [Vec<(Monomial, u64)>; 3] {
        let f = self.field;
        let mut out: [Vec<(Monomial, u64)>; 3] = Default::default();
        for (m, c) in self.terms() {
            let e = m.exponents();
            for v in 0..3 {
                if e[v] > 0 {
                    let mut de = e;
                    de[v] -= 1;
                    let coef = f.mul(c, e[v] % f.p());
                    if coef != 0 {
                        out[v].push((Monomial::from(de), coef));
                    }
                }
            }
        }
        out
    }
}

/// Fermat `X^d + Y^d + Z^d`.
pub fn fermat(d: u64, p: u64) -> Result<SpecializedCurve> {
    SpecializedCurve::new(
        d,
        p,
        [
            (Monomial::new(d, 0, 0), 1),
            (Monomial::new(0, d, 0), 1),
            (Monomial::new(0, 0, d), 1),
        ],
    )
}

/// Klein `X^{d-1}Y + Y^{d-1}Z + Z^{d-1}X`.
pub fn klein(d: u64, p: u64) -> Result<SpecializedCurve> {
    SpecializedCurve::new(
        d,
        p,
        [
            (Monomial::new(d - 1, 1, 0), 1),
            (Monomial::new(0, d - 1, 1), 1),
            (Monomial::new(1, 0, d - 1), 1),
        ],
    )
}

/// Is some point on the line pencil through `(1:0:0)` a common zero of the
/// three partials? Covers every point `(x : y0 : 1)` with `y0` in `F_p` and
/// `x` anywhere in the algebraic closure, the whole line `Z = 0`, and the
/// centre itself.
fn pencil_has_singular_point(field: PrimeField, d: u64, partials: &[Vec<(Monomial, u64)>; 3]) -> bool {
    let p = field.p();
    let deg = (d - 1) as usize;
    // Centre (1:0:0).
    if partials.iter().all(|t| {
        t.iter()
            .filter(|(m, _)| m.j == 0 && m.k == 0)
            .fold(0, |s, (_, c)| field.add(s, *c))
            == 0
    }) {
        return true;
    }
    let restrict = |y0: Option<u64>, pows: &[u64]| -> [Poly; 3] {
        let mut out: [Poly; 3] = Default::default();
        for (v, terms) in partials.iter().enumerate() {
            let mut f = vec![0u64; deg + 1];
            for (m, c) in terms {
                let w = match y0 {
                    // Z = 0, Y = 1.
                    None => {
                        if m.k != 0 {
                            continue;
                        }
                        *c
                    }
                    Some(_) => field.mul(*c, pows[m.j as usize]),
                };
                let slot = &mut f[m.i as usize];
                *slot = field.add(*slot, w);
            }
            poly_trim(&mut f);
            out[v] = f;
        }
        out
    };
    let singular = |polys: [Poly; 3]| {
        let g = poly_gcd(field, &polys[0], &polys[1]);
        let g = poly_gcd(field, &g, &polys[2]);
        // Empty gcd: the partials vanish on the whole line.
        g.len() != 1
    };
    if singular(restrict(None, &[])) {
        return true;
    }
    let mut pows = vec![1u64; deg + 1];
    for y0 in 0..p {
        for e in 1..=deg {
            pows[e] = field.mul(pows[e - 1], y0);
        }
        if singular(restrict(Some(y0), &pows)) {
            return true;
        }
    }
    false
}

/// Jacobian criterion over `F_p`: no common zero of the three partials on any
/// `F_p`-rational line through one of the reference points, including zeros
/// whose coordinates lie in extensions of `F_p`.
///
/// This covers all of `P^2(F_p)`, and every singular point in an extension
/// that lies on such a line.
pub fn is_smooth(c: &SpecializedCurve) -> Result<bool> {
    let p = c.p();
    if c.degree() % p == 0 {
        return Err(Error::CharacteristicDividesDegree { p, d: c.degree() });
    }
    for perm in [[0, 1, 2], [1, 2, 0], [2, 0, 1]] {
        let pc = c.permuted(perm);
        if pencil_has_singular_point(pc.field, pc.degree, &pc.partials()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Brute force over all `p^2 + p + 1` rational points. Independent of
/// `is_smooth`; only practical for small `p`.
pub fn has_rational_singular_point(c: &SpecializedCurve) -> bool {
    let f = c.field();
    let parts = c.partials();
    let eval = |terms: &Vec<(Monomial, u64)>, x: u64, y: u64, z: u64| {
        terms.iter().fold(0, |s, (m, coef)| {
            let v = f.mul(f.mul(f.pow(x, m.i), f.pow(y, m.j)), f.pow(z, m.k));
            f.add(s, f.mul(*coef, v))
        })
    };
    let p = f.p();
    let mut points = vec![(1, 0, 0)];
    points.extend((0..p).map(|x| (x, 1, 0)));
    for x in 0..p {
        for y in 0..p {
            points.push((x, y, 1));
        }
    }
    points
        .into_iter()
        .any(|(x, y, z)| parts.iter().all(|t| eval(t, x, y, z) == 0))
}

/// Options for drawing a member of a family.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SampleOptions {
    /// Use `alpha = 1` instead of a random nonzero value.
    pub alpha_one: bool,
    /// Draw parameter values from the nonzero elements only.
    pub nonzero_params: bool,
}

/// A random member of the family `nf` over `F_p`: fixed monomials get 1,
/// `alpha` a nonzero value, every other slot any value. Deterministic in `seed`.
pub fn sample_specialization(nf: &NormalForm, p: u64, seed: u64) -> Result<SpecializedCurve> {
    sample_specialization_with(nf, p, seed, SampleOptions::default())
}

pub fn sample_specialization_with(nf: &NormalForm, p: u64, seed: u64, opts: SampleOptions) -> Result<SpecializedCurve> {
    let field = PrimeField::new(p)?;
    if nf.degree % p == 0 {
        return Err(Error::CharacteristicDividesDegree { p, d: nf.degree });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let low = if opts.nonzero_params { 1 } else { 0 };
    let mut terms: Vec<(Monomial, i64)> = nf.fixed.iter().map(|m| (*m, 1)).collect();
    if let Some(a) = nf.alpha {
        let v = if opts.alpha_one { 1 } else { rng.gen_range(1..p) };
        terms.push((a, v as i64));
    }
    for slot in &nf.params {
        terms.push((slot.monomial, rng.gen_range(low..p) as i64));
    }
    for g in &nf.generic {
        for m in g.expand() {
            terms.push((m, rng.gen_range(low..p) as i64));
        }
    }
    debug_assert!(field.p() == p);
    SpecializedCurve::new(nf.degree, p, terms)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocusStatus {
    SmoothWitnessFound,
    PresumedEmpty,
    ReducibleAlways,
}

#[derive(Debug, Clone)]
pub struct LocusVerdict {
    pub status: LocusStatus,
    pub witness: Option<SpecializedCurve>,
    /// Number of specializations tested.
    pub trials: usize,
    /// Seed of the witness, when there is one.
    pub witness_seed: Option<u64>,
}

/// The variable (0, 1, 2 for X, Y, Z) dividing every monomial, if any.
pub fn common_variable(support: &BTreeSet<Monomial>) -> Option<usize> {
    (0..3).find(|&v| support.iter().all(|m| m.exponents()[v] > 0))
}

/// Seed of trial `t` over the `prime_index`-th prime.
pub fn trial_seed(seed: u64, prime_index: usize, t: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((prime_index as u64) << 32)
        .wrapping_add(t as u64)
}

/// Search for a smooth member of `nf`. Reducibility is decided from the
/// support alone; otherwise up to `trials` samples are drawn per prime.
pub fn locus_nonempty(nf: &NormalForm, trials: usize, primes: &[u64], seed: u64) -> Result<LocusVerdict> {
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is required".into()));
    }
    if common_variable(&nf.support()).is_some() {
        return Ok(LocusVerdict {
            status: LocusStatus::ReducibleAlways,
            witness: None,
            trials: 0,
            witness_seed: None,
        });
    }
    let mut done = 0;
    for (pi, &p) in primes.iter().enumerate() {
        if nf.degree % p == 0 {
            return Err(Error::CharacteristicDividesDegree { p, d: nf.degree });
        }
        for t in 0..trials {
            let s = trial_seed(seed, pi, t);
            let c = sample_specialization(nf, p, s)?;
            done += 1;
            if is_smooth(&c)? {
                return Ok(LocusVerdict {
                    status: LocusStatus::SmoothWitnessFound,
                    witness: Some(c),
                    trials: done,
                    witness_seed: Some(s),
                });
            }
        }
    }
    Ok(LocusVerdict {
        status: LocusStatus::PresumedEmpty,
        witness: None,
        trials: done,
        witness_seed: None,
    })
}

/// Does `diag(1, w^a, w^b)` scale every monomial of `support` by the same
/// root of unity?
pub fn admits_diagonal(support: &BTreeSet<Monomial>, ty: CyclicType) -> bool {
    let mut it = support.iter();
    let Some(first) = it.next() else { return true };
    let c = first.character(ty);
    it.all(|m| m.character(ty) == c)
}

/// Every type `m,(a,b)` with `m <= max_order` whose diagonal automorphism
/// preserves the support of `c`, ordered by `m`, then `(a, b)`.
pub fn diagonal_automorphisms(c: &SpecializedCurve, max_order: u64) -> Vec<CyclicType> {
    diagonal_automorphisms_of_support(&c.support(), max_order)
}

pub fn diagonal_automorphisms_of_support(support: &BTreeSet<Monomial>, max_order: u64) -> Vec<CyclicType> {
    let mut out = Vec::new();
    let first = match support.iter().next() {
        Some(m) => *m,
        None => return out,
    };
    let deltas: Vec<(i64, i64)> = support
        .iter()
        .skip(1)
        .map(|m| (m.j as i64 - first.j as i64, m.k as i64 - first.k as i64))
        .collect();
    for m in 2..=max_order {
        let mut red: Vec<(u64, u64)> = deltas.iter().map(|&(x, y)| (modulo(x, m), modulo(y, m))).collect();
        red.sort();
        red.dedup();
        for a in 0..m {
            for b in 1..m {
                if red.iter().all(|&(x, y)| (a * x + b * y) % m == 0) && CyclicType::is_valid(m, a, b) {
                    out.push(CyclicType::new(m, a, b).expect("validated"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal_form::build_form;
    use crate::types::{CaseId, TypeCandidate};

    fn mono(i: u64, j: u64, k: u64) -> Monomial {
        Monomial::new(i, j, k)
    }

    fn form(case: CaseId, d: u64, m: u64, a: u64, b: u64) -> NormalForm {
        build_form(&TypeCandidate::new(case, CyclicType::new(m, a, b).unwrap(), d).unwrap()).unwrap()
    }

    #[test]
    fn smoothness_examples() {
        assert!(is_smooth(&fermat(4, 13).unwrap()).unwrap());
        let cusp = SpecializedCurve::new(4, 13, [(mono(4, 0, 0), 1), (mono(0, 3, 1), 1)]).unwrap();
        assert!(!is_smooth(&cusp).unwrap());
        assert!(is_smooth(&klein(4, 11).unwrap()).unwrap());
        assert!(!has_rational_singular_point(&klein(4, 11).unwrap()));
    }

    #[test]
    fn smoothness_errors() {
        assert!(is_smooth(&fermat(6, 3).unwrap()).is_err());
        assert!(matches!(
            SpecializedCurve::new(4, 13, [(mono(4, 0, 0), 13)]),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn finds_singular_points_off_the_prime_field() {
        // Singular at the conjugate points X^2 = 2Y^2, Z = 0; 2 is not a
        // square mod 13.
        let p = 13;
        let f = PrimeField::new(p).unwrap();
        // (X^2 - 2Y^2)^2 + Z^4 + Z^3 X
        let c = SpecializedCurve::new(
            4,
            p,
            [
                (mono(4, 0, 0), 1),
                (mono(2, 2, 0), f.elem(-4) as i64),
                (mono(0, 4, 0), 4),
                (mono(0, 0, 4), 1),
                (mono(1, 0, 3), 1),
            ],
        )
        .unwrap();
        assert!(!has_rational_singular_point(&c));
        assert!(!is_smooth(&c).unwrap());
    }

    #[test]
    fn agrees_with_rational_sweep_on_random_quartics() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let p = 7;
        for _ in 0..200 {
            let mut terms: Vec<(Monomial, i64)> = Vec::new();
            for m in crate::normal_form::monomials_of_degree(4) {
                if rng.gen_bool(0.3) {
                    terms.push((m, rng.gen_range(1..p as i64)));
                }
            }
            let Ok(c) = SpecializedCurve::new(4, p, terms) else {
                continue;
            };
            // A rational singular point must be caught.
            if has_rational_singular_point(&c) {
                assert!(!is_smooth(&c).unwrap());
            }
        }
    }

    #[test]
    fn sampling_is_deterministic_and_alpha_nonzero() {
        let nf = form(CaseId::C42, 5, 8, 1, 4);
        let a = sample_specialization(&nf, 1009, 3).unwrap();
        let b = sample_specialization(&nf, 1009, 3).unwrap();
        assert_eq!(a, b);
        for seed in 0..10_000 {
            let c = sample_specialization(&nf, 11, seed).unwrap();
            assert_ne!(c.coefficient(mono(1, 0, 4)).value, 0);
        }
        let bare = form(CaseId::C42, 5, 16, 1, 12);
        let c = sample_specialization_with(
            &bare,
            1009,
            99,
            SampleOptions {
                alpha_one: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(c.support(), bare.support());
    }

    #[test]
    fn quintic_8_1_4_smooth_without_beta() {
        // X^5 + Y^4Z + aXZ^4 over F_11 for every a != 0.
        for alpha in 1..11 {
            let c =
                SpecializedCurve::new(5, 11, [(mono(5, 0, 0), 1), (mono(0, 4, 1), 1), (mono(1, 0, 4), alpha)]).unwrap();
            assert!(!has_rational_singular_point(&c));
            assert!(is_smooth(&c).unwrap());
        }
    }

    #[test]
    fn verdicts() {
        let v = locus_nonempty(&form(CaseId::C5, 4, 12, 3, 4), 20, &DEFAULT_PRIMES, 0).unwrap();
        assert_eq!(v.status, LocusStatus::SmoothWitnessFound);
        assert!(is_smooth(v.witness.as_ref().unwrap()).unwrap());
        // C43 at m = 4 for d = 5: every monomial contains X.
        let nf = form(CaseId::C43, 5, 4, 1, 3);
        assert_eq!(common_variable(&nf.support()), Some(0));
        assert_eq!(
            locus_nonempty(&nf, 5, &DEFAULT_PRIMES, 0).unwrap().status,
            LocusStatus::ReducibleAlways
        );
        let v = locus_nonempty(&form(CaseId::C1, 9, 4, 0, 1), 10, &[11], 0).unwrap();
        assert_eq!(v.status, LocusStatus::SmoothWitnessFound);
    }

    #[test]
    fn diagonal_oracle() {
        let s: BTreeSet<Monomial> = [mono(4, 0, 0), mono(0, 4, 0), mono(1, 0, 3)].into();
        assert!(diagonal_automorphisms_of_support(&s, 12).contains(&CyclicType::new(12, 3, 4).unwrap()));
        for d in 4..=9 {
            let f = fermat(d, 1009).unwrap();
            let types = diagonal_automorphisms(&f, d * (d - 1));
            assert!(types.contains(&CyclicType::new(d, 0, 1).unwrap()));
            assert!(types.contains(&CyclicType::new(d, 1, 2).unwrap()));
        }
        let single: BTreeSet<Monomial> = [mono(2, 1, 1)].into();
        let all = diagonal_automorphisms_of_support(&single, 10);
        let expect = (2..=10u64)
            .flat_map(|m| (0..m).flat_map(move |a| (0..m).map(move |b| (m, a, b))))
            .filter(|&(m, a, b)| CyclicType::is_valid(m, a, b))
            .count();
        assert_eq!(all.len(), expect);
    }
}
