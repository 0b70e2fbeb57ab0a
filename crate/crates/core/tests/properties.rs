use std::collections::BTreeSet;

use proptest::prelude::*;

use cyclic_plane::canonical::{canonical_pair, canonicalize, dedupe, permutation_images, unit_orbit};
use cyclic_plane::congruence::gcd;
use cyclic_plane::field::PrimeField;
use cyclic_plane::groups::{closure, ProjectiveMatrix};
use cyclic_plane::normal_form::{build_form, Monomial};
use cyclic_plane::types::{enumerate_candidates, CyclicType};
use cyclic_plane::verification::{
    common_variable, has_rational_singular_point, is_smooth, sample_specialization, sample_specialization_with,
    SampleOptions, SpecializedCurve,
};

fn valid_type() -> impl Strategy<Value = CyclicType> {
    (2u64..=72)
        .prop_flat_map(|m| (Just(m), 0..m, 1..m))
        .prop_filter_map("invalid type", |(m, a, b)| CyclicType::new(m, a, b).ok())
}

fn candidate_index() -> impl Strategy<Value = (u64, usize)> {
    (4u64..=9).prop_flat_map(|d| {
        let n = enumerate_candidates(d).unwrap().len();
        (Just(d), 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonicalize_is_idempotent(t in valid_type()) {
        let c = canonicalize(t);
        prop_assert_eq!(canonicalize(c), c);
        prop_assert!((c.a(), c.b()) <= (t.a(), t.b()));
    }

    #[test]
    fn canonicalize_is_constant_on_orbits(t in valid_type()) {
        let c = canonicalize(t);
        for s in unit_orbit(t).into_iter().chain(permutation_images(t)) {
            prop_assert_eq!(canonicalize(s), c);
        }
    }

    #[test]
    fn unit_orbit_preserves_gcd_structure(t in valid_type()) {
        let g = gcd(gcd(t.a(), t.b()), t.m());
        for s in unit_orbit(t) {
            prop_assert_eq!(gcd(gcd(s.a(), s.b()), s.m()), g);
        }
    }

    #[test]
    fn sampling_is_deterministic((d, i) in candidate_index(), seed in any::<u64>()) {
        let c = enumerate_candidates(d).unwrap()[i];
        let nf = build_form(&c).unwrap();
        let x = sample_specialization(&nf, 1009, seed).unwrap();
        let y = sample_specialization(&nf, 1009, seed).unwrap();
        prop_assert_eq!(&x, &y);
        if let Some(a) = nf.alpha {
            prop_assert_ne!(x.coefficient(a).value, 0);
        }
        for m in &nf.fixed {
            prop_assert_eq!(x.coefficient(*m).value, 1);
        }
        let z = sample_specialization_with(&nf, 1009, seed, SampleOptions { alpha_one: true, nonzero_params: true }).unwrap();
        prop_assert_eq!(z.support(), nf.support());
    }

    #[test]
    fn forms_carry_one_character((d, i) in candidate_index()) {
        let c = enumerate_candidates(d).unwrap()[i];
        let nf = build_form(&c).unwrap();
        let chars: BTreeSet<u64> = nf.support().iter().map(|m| m.character(c.ty)).collect();
        prop_assert_eq!(chars.len(), 1);
    }

    #[test]
    fn canonical_pair_is_invariant_under_permutation((d, i) in candidate_index(), p in 0usize..6) {
        let c = enumerate_candidates(d).unwrap()[i];
        let support = build_form(&c).unwrap().support();
        let perm = cyclic_plane::canonical::PERMUTATIONS[p];
        // move the form by `perm` and transport the type the same way
        let moved: BTreeSet<Monomial> = support.iter().map(|m| m.permuted(perm)).collect();
        let e = [0, c.ty.a(), c.ty.b()];
        let e = [e[perm[0]], e[perm[1]], e[perm[2]]];
        let m = c.ty.m();
        if let Ok(t) = CyclicType::new(m, (e[1] + m - e[0]) % m, (e[2] + m - e[0]) % m) {
            prop_assert_eq!(canonical_pair(t, &moved), canonical_pair(c.ty, &support));
        }
    }

    #[test]
    fn reducibility_is_read_from_the_support(exps in prop::collection::btree_set((0u64..=5, 0u64..=5), 1..8)) {
        let d = 5;
        let support: BTreeSet<Monomial> = exps
            .into_iter()
            .filter(|(i, j)| i + j <= d)
            .map(|(i, j)| Monomial::new(i, j, d - i - j))
            .collect();
        prop_assume!(!support.is_empty());
        let dividing: Vec<usize> = (0..3).filter(|&v| support.iter().all(|m| m.exponents()[v] > 0)).collect();
        prop_assert_eq!(common_variable(&support), dividing.first().copied());
        if let Some(v) = common_variable(&support) {
            let terms: Vec<(Monomial, i64)> = support.iter().map(|m| (*m, 1)).collect();
            let c = SpecializedCurve::new(d, 13, terms).unwrap();
            prop_assert!(!is_smooth(&c).unwrap(), "divisible by variable {}", v);
        }
    }

    #[test]
    fn smoothness_agrees_with_point_sweep(coeffs in prop::collection::vec(0i64..11, 15)) {
        let mons = cyclic_plane::normal_form::monomials_of_degree(4);
        let terms: Vec<(Monomial, i64)> = mons.into_iter().zip(coeffs).collect();
        prop_assume!(terms.iter().any(|(_, c)| *c != 0));
        let c = SpecializedCurve::new(4, 11, terms).unwrap();
        if has_rational_singular_point(&c) {
            prop_assert!(!is_smooth(&c).unwrap());
        }
    }

    #[test]
    fn closures_are_groups(a in 1u64..16, b in 1u64..16, perm in 0usize..6) {
        let f = PrimeField::new(17).unwrap();
        let x = f.root_of_unity(16).unwrap();
        let s = ProjectiveMatrix::diag(f, [1, f.pow(x, a), f.pow(x, b)]);
        let t = ProjectiveMatrix::perm(f, cyclic_plane::canonical::PERMUTATIONS[perm]);
        let g = closure(&[s, t], 5000).unwrap();
        prop_assert_eq!(1536 % g.len(), 0, "order {} must divide 16^2 * 6", g.len());
        for x in g.iter().take(20) {
            prop_assert!(g.contains(&x.inverse()));
            for y in g.iter().take(20) {
                prop_assert!(g.contains(&x.mul(y).unwrap()));
            }
        }
    }
}

#[test]
fn dedupe_partitions_the_candidates() {
    for d in 4..=9 {
        let cands = enumerate_candidates(d).unwrap();
        let orbits = dedupe(&cands).unwrap();
        let total: usize = orbits.iter().map(|o| o.candidates.len()).sum();
        assert_eq!(total, cands.len());
        let mut seen = BTreeSet::new();
        for o in &orbits {
            for c in &o.candidates {
                assert!(seen.insert((c.case, c.ty)), "d={d}: {c:?} in two classes");
                let key = canonical_pair(c.ty, &build_form(c).unwrap().support());
                assert_eq!(key, (o.representative, o.support_key.clone()));
            }
        }
        let keys: BTreeSet<_> = orbits
            .iter()
            .map(|o| (o.representative, o.support_key.clone()))
            .collect();
        assert_eq!(keys.len(), orbits.len());
    }
}
