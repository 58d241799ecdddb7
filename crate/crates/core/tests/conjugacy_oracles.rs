use std::collections::BTreeSet;

use prefrat_core::chief::chief_series;
use prefrat_core::conjugacy::{
    exp_ad, inner_generators, inner_group, is_automorphism, orbit, verify_conjugacy_theorem,
    ConjugacyOutcome,
};
use prefrat_core::corpus::{example_sec2, heisenberg, heisenberg_extension};
use prefrat_core::exactalg::{PrimeField, Subspace};
use prefrat_core::interval::SubalgebraLattice;
use prefrat_core::prefrattini::prefrattini_set;
use prefrat_core::{Error, LieAlgebra};
use proptest::prelude::*;

/// The automorphism law checked on every pair of elements.
fn preserves_all_brackets(l: &LieAlgebra, f: impl Fn(&[u8]) -> Vec<u8>) -> bool {
    let els = l.full_space().elements();
    els.iter()
        .all(|x| els.iter().all(|y| f(&l.bracket(x, y)) == l.bracket(&f(x), &f(y))))
}

#[test]
fn exp_of_e0_shifts_c() {
    let l = example_sec2(2).unwrap().algebra;
    let g = exp_ad(&l, &l.basis_vector(0)).unwrap();
    // ad e0 : c ↦ [e0, c] = e0, and (ad e0)² = 0
    assert_eq!(g.apply(&l.basis_vector(2)), vec![1, 0, 1, 0, 0]);
    assert!(preserves_all_brackets(&l, |v| g.apply(v)));
    assert!(is_automorphism(&l, &g.map));
}

#[test]
fn exp_requires_nilpotent_ad() {
    let l = example_sec2(2).unwrap().algebra;
    // ad c acts on e0, e1 as -id, so it is not nilpotent
    assert_eq!(exp_ad(&l, &l.basis_vector(2)).unwrap_err(), Error::NotExponentiable);
}

#[test]
fn example_orbit_and_group() {
    let l = example_sec2(2).unwrap().algebra;
    let residual = l.nilpotent_residual();
    let group = inner_group(&l, &residual, 1000).unwrap();
    assert_eq!(group.len(), 4);
    let c = Subspace::span(l.field(), 5, [[0, 0, 1, 0, 0]]).unwrap();
    let gens = inner_generators(&l, &residual).unwrap();
    let points: BTreeSet<Subspace> = orbit(&c, &gens, 100)
        .unwrap()
        .into_iter()
        .map(|(s, map)| {
            assert_eq!(map.image(&c), s);
            s
        })
        .collect();
    let lat = SubalgebraLattice::new(&l).unwrap();
    let pi = prefrattini_set(&lat, &l.zero_space(), &chief_series(&l).unwrap()).unwrap();
    assert_eq!(points, pi.members.into_iter().collect());
}

#[test]
fn example_p3_group_and_conjugacy() {
    let l = example_sec2(3).unwrap().algebra;
    let lat = SubalgebraLattice::new(&l).unwrap();
    let series = chief_series(&l).unwrap();
    let report = verify_conjugacy_theorem(&lat, &l.zero_space(), &series, 10_000).unwrap();
    assert_eq!(report.group_order, Some(27));
    assert!(matches!(report.outcome, ConjugacyOutcome::Conjugate { .. }));
    assert_eq!(report.prefrattini.len(), 27);
}

#[test]
fn hypothesis_failure_is_reported() {
    let f = PrimeField::new(2).unwrap();
    let l = heisenberg_extension(f).algebra;
    let lat = SubalgebraLattice::new(&l).unwrap();
    let report =
        verify_conjugacy_theorem(&lat, &l.zero_space(), &chief_series(&l).unwrap(), 1000).unwrap();
    assert_eq!(report.outcome, ConjugacyOutcome::HypothesisViolated { class: Some(2), p: 2 });
    assert!(matches!(
        inner_generators(&l, &l.nilpotent_residual()),
        Err(Error::Hypothesis { class: Some(2), p: 2 })
    ));
}

#[test]
fn group_cap_is_enforced() {
    let l = example_sec2(3).unwrap().algebra;
    assert!(matches!(
        inner_group(&l, &l.nilpotent_residual(), 5),
        Err(Error::Resource { .. })
    ));
}

proptest! {
    // each case checks the bracket on every pair of elements
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exp_inverse_and_automorphism(p in prop_oneof![Just(2u32), Just(3u32)],
                                    coeffs in prop::collection::vec(0u8..3, 3)) {
        let l = example_sec2(p).unwrap().algebra;
        let mut x = vec![0u8; l.dim()];
        for (i, c) in coeffs.iter().take(p as usize).enumerate() {
            x[i] = c % p as u8;
        }
        let neg: Vec<u8> = x.iter().map(|&v| (p as u8 - v) % p as u8).collect();
        let g = exp_ad(&l, &x).unwrap();
        let h = exp_ad(&l, &neg).unwrap();
        prop_assert!(g.map.then(&h.map) == prefrat_core::LinearMap::identity(l.field(), l.dim()));
        prop_assert!(preserves_all_brackets(&l, |v| g.apply(v)));
        let z = Subspace::span(l.field(), l.dim(), [l.basis_vector(p as usize)]).unwrap();
        prop_assert_eq!(g.image(&z).dim(), 1);
    }

    #[test]
    fn heisenberg_exp_is_automorphism(p in prop_oneof![Just(3u32), Just(5u32)],
                                      a in 0u8..5, b in 0u8..5, c in 0u8..5) {
        let f = PrimeField::new(p).unwrap();
        let l = heisenberg(f).algebra;
        let x = [a, b, c].map(|v| v % p as u8);
        let g = exp_ad(&l, &x).unwrap();
        prop_assert!(preserves_all_brackets(&l, |v| g.apply(v)));
    }
}
