//! The lattice, chief-series and prefrattini routines checked against naive
//! re-implementations that work straight from the definitions.

use std::collections::BTreeSet;

use prefrat_core::chief::{all_chief_series, chief_series, classify_all, minimal_ideals, ChiefSeries};
use prefrat_core::corpus::{example_sec2, heisenberg, heisenberg_extension, nonabelian2, split_extension};
use prefrat_core::exactalg::{enumerate_subspaces_between, PrimeField, Subspace};
use prefrat_core::interval::SubalgebraLattice;
use prefrat_core::prefrattini::{avoids, covers, prefrattini_set};
use prefrat_core::LieAlgebra;

fn gf(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn small_algebras() -> Vec<(String, LieAlgebra)> {
    vec![
        ("heisenberg_p2".into(), heisenberg(gf(2)).algebra),
        ("heisenberg_p3".into(), heisenberg(gf(3)).algebra),
        ("nonabelian2_p3".into(), nonabelian2(gf(3)).algebra),
        ("split_ext4_p2".into(), split_extension(gf(2)).algebra),
        ("heisenberg_ext4_p2".into(), heisenberg_extension(gf(2)).algebra),
        ("example_p2".into(), example_sec2(2).unwrap().algebra),
    ]
}

fn all_subspaces(l: &LieAlgebra) -> Vec<Subspace> {
    enumerate_subspaces_between(&l.zero_space(), &l.full_space()).unwrap()
}

/// Subalgebras by checking the bracket on every pair of elements.
fn naive_subalgebras(l: &LieAlgebra) -> Vec<Subspace> {
    all_subspaces(l)
        .into_iter()
        .filter(|s| {
            let els = s.elements();
            els.iter().all(|x| els.iter().all(|y| s.contains_vector(&l.bracket(x, y))))
        })
        .collect()
}

fn naive_ideals(l: &LieAlgebra) -> Vec<Subspace> {
    let all = l.full_space().elements();
    all_subspaces(l)
        .into_iter()
        .filter(|s| {
            s.elements()
                .iter()
                .all(|x| all.iter().all(|y| s.contains_vector(&l.bracket(y, x))))
        })
        .collect()
}

fn naive_maximal(subs: &[Subspace]) -> Vec<Subspace> {
    subs.iter()
        .filter(|m| !m.is_full())
        .filter(|m| !subs.iter().any(|t| !t.is_full() && t.dim() > m.dim() && t.contains(m)))
        .cloned()
        .collect()
}

/// `Ω(U, L)` from the definition, using direct subalgebra generation.
fn naive_omega(l: &LieAlgebra, subs: &[Subspace], u: &Subspace) -> BTreeSet<Subspace> {
    let complemented = |s: &Subspace| {
        subs.iter().filter(|b| b.contains(s)).all(|b| {
            subs.iter().any(|t| {
                t.contains(s) && b.intersect(t) == *s && l.generated_subalgebra(b, t).is_full()
            })
        })
    };
    subs.iter()
        .filter(|s| s.contains(u) && complemented(s))
        .cloned()
        .collect()
}

fn minimal(set: &BTreeSet<Subspace>) -> BTreeSet<Subspace> {
    set.iter()
        .filter(|s| !set.iter().any(|t| t != *s && s.contains(t)))
        .cloned()
        .collect()
}

#[test]
fn lattice_matches_naive_enumeration() {
    for (name, l) in small_algebras() {
        let lat = SubalgebraLattice::new(&l).unwrap();
        let subs = naive_subalgebras(&l);
        assert_eq!(lat.members(), &subs[..], "{name}");
        let maxes: Vec<Subspace> = lat.maximal_subalgebras().cloned().collect();
        let mut naive = naive_maximal(&subs);
        naive.sort();
        let mut got = maxes.clone();
        got.sort();
        assert_eq!(got, naive, "{name}");
        for a in &subs {
            for b in &subs {
                assert_eq!(
                    lat.generates(a, b).unwrap(),
                    l.generated_subalgebra(a, b).is_full(),
                    "{name}"
                );
            }
        }
    }
}

#[test]
fn omega_matches_definition() {
    for (name, l) in small_algebras() {
        if l.dim() > 4 {
            continue;
        }
        let lat = SubalgebraLattice::new(&l).unwrap();
        let subs = lat.members().to_vec();
        for u in &subs {
            let naive = naive_omega(&l, &subs, u);
            let got: BTreeSet<Subspace> = lat.omega(u).unwrap().into_iter().collect();
            assert_eq!(got, naive, "{name}");
            let got_min: BTreeSet<Subspace> = lat.omega_min(u).unwrap().into_iter().collect();
            assert_eq!(got_min, minimal(&naive), "{name}");
        }
    }
}

#[test]
fn example_omega_at_zero_matches_definition() {
    let l = example_sec2(2).unwrap().algebra;
    let lat = SubalgebraLattice::new(&l).unwrap();
    let naive = naive_omega(&l, lat.members(), &l.zero_space());
    let got: BTreeSet<Subspace> = lat.omega(&l.zero_space()).unwrap().into_iter().collect();
    assert_eq!(got, naive);
}

#[test]
fn heisenberg_frattini_is_centre() {
    for p in [2, 3, 5] {
        let l = heisenberg(gf(p)).algebra;
        let lat = SubalgebraLattice::new(&l).unwrap();
        let z = Subspace::span(gf(p), 3, [[0, 0, 1]]).unwrap();
        assert_eq!(lat.phi_of(&l.zero_space()).unwrap(), z);
        // the maximal subalgebras are the p + 1 planes through z
        assert_eq!(lat.maximal_subalgebras().count(), p as usize + 1);
        // z has no complement, so [0:L] is not complemented
        assert!(!lat.is_upper_complemented(&l.zero_space()).unwrap());
        assert_eq!(lat.complement_in_interval(&z, &l.zero_space()).unwrap(), None);
    }
}

#[test]
fn minimal_ideals_match_naive() {
    for (name, l) in small_algebras() {
        let ideals = naive_ideals(&l);
        let nonzero: Vec<&Subspace> = ideals.iter().filter(|s| !s.is_zero()).collect();
        let naive: Vec<Subspace> = nonzero
            .iter()
            .filter(|a| !nonzero.iter().any(|b| b.dim() < a.dim() && a.contains(b)))
            .map(|a| (*a).clone())
            .collect();
        assert_eq!(minimal_ideals(&l), naive, "{name}");
    }
}

/// Number of maximal chains in the ideal lattice.
fn naive_chain_count(ideals: &[Subspace], from: &Subspace) -> usize {
    if from.is_full() {
        return 1;
    }
    let above: Vec<&Subspace> = ideals
        .iter()
        .filter(|b| b.dim() > from.dim() && b.contains(from))
        .collect();
    above
        .iter()
        .filter(|b| !above.iter().any(|c| c.dim() < b.dim() && b.contains(c)))
        .map(|b| naive_chain_count(ideals, b))
        .sum()
}

#[test]
fn chief_series_counts_match_naive() {
    for (name, l) in small_algebras() {
        let ideals = naive_ideals(&l);
        let all = all_chief_series(&l, 100_000).unwrap();
        assert_eq!(all.len(), naive_chain_count(&ideals, &l.zero_space()), "{name}");
        assert!(all.contains(&chief_series(&l).unwrap()));
    }
    // Heisenberg: 0 ⊂ z, then any of the p + 1 lines of L/z
    for p in [2, 3] {
        assert_eq!(all_chief_series(&heisenberg(gf(p)).algebra, 1000).unwrap().len(), p as usize + 1);
    }
    // Example over GF(2): A₁ and A₂ are forced, then L/A₂ is abelian of
    // dimension 2 and any of its 3 lines gives the next term
    assert_eq!(all_chief_series(&example_sec2(2).unwrap().algebra, 1000).unwrap().len(), 3);
}

#[test]
fn chief_series_budget_is_enforced() {
    let l = split_extension(gf(3)).algebra;
    assert!(all_chief_series(&l, 5).is_err());
}

/// `Π(U, L)` by walking the full cartesian product of naively computed
/// complement sets.
fn naive_prefrattini(l: &LieAlgebra, u: &Subspace, series: &ChiefSeries) -> BTreeSet<Subspace> {
    let subs = naive_subalgebras(l);
    let maxes = naive_maximal(&subs);
    let mut sets: Vec<Vec<Subspace>> = Vec::new();
    for w in series.ideals().windows(2) {
        let base = u.sum(&w[0]);
        let over: Vec<&Subspace> = maxes.iter().filter(|m| m.contains(&base)).collect();
        let phi = over.iter().fold(l.full_space(), |acc, m| acc.intersect(m));
        let frattini = base.is_full() || phi.contains(&w[1]);
        if !frattini {
            sets.push(over.into_iter().filter(|m| !m.contains(&w[1])).cloned().collect());
        }
    }
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; sets.len()];
    loop {
        out.insert(
            sets.iter()
                .zip(&idx)
                .fold(l.full_space(), |acc, (s, &i)| acc.intersect(&s[i])),
        );
        let mut k = 0;
        loop {
            if k == sets.len() {
                return out;
            }
            idx[k] += 1;
            if idx[k] < sets[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn prefrattini_matches_naive_product() {
    for (name, l) in small_algebras() {
        let lat = SubalgebraLattice::new(&l).unwrap();
        let series = chief_series(&l).unwrap();
        for u in lat.members() {
            let got: BTreeSet<Subspace> = prefrattini_set(&lat, u, &series)
                .unwrap()
                .members
                .into_iter()
                .collect();
            assert_eq!(got, naive_prefrattini(&l, u, &series), "{name} {u:?}");
        }
    }
}

#[test]
fn example_golden_at_zero() {
    let l = example_sec2(2).unwrap().algebra;
    let f = gf(2);
    let lat = SubalgebraLattice::new(&l).unwrap();
    let span = |vs: &[[u8; 5]]| Subspace::span(f, 5, vs.iter()).unwrap();
    let a1 = span(&[[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]]);
    let a2 = span(&[[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0]]);
    let a3 = span(&[[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0]]);
    // the series A₁ ⊂ A₂ ⊂ A₂ ⊕ Fs ⊂ L is one of the three chief series
    let series = ChiefSeries::new(&l, vec![l.zero_space(), a1.clone(), a2, a3, l.full_space()]).unwrap();
    assert_eq!(series.factor_dims(), vec![2, 1, 1, 1]);
    let classes = classify_all(&lat, &series, &l.zero_space()).unwrap();
    let flags: Vec<bool> = classes.iter().map(|c| c.u_frattini).collect();
    assert_eq!(flags, vec![false, true, false, false]);
    // every complement M of a factor satisfies L = A_i + M, A_i ∩ M = A_{i-1}
    for c in &classes {
        for m in &c.complements {
            assert!(m.sum(series.term(c.index)).is_full());
            assert_eq!(&m.intersect(series.term(c.index)), series.term(c.index - 1));
        }
    }

    let pi = prefrattini_set(&lat, &l.zero_space(), &series).unwrap();
    let expected: Vec<Subspace> = [[0, 0, 1, 0, 0], [0, 1, 1, 0, 0], [1, 0, 1, 0, 0], [1, 1, 1, 0, 0]]
        .iter()
        .map(|v| span(&[*v]))
        .collect();
    let mut got = pi.members.clone();
    got.sort();
    let mut want = expected.clone();
    want.sort();
    assert_eq!(got, want);
    assert_eq!(pi.common_dim, Some(1));

    // span(c) covers the Frattini factor A₂/A₁ and avoids the rest
    let c = span(&[[0, 0, 1, 0, 0]]);
    let covered: Vec<bool> = (1..=4).map(|i| covers(&c, &series, i).unwrap()).collect();
    let avoided: Vec<bool> = (1..=4).map(|i| avoids(&c, &series, i).unwrap()).collect();
    assert_eq!(covered, vec![false, true, false, false]);
    assert_eq!(avoided, vec![true, false, true, true]);
    // a line inside A₁ cannot cover A₂/A₁
    let e0 = span(&[[1, 0, 0, 0, 0]]);
    assert!(!covers(&e0, &series, 2).unwrap());
    assert!(!pi.members.contains(&e0));
}
