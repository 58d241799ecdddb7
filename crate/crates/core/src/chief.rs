//! Minimal ideals, chief series, and the `U`-Frattini classification of chief
//! factors.
//!
//! Factor indices are 1-based: factor `i` is `A_i / A_{i-1}`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactalg::{lines_of, Subspace};
use crate::interval::SubalgebraLattice;
use crate::liecore::LieAlgebra;

/// Default cap on search nodes for [`all_chief_series`].
pub const DEFAULT_NODE_BUDGET: usize = 100_000;

/// A chain of ideals `0 = A_0 ⊂ A_1 ⊂ … ⊂ A_n = L`, each factor chief.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChiefSeries {
    ideals: Vec<Subspace>,
}

impl ChiefSeries {
    /// Validate `ideals` as a chief series of `algebra`.
    pub fn new(algebra: &LieAlgebra, ideals: Vec<Subspace>) -> Result<Self> {
        if ideals.first() != Some(&algebra.zero_space()) {
            return Err(Error::InvalidSeries("first term must be 0"));
        }
        if ideals.last() != Some(&algebra.full_space()) {
            return Err(Error::InvalidSeries("last term must be L"));
        }
        for w in ideals.windows(2) {
            if w[1].dim() <= w[0].dim() || !w[1].contains(&w[0]) {
                return Err(Error::InvalidSeries("terms must be strictly increasing"));
            }
        }
        for a in &ideals {
            if !algebra.is_ideal(a) {
                return Err(Error::InvalidSeries("every term must be an ideal"));
            }
        }
        for w in ideals.windows(2) {
            let q = algebra.quotient(&w[0])?;
            let top = q.project(&w[1]);
            let minimal = lines_of(&top).iter().all(|v| {
                let line = Subspace::span(top.field(), top.ambient(), [v]).expect("length");
                q.algebra().ideal_closure(&line) == top
            });
            if !minimal {
                return Err(Error::InvalidSeries("factor is not a chief factor"));
            }
        }
        Ok(Self { ideals })
    }

    pub fn ideals(&self) -> &[Subspace] {
        &self.ideals
    }

    /// Number of chief factors.
    pub fn len(&self) -> usize {
        self.ideals.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `A_i`, for `0 <= i <= len()`.
    pub fn term(&self, i: usize) -> &Subspace {
        &self.ideals[i]
    }

    pub fn factor_dims(&self) -> Vec<usize> {
        self.ideals.windows(2).map(|w| w[1].dim() - w[0].dim()).collect()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        Ok(())
    }
}

/// All minimal ideals of `algebra`, sorted.
///
/// Every minimal ideal is the ideal closure of each of its lines, so closing
/// one representative per line and keeping the minimal results finds them all.
pub fn minimal_ideals(algebra: &LieAlgebra) -> Vec<Subspace> {
    let closures: BTreeSet<Subspace> = lines_of(&algebra.full_space())
        .iter()
        .map(|v| {
            let line = Subspace::span(algebra.field(), algebra.dim(), [v]).expect("length");
            algebra.ideal_closure(&line)
        })
        .collect();
    closures
        .iter()
        .filter(|a| !closures.iter().any(|b| b.dim() < a.dim() && a.contains(b)))
        .cloned()
        .collect()
}

/// Minimal ideals of `L / base`, lifted back to ideals of `L`.
fn minimal_over(algebra: &LieAlgebra, base: &Subspace) -> Result<Vec<Subspace>> {
    let q = algebra.quotient(base)?;
    let mut lifted: Vec<Subspace> = minimal_ideals(q.algebra())
        .iter()
        .map(|m| q.lift(m))
        .collect();
    lifted.sort();
    Ok(lifted)
}

/// The canonical chief series: at each step take the least minimal ideal of
/// the current quotient (compared after lifting to `L`).
pub fn chief_series(algebra: &LieAlgebra) -> Result<ChiefSeries> {
    if !algebra.is_solvable() {
        return Err(Error::NotSolvable);
    }
    let full = algebra.full_space();
    let mut ideals = alloc::vec![algebra.zero_space()];
    while ideals.last().unwrap() != &full {
        let next = minimal_over(algebra, ideals.last().unwrap())?
            .into_iter()
            .next()
            .expect("a proper ideal has a minimal ideal above it");
        ideals.push(next);
    }
    Ok(ChiefSeries { ideals })
}

/// Every chief series of `algebra`, sorted.
pub fn all_chief_series(algebra: &LieAlgebra, node_budget: usize) -> Result<Vec<ChiefSeries>> {
    if !algebra.is_solvable() {
        return Err(Error::NotSolvable);
    }
    let mut out = Vec::new();
    let mut nodes = 0usize;
    let mut prefix = alloc::vec![algebra.zero_space()];
    extend_series(algebra, &mut prefix, &mut out, &mut nodes, node_budget)?;
    out.sort();
    Ok(out)
}

fn extend_series(
    algebra: &LieAlgebra,
    prefix: &mut Vec<Subspace>,
    out: &mut Vec<ChiefSeries>,
    nodes: &mut usize,
    budget: usize,
) -> Result<()> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::Resource {
            what: "chief series enumeration",
            limit: budget,
        });
    }
    let last = prefix.last().unwrap().clone();
    if last.is_full() {
        out.push(ChiefSeries {
            ideals: prefix.clone(),
        });
        return Ok(());
    }
    for next in minimal_over(algebra, &last)? {
        prefix.push(next);
        extend_series(algebra, prefix, out, nodes, budget)?;
        prefix.pop();
    }
    Ok(())
}

/// Classification of one chief factor relative to a subalgebra `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorClassification {
    pub index: usize,
    pub factor_dim: usize,
    pub u_frattini: bool,
    /// `𝓜_i`: maximal subalgebras containing `U + A_{i-1}` but not `A_i`.
    pub complements: Vec<Subspace>,
}

/// `upper/lower` is `U`-Frattini: `upper ⊆ φ(U + lower, L)` or `U + lower = L`.
pub fn is_u_frattini(
    lattice: &SubalgebraLattice,
    lower: &Subspace,
    upper: &Subspace,
    u: &Subspace,
) -> Result<bool> {
    lattice.algebra().ensure_subalgebra(u)?;
    let base = u.sum(lower);
    if base.is_full() {
        return Ok(true);
    }
    Ok(lattice.phi_of(&base)?.contains(upper))
}

pub fn classify_factor(
    lattice: &SubalgebraLattice,
    series: &ChiefSeries,
    i: usize,
    u: &Subspace,
) -> Result<FactorClassification> {
    series.check_index(i)?;
    let lower = series.term(i - 1);
    let upper = series.term(i);
    let u_frattini = is_u_frattini(lattice, lower, upper, u)?;
    let base = u.sum(lower);
    let complements = lattice
        .maximal_containing(&base)?
        .into_iter()
        .filter(|m| !m.contains(upper))
        .collect();
    Ok(FactorClassification {
        index: i,
        factor_dim: upper.dim() - lower.dim(),
        u_frattini,
        complements,
    })
}

/// Classification of every factor of `series`.
pub fn classify_all(
    lattice: &SubalgebraLattice,
    series: &ChiefSeries,
    u: &Subspace,
) -> Result<Vec<FactorClassification>> {
    (1..=series.len())
        .map(|i| classify_factor(lattice, series, i, u))
        .collect()
}

/// Sorted multiset of `(factor dimension, U-Frattini)` pairs.
pub fn jordan_profile(
    lattice: &SubalgebraLattice,
    series: &ChiefSeries,
    u: &Subspace,
) -> Result<Vec<(usize, bool)>> {
    let mut profile = Vec::with_capacity(series.len());
    for w in series.ideals().windows(2) {
        profile.push((w[1].dim() - w[0].dim(), is_u_frattini(lattice, &w[0], &w[1], u)?));
    }
    profile.sort();
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PrimeField;

    fn gf2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn abelian_plane_minimal_ideals_and_series() {
        let l = LieAlgebra::abelian(gf2(), 2);
        assert_eq!(minimal_ideals(&l).len(), 3);
        let all = all_chief_series(&l, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(all.len(), 3);
        let canon = chief_series(&l).unwrap();
        assert_eq!(canon.factor_dims(), alloc::vec![1, 1]);
        // least line in graded-lex order is span(e1) = [[0, 1]]
        assert_eq!(canon.term(1).basis(), &[alloc::vec![0u8, 1]]);
        let lat = SubalgebraLattice::new(&l).unwrap();
        for s in &all {
            assert_eq!(
                jordan_profile(&lat, s, &l.zero_space()).unwrap(),
                alloc::vec![(1, false), (1, false)]
            );
        }
    }

    #[test]
    fn one_dimensional_series() {
        let l = LieAlgebra::abelian(gf2(), 1);
        let s = chief_series(&l).unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn nonabelian_unique_minimal_ideal() {
        let l = LieAlgebra::builder(gf2(), ["u", "v"])
            .bracket(0, 1, &[(1, 1)])
            .build();
        let v = Subspace::span(gf2(), 2, [[0, 1]]).unwrap();
        assert_eq!(minimal_ideals(&l), alloc::vec![v]);
    }

    #[test]
    fn series_validation() {
        let l = LieAlgebra::abelian(gf2(), 2);
        let z = l.zero_space();
        let full = l.full_space();
        assert!(matches!(
            ChiefSeries::new(&l, alloc::vec![z.clone(), full.clone()]),
            Err(Error::InvalidSeries(_))
        ));
        let line = Subspace::span(gf2(), 2, [[1, 0]]).unwrap();
        assert!(ChiefSeries::new(&l, alloc::vec![z, line, full]).is_ok());
    }

    #[test]
    fn classify_index_bounds() {
        let l = LieAlgebra::abelian(gf2(), 2);
        let lat = SubalgebraLattice::new(&l).unwrap();
        let s = chief_series(&l).unwrap();
        assert!(matches!(
            classify_factor(&lat, &s, 0, &l.zero_space()),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            classify_factor(&lat, &s, 3, &l.zero_space()),
            Err(Error::IndexOutOfRange { .. })
        ));
        let all_top = classify_all(&lat, &s, &l.full_space()).unwrap();
        assert!(all_top.iter().all(|c| c.u_frattini && c.complements.is_empty()));
        let zero = classify_all(&lat, &s, &l.zero_space()).unwrap();
        assert!(zero.iter().all(|c| !c.u_frattini && !c.complements.is_empty()));
    }

    #[test]
    fn non_solvable_rejected() {
        // sl2 over GF(3): [h,e] = 2e, [h,f] = -2f, [e,f] = h
        let f3 = PrimeField::new(3).unwrap();
        let sl2 = LieAlgebra::builder(f3, ["h", "e", "f"])
            .bracket(0, 1, &[(2, 1)])
            .bracket(0, 2, &[(-2, 2)])
            .bracket(1, 2, &[(1, 0)])
            .build();
        assert_eq!(sl2.validate(), Ok(()));
        assert_eq!(chief_series(&sl2), Err(Error::NotSolvable));
        assert_eq!(
            all_chief_series(&sl2, DEFAULT_NODE_BUDGET),
            Err(Error::NotSolvable)
        );
    }
}
