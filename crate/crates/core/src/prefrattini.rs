//! `U`-prefrattini subalgebras `Π(U, L)`: intersections `∩_{i ∈ 𝓘} M_i` with
//! one `M_i` chosen from each `𝓜_i`, plus the cover/avoid tests and the
//! comparisons against `Ω(U, L)_min` and `φ(U, L)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::chief::{classify_all, ChiefSeries};
use crate::error::{Error, Result};
use crate::exactalg::Subspace;
use crate::interval::SubalgebraLattice;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefrattiniResult {
    pub series: ChiefSeries,
    /// `𝓘`: indices of the factors that are not `U`-Frattini.
    pub index_set: Vec<usize>,
    /// For each member, one choice `(M_i)_{i ∈ 𝓘}` realising it.
    pub choices: Vec<Vec<Subspace>>,
    /// Distinct intersections, sorted.
    pub members: Vec<Subspace>,
    pub common_dim: Option<usize>,
}

/// Enumerate `Π(U, L)` relative to `series`.
///
/// The cartesian product of the `𝓜_i` is walked level by level, keeping only
/// distinct partial intersections.
pub fn prefrattini_set(
    lattice: &SubalgebraLattice,
    u: &Subspace,
    series: &ChiefSeries,
) -> Result<PrefrattiniResult> {
    let algebra = lattice.algebra();
    if series.term(series.len()) != lattice.full() {
        return Err(Error::InvalidSeries("series does not end in L"));
    }
    let classes = classify_all(lattice, series, u)?;
    let index_set: Vec<usize> = classes
        .iter()
        .filter(|c| !c.u_frattini)
        .map(|c| c.index)
        .collect();

    // partial intersection -> first choice tuple reaching it
    let mut level: BTreeMap<Subspace, Vec<Subspace>> = BTreeMap::new();
    level.insert(algebra.full_space(), Vec::new());
    for c in classes.iter().filter(|c| !c.u_frattini) {
        let mut next: BTreeMap<Subspace, Vec<Subspace>> = BTreeMap::new();
        for (partial, choice) in &level {
            for m in &c.complements {
                let meet = partial.intersect(m);
                next.entry(meet).or_insert_with(|| {
                    let mut ch = choice.clone();
                    ch.push(m.clone());
                    ch
                });
            }
        }
        level = next;
    }
    let members: Vec<Subspace> = level.keys().cloned().collect();
    let choices = level.into_values().collect();
    let common_dim = members
        .first()
        .map(|m| m.dim())
        .filter(|d| members.iter().all(|m| m.dim() == *d));
    Ok(PrefrattiniResult {
        series: series.clone(),
        index_set,
        choices,
        members,
        common_dim,
    })
}

/// `B` covers factor `i`: `B + A_i = B + A_{i-1}`.
pub fn covers(b: &Subspace, series: &ChiefSeries, i: usize) -> Result<bool> {
    check_factor(series, i)?;
    Ok(b.sum(series.term(i)) == b.sum(series.term(i - 1)))
}

/// `B` avoids factor `i`: `B ∩ A_i = B ∩ A_{i-1}`.
pub fn avoids(b: &Subspace, series: &ChiefSeries, i: usize) -> Result<bool> {
    check_factor(series, i)?;
    Ok(b.intersect(series.term(i)) == b.intersect(series.term(i - 1)))
}

fn check_factor(series: &ChiefSeries, i: usize) -> Result<()> {
    if i == 0 || i > series.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: series.len(),
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionCheck {
    /// Sum of the dimensions of the `U`-Frattini factors.
    pub expected: usize,
    /// Dimensions of the members of `Π(U, L)`.
    pub actual: Vec<usize>,
}

impl DimensionCheck {
    pub fn holds(&self) -> bool {
        self.actual.iter().all(|&d| d == self.expected)
    }
}

pub fn dimension_formula_check(
    lattice: &SubalgebraLattice,
    u: &Subspace,
    series: &ChiefSeries,
) -> Result<DimensionCheck> {
    let classes = classify_all(lattice, series, u)?;
    let expected = classes
        .iter()
        .filter(|c| c.u_frattini)
        .map(|c| c.factor_dim)
        .sum();
    let pi = prefrattini_set(lattice, u, series)?;
    Ok(DimensionCheck {
        expected,
        actual: pi.members.iter().map(Subspace::dim).collect(),
    })
}

/// `Ω(U, L)_min` against `Π(U, L)` on the canonical chief series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefratTheoremReport {
    pub omega_min: Vec<Subspace>,
    pub prefrattini: Vec<Subspace>,
    pub only_in_omega_min: Vec<Subspace>,
    pub only_in_prefrattini: Vec<Subspace>,
}

impl PrefratTheoremReport {
    pub fn equal(&self) -> bool {
        self.only_in_omega_min.is_empty() && self.only_in_prefrattini.is_empty()
    }
}

pub fn verify_prefrat_theorem(
    lattice: &SubalgebraLattice,
    u: &Subspace,
    series: &ChiefSeries,
) -> Result<PrefratTheoremReport> {
    let omega_min = lattice.omega_min(u)?;
    let prefrattini = prefrattini_set(lattice, u, series)?.members;
    let only_in_omega_min = omega_min
        .iter()
        .filter(|s| !prefrattini.contains(s))
        .cloned()
        .collect();
    let only_in_prefrattini = prefrattini
        .iter()
        .filter(|s| !omega_min.contains(s))
        .cloned()
        .collect();
    Ok(PrefratTheoremReport {
        omega_min,
        prefrattini,
        only_in_omega_min,
        only_in_prefrattini,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiIntersectionReport {
    pub phi: Subspace,
    pub intersection: Subspace,
}

impl PhiIntersectionReport {
    pub fn equal(&self) -> bool {
        self.phi == self.intersection
    }
}

/// `φ(U, L)` against the intersection of all members of `Π(U, L)`.
pub fn phi_intersection_check(
    lattice: &SubalgebraLattice,
    u: &Subspace,
    series: &ChiefSeries,
) -> Result<PhiIntersectionReport> {
    let phi = lattice.phi_of(u)?;
    let intersection = prefrattini_set(lattice, u, series)?
        .members
        .iter()
        .fold(lattice.full().clone(), |acc, b| acc.intersect(b));
    Ok(PhiIntersectionReport { phi, intersection })
}
