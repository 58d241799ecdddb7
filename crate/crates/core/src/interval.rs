//! Subalgebra intervals `[U:L]`, maximal subalgebras, `φ(S, L)`, complemented
//! intervals and the sets `Ω(U, L)` and `Ω(U, L)_min`.
//!
//! Everything is read off a [`SubalgebraLattice`], which enumerates all
//! subalgebras of `L` once and then decides, for every subalgebra `S`, whether
//! the upper interval `[S:L]` is complemented.
//!
//! Two subalgebras generate `L` exactly when no maximal subalgebra contains
//! both, so joins equal to `L` are decided by intersecting bitsets of
//! containing maximal subalgebras.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactalg::{enumerate_subspaces_between, Subspace};
use crate::liecore::LieAlgebra;

/// Default cap on the number of subspaces scanned while enumerating subalgebras.
pub const DEFAULT_SUBSPACE_BUDGET: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] & (1 << (i % 64)) != 0
    }

    fn disjoint(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == 0)
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
}

/// All subalgebras of a Lie algebra, with the data needed for interval queries.
#[derive(Clone, Debug)]
pub struct SubalgebraLattice {
    algebra: LieAlgebra,
    members: Vec<Subspace>,
    index: BTreeMap<Subspace, usize>,
    maximal: Vec<usize>,
    // for each member, the maximal subalgebras (by position in `maximal`) containing it
    max_mask: Vec<Bits>,
    upper_complemented: Vec<bool>,
}

/// Summary of the interval `[U:L]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalReport {
    pub u: Subspace,
    pub members: Vec<Subspace>,
    pub maximal: Vec<Subspace>,
    pub phi: Subspace,
    pub is_complemented: bool,
}

impl SubalgebraLattice {
    pub fn new(algebra: &LieAlgebra) -> Result<Self> {
        Self::with_budget(algebra, DEFAULT_SUBSPACE_BUDGET)
    }

    pub fn with_budget(algebra: &LieAlgebra, subspace_budget: usize) -> Result<Self> {
        let total = galois_total(algebra.dim(), algebra.field().p() as u128);
        if total > subspace_budget as u128 {
            return Err(Error::Resource {
                what: "subspace enumeration",
                limit: subspace_budget,
            });
        }
        let members: Vec<Subspace> =
            enumerate_subspaces_between(&algebra.zero_space(), &algebra.full_space())?
                .into_iter()
                .filter(|s| algebra.is_subalgebra(s))
                .collect();
        let index: BTreeMap<Subspace, usize> =
            members.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let n = members.len();
        let top = n - 1;

        // Proper subalgebras with no proper strict superalgebra.
        let maximal: Vec<usize> = (0..top)
            .filter(|&i| {
                !(0..top).any(|j| {
                    members[j].dim() > members[i].dim() && members[j].contains(&members[i])
                })
            })
            .collect();
        let mut max_mask = vec![Bits::new(maximal.len()); n];
        for (mi, &m) in maximal.iter().enumerate() {
            for (s, mask) in max_mask.iter_mut().enumerate() {
                if members[m].contains(&members[s]) {
                    mask.set(mi);
                }
            }
        }

        // has_comp[b] marks each S such that b has a complement in [S:L].
        let mut has_comp = vec![Bits::new(n); n];
        for i in 0..n {
            for j in i..n {
                if !max_mask[i].disjoint(&max_mask[j]) {
                    continue;
                }
                let meet = members[i].intersect(&members[j]);
                let s = index[&meet];
                has_comp[i].set(s);
                has_comp[j].set(s);
            }
        }
        let upper_complemented = (0..n)
            .map(|s| {
                (0..n).all(|b| {
                    members[b].dim() < members[s].dim()
                        || !members[b].contains(&members[s])
                        || has_comp[b].get(s)
                })
            })
            .collect();

        Ok(Self {
            algebra: algebra.clone(),
            members,
            index,
            maximal,
            max_mask,
            upper_complemented,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    /// All subalgebras in graded lexicographic order; the first is `0`, the last is `L`.
    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn full(&self) -> &Subspace {
        self.members.last().unwrap()
    }

    pub fn maximal_subalgebras(&self) -> impl Iterator<Item = &Subspace> {
        self.maximal.iter().map(|&i| &self.members[i])
    }

    /// All ideals of `L`, in lattice order.
    pub fn ideals(&self) -> Vec<Subspace> {
        self.members
            .iter()
            .filter(|s| self.algebra.is_ideal(s))
            .cloned()
            .collect()
    }

    fn member_index(&self, s: &Subspace) -> Result<usize> {
        self.algebra.ensure_subalgebra(s)?;
        Ok(self.index[s])
    }

    /// `[S:L]_max`: maximal subalgebras of `L` containing `s`.
    pub fn maximal_containing(&self, s: &Subspace) -> Result<Vec<Subspace>> {
        let i = self.member_index(s)?;
        Ok(self
            .maximal
            .iter()
            .enumerate()
            .filter(|(mi, _)| self.max_mask[i].get(*mi))
            .map(|(_, &m)| self.members[m].clone())
            .collect())
    }

    /// `⟨a, b⟩ = L`.
    pub fn generates(&self, a: &Subspace, b: &Subspace) -> Result<bool> {
        let (i, j) = (self.member_index(a)?, self.member_index(b)?);
        Ok(self.max_mask[i].disjoint(&self.max_mask[j]))
    }

    /// `φ(S, L)`: intersection of the maximal subalgebras containing `s`,
    /// or `L` when there are none.
    pub fn phi_of(&self, s: &Subspace) -> Result<Subspace> {
        let maxes = self.maximal_containing(s)?;
        Ok(maxes
            .iter()
            .fold(self.full().clone(), |acc, m| acc.intersect(m)))
    }

    /// Whether the upper interval `[S:L]` is complemented.
    pub fn is_upper_complemented(&self, s: &Subspace) -> Result<bool> {
        Ok(self.upper_complemented[self.member_index(s)?])
    }

    /// All subalgebras `S` with `u ⊆ S`.
    pub fn interval_members(&self, u: &Subspace) -> Result<Vec<Subspace>> {
        let i = self.member_index(u)?;
        let u = &self.members[i];
        Ok(self.members[i..]
            .iter()
            .filter(|s| s.contains(u))
            .cloned()
            .collect())
    }

    pub fn interval(&self, u: &Subspace) -> Result<IntervalReport> {
        Ok(IntervalReport {
            u: u.clone(),
            members: self.interval_members(u)?,
            maximal: self.maximal_containing(u)?,
            phi: self.phi_of(u)?,
            is_complemented: self.is_upper_complemented(u)?,
        })
    }

    /// `Ω(U, L)`: members `S` of `[U:L]` with `[S:L]` complemented.
    pub fn omega(&self, u: &Subspace) -> Result<Vec<Subspace>> {
        Ok(self
            .interval_members(u)?
            .into_iter()
            .filter(|s| self.upper_complemented[self.index[s]])
            .collect())
    }

    /// Inclusion-minimal elements of `Ω(U, L)`.
    pub fn omega_min(&self, u: &Subspace) -> Result<Vec<Subspace>> {
        let omega = self.omega(u)?;
        Ok(minimal_elements(&omega))
    }

    /// First `T ∈ [U:L]` with `S ∩ T = U` and `⟨S, T⟩ = L`.
    pub fn complement_in_interval(&self, s: &Subspace, u: &Subspace) -> Result<Option<Subspace>> {
        let si = self.member_index(s)?;
        self.member_index(u)?;
        if !s.contains(u) {
            return Err(Error::NotContained);
        }
        for t in self.interval_members(u)? {
            let ti = self.index[&t];
            if self.max_mask[si].disjoint(&self.max_mask[ti]) && s.intersect(&t) == *u {
                return Ok(Some(t));
            }
        }
        Ok(None)
    }

    /// Whether `s` lies in no maximal subalgebra, i.e. `s = L`.
    pub fn is_top(&self, s: &Subspace) -> bool {
        self.index
            .get(s)
            .is_some_and(|&i| self.max_mask[i].is_empty())
    }
}

/// Inclusion-minimal elements of a set of subspaces, preserving order.
pub fn minimal_elements(set: &[Subspace]) -> Vec<Subspace> {
    set.iter()
        .filter(|s| {
            !set
                .iter()
                .any(|t| t.dim() < s.dim() && s.contains(t))
        })
        .cloned()
        .collect()
}

/// Total number of subspaces of `GF(p)^n`.
fn galois_total(n: usize, p: u128) -> u128 {
    (0..=n).map(|k| gaussian_binomial(n, k, p)).sum()
}

fn gaussian_binomial(n: usize, k: usize, p: u128) -> u128 {
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num = num.saturating_mul(p.saturating_pow((n - i) as u32) - 1);
        den = den.saturating_mul(p.pow((i + 1) as u32) - 1);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PrimeField;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn nonabelian2() -> LieAlgebra {
        LieAlgebra::builder(gf(2), ["u", "v"])
            .bracket(0, 1, &[(1, 1)])
            .build()
    }

    fn heisenberg() -> LieAlgebra {
        LieAlgebra::builder(gf(2), ["x", "y", "z"])
            .bracket(0, 1, &[(1, 2)])
            .build()
    }

    #[test]
    fn gaussian_totals() {
        assert_eq!(galois_total(2, 2), 5);
        assert_eq!(galois_total(3, 2), 16);
        assert_eq!(galois_total(4, 2), 67);
        assert_eq!(galois_total(6, 3), 56_632);
    }

    #[test]
    fn abelian_plane() {
        let l = LieAlgebra::abelian(gf(2), 2);
        let lat = SubalgebraLattice::new(&l).unwrap();
        let rep = lat.interval(&l.zero_space()).unwrap();
        assert_eq!(rep.members.len(), 5);
        assert!(rep.is_complemented);
        assert!(rep.phi.is_zero());
        assert_eq!(lat.omega(&l.zero_space()).unwrap().len(), 5);
        assert_eq!(lat.omega_min(&l.zero_space()).unwrap(), vec![l.zero_space()]);
    }

    #[test]
    fn top_interval_is_trivially_complemented() {
        let l = heisenberg();
        let lat = SubalgebraLattice::new(&l).unwrap();
        let rep = lat.interval(&l.full_space()).unwrap();
        assert_eq!(rep.members, vec![l.full_space()]);
        assert!(rep.is_complemented);
        assert_eq!(rep.phi, l.full_space());
        assert!(lat.is_top(&l.full_space()));
    }

    #[test]
    fn nonabelian_maximals() {
        let l = nonabelian2();
        let lat = SubalgebraLattice::new(&l).unwrap();
        let rep = lat.interval(&l.zero_space()).unwrap();
        let lines: Vec<Subspace> = [[0u8, 1], [1, 0], [1, 1]]
            .iter()
            .map(|v| Subspace::span(l.field(), 2, [v]).unwrap())
            .collect();
        let mut expected = lines.clone();
        expected.sort();
        assert_eq!(rep.maximal, expected);
        assert!(rep.phi.is_zero());
    }

    #[test]
    fn heisenberg_frattini_and_missing_complement() {
        let h = heisenberg();
        let lat = SubalgebraLattice::new(&h).unwrap();
        let z = Subspace::span(h.field(), 3, [[0, 0, 1]]).unwrap();
        assert_eq!(lat.phi_of(&h.zero_space()).unwrap(), z);
        assert_eq!(lat.complement_in_interval(&z, &h.zero_space()).unwrap(), None);
        // S = U gives T = L, S = L gives T = U
        assert_eq!(
            lat.complement_in_interval(&z, &z).unwrap(),
            Some(h.full_space())
        );
        assert_eq!(
            lat.complement_in_interval(&h.full_space(), &z).unwrap(),
            Some(z.clone())
        );
    }

    #[test]
    fn rejects_non_subalgebra() {
        let h = heisenberg();
        let lat = SubalgebraLattice::new(&h).unwrap();
        let s = Subspace::span(h.field(), 3, [[1, 0, 0], [0, 1, 0]]).unwrap();
        assert!(matches!(lat.omega(&s), Err(Error::NotSubalgebra { .. })));
    }

    #[test]
    fn budget_guard() {
        let l = LieAlgebra::abelian(gf(3), 6);
        assert!(matches!(
            SubalgebraLattice::with_budget(&l, 1000),
            Err(Error::Resource { .. })
        ));
    }
}
