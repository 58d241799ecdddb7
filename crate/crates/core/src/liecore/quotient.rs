use alloc::vec::Vec;

use super::LieAlgebra;
use crate::error::Result;
use crate::exactalg::{axpy, complete_basis, LinearMap, Subspace};

/// `L/A` on the coset representatives chosen by [`complete_basis`].
///
/// The representatives are the unit vectors at the non-pivot columns of `A`,
/// so projecting a vector reads those coordinates after reducing modulo `A`.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    ideal: Subspace,
    quotient: LieAlgebra,
    projection: LinearMap,
    section: Vec<Vec<u8>>,
}

impl QuotientPresentation {
    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.quotient
    }

    /// The projection `L -> L/A` as a `dim L × dim L/A` matrix.
    pub fn projection(&self) -> &LinearMap {
        &self.projection
    }

    pub fn section(&self) -> &[Vec<u8>] {
        &self.section
    }

    pub fn project_vector(&self, v: &[u8]) -> Vec<u8> {
        self.projection.apply(v)
    }

    pub fn lift_vector(&self, v: &[u8]) -> Vec<u8> {
        let field = self.ideal.field();
        let mut out = alloc::vec![0u8; self.ideal.ambient()];
        for (c, rep) in v.iter().zip(&self.section) {
            axpy(field, &mut out, *c, rep);
        }
        out
    }

    /// `(S + A)/A`.
    pub fn project(&self, s: &Subspace) -> Subspace {
        self.projection.image(s)
    }

    /// Full preimage of a subspace of `L/A`.
    pub fn lift(&self, s: &Subspace) -> Subspace {
        let lifted = s.basis().iter().map(|v| self.lift_vector(v));
        let rows: Vec<Vec<u8>> = self.ideal.basis().iter().cloned().chain(lifted).collect();
        Subspace::span(self.ideal.field(), self.ideal.ambient(), rows).expect("lengths match")
    }
}

impl LieAlgebra {
    pub fn quotient(&self, ideal: &Subspace) -> Result<QuotientPresentation> {
        self.ensure_ideal(ideal)?;
        let full = self.full_space();
        let section = complete_basis(ideal, &full)?;
        let free_cols: Vec<usize> = section
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("nonzero"))
            .collect();
        let m = section.len();
        let proj_rows: Vec<Vec<u8>> = (0..self.dim())
            .map(|i| {
                let reduced = ideal.reduce(&self.basis_vector(i));
                free_cols.iter().map(|&c| reduced[c]).collect()
            })
            .collect();
        let projection = LinearMap::from_rows(self.field(), m, proj_rows)?;
        let labels = free_cols.iter().map(|&c| self.labels()[c].clone()).collect::<Vec<_>>();
        let mut builder = LieAlgebra::builder(self.field(), labels);
        for i in 0..m {
            for j in i + 1..m {
                let z = projection.apply(&self.bracket(&section[i], &section[j]));
                let terms: Vec<(i64, usize)> = z
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(k, &c)| (c as i64, k))
                    .collect();
                builder = builder.bracket(i, j, &terms);
            }
        }
        Ok(QuotientPresentation {
            ideal: ideal.clone(),
            quotient: builder.build(),
            projection,
            section,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::exactalg::PrimeField;

    #[test]
    fn quotient_by_zero_is_identity() {
        let l = LieAlgebra::builder(PrimeField::new(3).unwrap(), ["u", "v"])
            .bracket(0, 1, &[(1, 1)])
            .build();
        let q = l.quotient(&l.zero_space()).unwrap();
        assert_eq!(q.algebra(), &l);
        assert_eq!(q.projection(), &LinearMap::identity(l.field(), 2));
    }

    #[test]
    fn quotient_requires_ideal() {
        let l = LieAlgebra::builder(PrimeField::new(3).unwrap(), ["u", "v"])
            .bracket(0, 1, &[(1, 1)])
            .build();
        let u = Subspace::span(l.field(), 2, [[1, 0]]).unwrap();
        assert_eq!(l.quotient(&u).unwrap_err(), Error::NotIdeal);
    }

    #[test]
    fn heisenberg_mod_center_is_abelian() {
        let h = LieAlgebra::builder(PrimeField::new(5).unwrap(), ["x", "y", "z"])
            .bracket(0, 1, &[(1, 2)])
            .build();
        let z = Subspace::span(h.field(), 3, [[0, 0, 1]]).unwrap();
        let q = h.quotient(&z).unwrap();
        assert_eq!(q.algebra(), &LieAlgebra::builder(h.field(), ["x", "y"]).build());
        let s = Subspace::span(h.field(), 3, [[1, 0, 0], [0, 0, 1]]).unwrap();
        assert_eq!(q.lift(&q.project(&s)), s);
    }
}
