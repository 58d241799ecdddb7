use alloc::vec::Vec;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactalg::{left_kernel, LinearMap, Subspace};

impl LieAlgebra {
    fn check_space(&self, s: &Subspace) -> Result<()> {
        if s.field() != self.field() {
            return Err(Error::FieldMismatch {
                left: self.field().p(),
                right: s.field().p(),
            });
        }
        if s.ambient() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient(),
            });
        }
        Ok(())
    }

    /// `[A, B]`: span of brackets of basis pairs.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut rows = Vec::with_capacity(a.dim() * b.dim());
        for x in a.basis() {
            for y in b.basis() {
                let z = self.bracket(x, y);
                if z.iter().any(|&c| c != 0) {
                    rows.push(z);
                }
            }
        }
        Subspace::span(self.field(), self.dim(), rows).expect("bracket preserves length")
    }

    /// A pair of basis vectors whose bracket leaves `s`, if any.
    pub fn closure_witness(&self, s: &Subspace) -> Option<(Vec<u8>, Vec<u8>)> {
        let basis = s.basis();
        for (i, x) in basis.iter().enumerate() {
            for y in &basis[i + 1..] {
                if !s.contains_vector(&self.bracket(x, y)) {
                    return Some((x.clone(), y.clone()));
                }
            }
        }
        None
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        self.closure_witness(s).is_none()
    }

    /// `Ok(())` when `s` is a subalgebra, otherwise a non-closed bracket witness.
    pub fn ensure_subalgebra(&self, s: &Subspace) -> Result<()> {
        self.check_space(s)?;
        match self.closure_witness(s) {
            None => Ok(()),
            Some((left, right)) => Err(Error::NotSubalgebra { left, right }),
        }
    }

    /// Smallest subalgebra containing `s`.
    pub fn subalgebra_closure(&self, s: &Subspace) -> Subspace {
        let mut v = s.clone();
        loop {
            let next = v.sum(&self.product_space(&v, &v));
            if next.dim() == v.dim() {
                return v;
            }
            v = next;
        }
    }

    /// `⟨A, B⟩`: the subalgebra generated by `A + B`.
    pub fn generated_subalgebra(&self, a: &Subspace, b: &Subspace) -> Subspace {
        self.subalgebra_closure(&a.sum(b))
    }

    pub fn is_ideal(&self, a: &Subspace) -> bool {
        a.contains(&self.product_space(a, &self.full_space()))
    }

    pub fn ensure_ideal(&self, a: &Subspace) -> Result<()> {
        self.check_space(a)?;
        if self.is_ideal(a) {
            Ok(())
        } else {
            Err(Error::NotIdeal)
        }
    }

    /// Smallest ideal containing `a`.
    pub fn ideal_closure(&self, a: &Subspace) -> Subspace {
        let full = self.full_space();
        let mut v = a.clone();
        loop {
            let next = v.sum(&self.product_space(&v, &full));
            if next.dim() == v.dim() {
                return v;
            }
            v = next;
        }
    }

    /// `C_L(B) = { x : [x, B] = 0 }`.
    pub fn centraliser(&self, b: &Subspace) -> Subspace {
        let n = self.dim();
        if b.is_zero() {
            return self.full_space();
        }
        // row i: ([e_i, b_1], ..., [e_i, b_m]) concatenated
        let rows: Vec<Vec<u8>> = (0..n)
            .map(|i| {
                let e = self.basis_vector(i);
                b.basis().iter().flat_map(|y| self.bracket(&e, y)).collect()
            })
            .collect();
        let kernel = left_kernel(self.field(), &rows, n * b.dim());
        Subspace::span(self.field(), n, kernel).expect("kernel vectors have length n")
    }

    /// `L ⊇ L' ⊇ L'' ⊇ …` until it stabilises.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = alloc::vec![self.full_space()];
        loop {
            let last = series.last().unwrap();
            let next = self.product_space(last, last);
            if next.dim() == last.dim() {
                return series;
            }
            series.push(next);
        }
    }

    /// `L = L^1 ⊇ L^2 = [L, L] ⊇ L^3 = [L^2, L] ⊇ …` until it stabilises.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        self.subalgebra_lower_central(&self.full_space())
    }

    fn subalgebra_lower_central(&self, a: &Subspace) -> Vec<Subspace> {
        let mut series = alloc::vec![a.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.product_space(last, a);
            if next.dim() == last.dim() {
                return series;
            }
            series.push(next);
        }
    }

    /// `L^∞`, the stable term of the lower central series.
    pub fn nilpotent_residual(&self) -> Subspace {
        self.lower_central_series().pop().unwrap()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    /// Whether the subalgebra `a` is nilpotent as an algebra in its own right.
    pub fn is_nilpotent(&self, a: &Subspace) -> Result<bool> {
        self.ensure_subalgebra(a)?;
        Ok(self.subalgebra_lower_central(a).last().unwrap().is_zero())
    }

    /// Least `c` with `A^{c+1} = 0`; the zero subalgebra has class 0.
    pub fn nilpotency_class(&self, a: &Subspace) -> Result<usize> {
        self.ensure_subalgebra(a)?;
        let series = self.subalgebra_lower_central(a);
        if !series.last().unwrap().is_zero() {
            return Err(Error::NotNilpotent);
        }
        Ok(series.len() - 1)
    }

    /// `L^2` is nilpotent.
    pub fn is_completely_solvable(&self) -> bool {
        let full = self.full_space();
        let derived = self.product_space(&full, &full);
        self.subalgebra_lower_central(&derived).last().unwrap().is_zero()
    }

    /// The subalgebra `s` as a Lie algebra on its canonical basis, together
    /// with the embedding map into `L`.
    pub fn restrict(&self, s: &Subspace) -> Result<(LieAlgebra, LinearMap)> {
        self.ensure_subalgebra(s)?;
        let basis = s.basis();
        let pivots = s.pivots();
        let m = basis.len();
        let labels = pivots.iter().map(|&c| self.labels()[c].clone()).collect::<Vec<_>>();
        let mut builder = LieAlgebra::builder(self.field(), labels);
        for i in 0..m {
            for j in i + 1..m {
                let z = self.bracket(&basis[i], &basis[j]);
                // rref basis: coordinates are the entries at the pivot columns
                let terms: Vec<(i64, usize)> = pivots
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| z[c] != 0)
                    .map(|(k, &c)| (z[c] as i64, k))
                    .collect();
                builder = builder.bracket(i, j, &terms);
            }
        }
        let embedding = LinearMap::from_rows(self.field(), self.dim(), basis.to_vec())?;
        Ok((builder.build(), embedding))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PrimeField;

    fn heisenberg(p: u32) -> LieAlgebra {
        LieAlgebra::builder(PrimeField::new(p).unwrap(), ["x", "y", "z"])
            .bracket(0, 1, &[(1, 2)])
            .build()
    }

    #[test]
    fn abelian_products_vanish() {
        let l = LieAlgebra::abelian(PrimeField::new(2).unwrap(), 3);
        let full = l.full_space();
        assert!(l.product_space(&full, &full).is_zero());
        assert_eq!(l.centraliser(&full), full);
        assert!(l.nilpotent_residual().is_zero());
        assert!(l.is_completely_solvable());
        assert_eq!(l.nilpotency_class(&full), Ok(1));
    }

    #[test]
    fn heisenberg_series() {
        let h = heisenberg(2);
        let z = Subspace::span(h.field(), 3, [[0, 0, 1]]).unwrap();
        assert_eq!(h.lower_central_series().len(), 3);
        assert!(h.nilpotent_residual().is_zero());
        assert_eq!(h.nilpotency_class(&h.full_space()), Ok(2));
        assert_eq!(h.centraliser(&h.full_space()), z);
        assert_eq!(h.centraliser(&h.zero_space()), h.full_space());
        assert!(h.is_ideal(&z));
        assert_eq!(h.derived_series().len(), 3);
    }

    #[test]
    fn generated_subalgebra_of_two_lines() {
        let h = heisenberg(3);
        let x = Subspace::span(h.field(), 3, [[1, 0, 0]]).unwrap();
        let y = Subspace::span(h.field(), 3, [[0, 1, 0]]).unwrap();
        assert_eq!(h.generated_subalgebra(&x, &y), h.full_space());
        assert_eq!(h.generated_subalgebra(&x, &h.zero_space()), x);
    }

    #[test]
    fn non_subalgebra_reports_witness() {
        let h = heisenberg(2);
        let s = Subspace::span(h.field(), 3, [[1, 0, 0], [0, 1, 0]]).unwrap();
        assert!(matches!(h.ensure_subalgebra(&s), Err(Error::NotSubalgebra { .. })));
        assert_eq!(h.nilpotency_class(&s).unwrap_err(), h.ensure_subalgebra(&s).unwrap_err());
    }

    #[test]
    fn ideal_closure_idempotent() {
        let h = heisenberg(2);
        let x = Subspace::span(h.field(), 3, [[1, 0, 0]]).unwrap();
        let c = h.ideal_closure(&x);
        assert_eq!(c.dim(), 2);
        assert_eq!(h.ideal_closure(&c), c);
    }

    #[test]
    fn nonnilpotent_class_is_error() {
        let l = LieAlgebra::builder(PrimeField::new(2).unwrap(), ["u", "v"])
            .bracket(0, 1, &[(1, 1)])
            .build();
        assert_eq!(l.nilpotency_class(&l.full_space()), Err(Error::NotNilpotent));
        assert_eq!(l.is_nilpotent(&l.full_space()), Ok(false));
    }

    #[test]
    fn restriction_matches_parent_bracket() {
        let h = heisenberg(3);
        let s = Subspace::span(h.field(), 3, [[1, 1, 0], [0, 0, 1]]).unwrap();
        let (sub, emb) = h.restrict(&s).unwrap();
        assert_eq!(sub.validate(), Ok(()));
        assert_eq!(sub.dim(), 2);
        for i in 0..2 {
            for j in 0..2 {
                let bi = sub.basis_vector(i);
                let bj = sub.basis_vector(j);
                assert_eq!(
                    emb.apply(&sub.bracket(&bi, &bj)),
                    h.bracket(&emb.apply(&bi), &emb.apply(&bj))
                );
            }
        }
    }
}
