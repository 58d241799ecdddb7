use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::field::PrimeField;
use crate::error::{Error, Result};

/// `y += a * x`, entrywise over `field`.
#[inline]
pub(crate) fn axpy(field: PrimeField, y: &mut [u8], a: u8, x: &[u8]) {
    if a == 0 {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        if xi != 0 {
            *yi = field.add(*yi, field.mul(a, xi));
        }
    }
}

/// Reduced row echelon form with zero rows removed.
///
/// Every row must have length `ncols`.
pub fn rref(field: PrimeField, mut rows: Vec<Vec<u8>>, ncols: usize) -> Vec<Vec<u8>> {
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]).expect("nonzero pivot");
        for x in rows[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = field.neg(row[col]);
                axpy(field, row, factor, &pivot_row);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

/// Left kernel: all coefficient vectors `c` with `sum_i c_i * rows[i] = 0`,
/// returned as a canonical basis.
pub fn left_kernel(field: PrimeField, rows: &[Vec<u8>], ncols: usize) -> Vec<Vec<u8>> {
    let m = rows.len();
    let aug: Vec<Vec<u8>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = Vec::with_capacity(ncols + m);
            v.extend_from_slice(r);
            v.resize(ncols + m, 0);
            v[ncols + i] = 1;
            v
        })
        .collect();
    let reduced = rref(field, aug, ncols + m);
    let kernel: Vec<Vec<u8>> = reduced
        .into_iter()
        .filter(|r| r[..ncols].iter().all(|&x| x == 0))
        .map(|r| r[ncols..].to_vec())
        .collect();
    rref(field, kernel, m)
}

/// A subspace of `GF(p)^n`, stored by its unique reduced row echelon basis.
///
/// Equality of subspaces is equality of the stored matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u8>>,
}

/// Graded lexicographic: by dimension, then by basis rows.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then(self.ambient.cmp(&other.ambient))
            .then(self.rows.len().cmp(&other.rows.len()))
            .then_with(|| self.rows.cmp(&other.rows))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self {
            field,
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![0u8; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Self {
            field,
            ambient,
            rows,
        }
    }

    /// Canonical span of `vectors`. Entries are reduced mod p.
    pub fn span<I, V>(field: PrimeField, ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[u8]>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            let v = v.as_ref();
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            rows.push(v.iter().map(|&x| x % field.p()).collect());
        }
        Ok(Self::from_rows_unchecked(field, ambient, rows))
    }

    pub(crate) fn from_rows_unchecked(field: PrimeField, ambient: usize, rows: Vec<Vec<u8>>) -> Self {
        Self {
            field,
            ambient,
            rows: rref(field, rows, ambient),
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("rref rows are nonzero"))
            .collect()
    }

    /// Reduce `v` modulo this subspace: the result vanishes on every pivot column.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let mut out = v.to_vec();
        for (row, piv) in self.rows.iter().zip(self.pivots()) {
            if out[piv] != 0 {
                let factor = self.field.neg(out[piv]);
                axpy(self.field, &mut out, factor, row);
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[u8]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.p(),
                right: other.field.p(),
            });
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// `other ⊆ self`.
    ///
    /// # Panics
    /// On ambient or field mismatch.
    pub fn contains(&self, other: &Subspace) -> bool {
        self.assert_compatible(other);
        other.dim() <= self.dim() && other.rows.iter().all(|r| self.contains_vector(r))
    }

    /// Subspace sum `self + other`.
    ///
    /// # Panics
    /// On ambient or field mismatch.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.assert_compatible(other);
        if other.is_zero() || self.is_full() {
            return self.clone();
        }
        if self.is_zero() || other.is_full() {
            return other.clone();
        }
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        Self::from_rows_unchecked(self.field, self.ambient, rows)
    }

    /// Intersection, computed with the Zassenhaus block matrix `[a a; b 0]`.
    ///
    /// # Panics
    /// On ambient or field mismatch.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.assert_compatible(other);
        if self.contains(other) {
            return other.clone();
        }
        if other.contains(self) {
            return self.clone();
        }
        let n = self.ambient;
        let mut block = Vec::with_capacity(self.dim() + other.dim());
        for r in &self.rows {
            let mut v = r.clone();
            v.extend_from_slice(r);
            block.push(v);
        }
        for r in &other.rows {
            let mut v = r.clone();
            v.resize(2 * n, 0);
            block.push(v);
        }
        let reduced = rref(self.field, block, 2 * n);
        let rows = reduced
            .into_iter()
            .filter(|r| r[..n].iter().all(|&x| x == 0))
            .map(|r| r[n..].to_vec())
            .collect();
        Self::from_rows_unchecked(self.field, n, rows)
    }

    pub fn try_sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(self.sum(other))
    }

    pub fn try_intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(self.intersect(other))
    }

    pub fn try_contains(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.contains(other))
    }

    /// Every vector of the subspace, in the order of their coefficient tuples.
    pub fn elements(&self) -> Vec<Vec<u8>> {
        let p = self.field.p();
        let d = self.dim();
        let mut out = Vec::with_capacity((p as usize).pow(d as u32));
        let mut coeffs = vec![0u8; d];
        loop {
            let mut v = vec![0u8; self.ambient];
            for (c, row) in coeffs.iter().zip(&self.rows) {
                axpy(self.field, &mut v, *c, row);
            }
            out.push(v);
            // odometer increment
            let mut k = 0;
            loop {
                if k == d {
                    return out;
                }
                coeffs[k] += 1;
                if coeffs[k] == p {
                    coeffs[k] = 0;
                    k += 1;
                } else {
                    break;
                }
            }
        }
    }

    fn assert_compatible(&self, other: &Subspace) {
        assert!(
            self.field == other.field && self.ambient == other.ambient,
            "incompatible subspaces: {}^{} vs {}^{}",
            self.field,
            self.ambient,
            other.field,
            other.ambient
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f2 = gf(2);
        assert_eq!(
            rref(f2, vec![vec![1, 1], vec![0, 1]], 2),
            vec![vec![1, 0], vec![0, 1]]
        );
        assert_eq!(rref(gf(5), vec![vec![2, 4]], 2), vec![vec![1, 2]]);
        assert_eq!(rref(f2, vec![vec![1, 1], vec![1, 1]], 2), vec![vec![1, 1]]);
    }

    #[test]
    fn span_examples() {
        let f2 = gf(2);
        let z = Subspace::span(f2, 3, Vec::<Vec<u8>>::new()).unwrap();
        assert_eq!(z.dim(), 0);
        let s = Subspace::span(f2, 3, [[1, 1, 0], [0, 1, 0]]).unwrap();
        assert_eq!(s.basis(), &[vec![1, 0, 0], vec![0, 1, 0]]);
        assert_eq!(
            Subspace::span(f2, 3, [vec![1, 0]]),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn sum_and_intersection_of_axes() {
        let f2 = gf(2);
        let a = Subspace::span(f2, 3, [[1, 0, 0]]).unwrap();
        let b = Subspace::span(f2, 3, [[0, 1, 0]]).unwrap();
        assert_eq!(a.sum(&b).dim(), 2);
        assert_eq!(a.intersect(&b).dim(), 0);
        assert_eq!(a.sum(&a), a);
        assert_eq!(a.intersect(&a), a);
    }

    #[test]
    fn mismatched_ambients_are_errors() {
        let f2 = gf(2);
        let a = Subspace::zero(f2, 2);
        let b = Subspace::zero(f2, 3);
        assert!(a.try_sum(&b).is_err());
        assert!(a.try_intersect(&b).is_err());
        let c = Subspace::zero(gf(3), 2);
        assert_eq!(
            a.try_contains(&c),
            Err(Error::FieldMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn left_kernel_of_dependent_rows() {
        let f3 = gf(3);
        let rows = vec![vec![1, 2], vec![2, 1], vec![0, 1]];
        let k = left_kernel(f3, &rows, 2);
        // rows[0] + rows[1] = 0
        assert_eq!(k.len(), 1);
        let mut acc = vec![0u8; 2];
        for (c, r) in k[0].iter().zip(&rows) {
            axpy(f3, &mut acc, *c, r);
        }
        assert_eq!(acc, vec![0, 0]);
    }

    #[test]
    fn elements_enumerates_all_vectors() {
        let s = Subspace::span(gf(3), 3, [[1, 0, 1], [0, 1, 2]]).unwrap();
        let els = s.elements();
        assert_eq!(els.len(), 9);
        assert!(els.iter().all(|v| s.contains_vector(v)));
    }

    #[test]
    fn ordering_is_graded() {
        let f2 = gf(2);
        let line = Subspace::span(f2, 2, [[1, 1]]).unwrap();
        assert!(Subspace::zero(f2, 2) < line);
        assert!(line < Subspace::full(f2, 2));
    }
}
