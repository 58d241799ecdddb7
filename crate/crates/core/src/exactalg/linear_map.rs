use alloc::vec;
use alloc::vec::Vec;

use super::field::PrimeField;
use super::subspace::{axpy, rref, Subspace};
use crate::error::{Error, Result};

/// A linear map `GF(p)^n -> GF(p)^m` acting on row vectors: `v ↦ v · M`.
///
/// Row `i` of the matrix is the image of the `i`-th unit vector. Composition
/// `f.then(g)` applies `f` first, matching the right-action notation `S φ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearMap {
    field: PrimeField,
    cols: usize,
    rows: Vec<Vec<u8>>,
}

impl LinearMap {
    pub fn from_rows(field: PrimeField, cols: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x % field.p()).collect())
            .collect();
        Ok(Self { field, cols, rows })
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        Self::from_rows_unchecked(field, n, Subspace::full(field, n).basis().to_vec())
    }

    pub fn zero(field: PrimeField, n: usize, m: usize) -> Self {
        Self::from_rows_unchecked(field, m, vec![vec![0; m]; n])
    }

    pub(crate) fn from_rows_unchecked(field: PrimeField, cols: usize, rows: Vec<Vec<u8>>) -> Self {
        Self { field, cols, rows }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn source_dim(&self) -> usize {
        self.rows.len()
    }

    pub fn target_dim(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|&x| x == 0))
    }

    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        debug_assert_eq!(v.len(), self.rows.len());
        let mut out = vec![0u8; self.cols];
        for (c, row) in v.iter().zip(&self.rows) {
            axpy(self.field, &mut out, *c, row);
        }
        out
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, next.rows.len(), "composition dimension mismatch");
        let rows = self.rows.iter().map(|r| next.apply(r)).collect();
        Self::from_rows_unchecked(self.field, next.cols, rows)
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.rows.len(), other.rows.len());
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| self.field.add(x, y)).collect())
            .collect();
        Self::from_rows_unchecked(self.field, self.cols, rows)
    }

    pub fn scale(&self, c: u8) -> LinearMap {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| self.field.mul(c, x)).collect())
            .collect();
        Self::from_rows_unchecked(self.field, self.cols, rows)
    }

    pub fn pow(&self, e: usize) -> LinearMap {
        assert!(self.is_square());
        let mut acc = Self::identity(self.field, self.cols);
        for _ in 0..e {
            acc = acc.then(self);
        }
        acc
    }

    pub fn rank(&self) -> usize {
        rref(self.field, self.rows.clone(), self.cols).len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.cols
    }

    /// Image of a subspace of the source.
    pub fn image(&self, s: &Subspace) -> Subspace {
        let rows = s.basis().iter().map(|r| self.apply(r)).collect();
        Subspace::from_rows_unchecked(self.field, self.cols, rows)
    }
}
