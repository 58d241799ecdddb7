use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{axpy, LinearMap, PrimeField, Subspace};

/// A Lie algebra over GF(p) given by structure constants
/// `[b_i, b_j] = Σ_k c[i][j][k] b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    field: PrimeField,
    labels: Vec<String>,
    // c[i][j][k] at (i * n + j) * n + k
    table: Vec<u8>,
}

/// First failure found by [`LieAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `[b_i, b_i] != 0`.
    NotAlternating { i: usize },
    /// `[b_j, b_i] != -[b_i, b_j]`.
    NotAntisymmetric { i: usize, j: usize },
    /// `[b_i, [b_j, b_k]] != [[b_i, b_j], b_k] + [b_j, [b_i, b_k]]`.
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        left: Vec<u8>,
        right: Vec<u8>,
    },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::NotAlternating { i } => write!(f, "[b{i}, b{i}] is nonzero"),
            AxiomViolation::NotAntisymmetric { i, j } => {
                write!(f, "antisymmetry fails at ({i}, {j})")
            }
            AxiomViolation::Jacobi {
                i,
                j,
                k,
                left,
                right,
            } => write!(
                f,
                "Jacobi identity fails at ({i}, {j}, {k}): [b{i},[b{j},b{k}]] = {left:?} but \
                 [[b{i},b{j}],b{k}] + [b{j},[b{i},b{k}]] = {right:?}"
            ),
        }
    }
}

/// Incremental construction from a sparse bracket list.
pub struct Builder {
    field: PrimeField,
    labels: Vec<String>,
    table: Vec<u8>,
}

impl Builder {
    /// Set `[b_i, b_j] = Σ coeff · b_k`, and `[b_j, b_i]` to its negative.
    ///
    /// # Panics
    /// If `i == j` or an index is out of range.
    pub fn bracket(mut self, i: usize, j: usize, terms: &[(i64, usize)]) -> Self {
        let n = self.labels.len();
        assert!(i != j && i < n && j < n, "bad bracket indices ({i}, {j})");
        let mut v = vec![0u8; n];
        for &(c, k) in terms {
            v[k] = self.field.add(v[k], self.field.reduce(c));
        }
        for (k, &c) in v.iter().enumerate() {
            self.table[(i * n + j) * n + k] = c;
            self.table[(j * n + i) * n + k] = self.field.neg(c);
        }
        self
    }

    pub fn build(self) -> LieAlgebra {
        LieAlgebra {
            field: self.field,
            labels: self.labels,
            table: self.table,
        }
    }
}

impl LieAlgebra {
    pub fn builder<S: Into<String>>(field: PrimeField, labels: impl IntoIterator<Item = S>) -> Builder {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        Builder {
            field,
            labels,
            table: vec![0; n * n * n],
        }
    }

    /// Raw table constructor; no axioms are checked.
    pub fn from_table(field: PrimeField, labels: Vec<String>, table: Vec<u8>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                found: table.len(),
            });
        }
        let table = table.into_iter().map(|x| x % field.p()).collect();
        Ok(Self {
            field,
            labels,
            table,
        })
    }

    pub fn abelian(field: PrimeField, n: usize) -> Self {
        Self::builder(field, (0..n).map(|i| alloc::format!("b{i}"))).build()
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Coefficients of `[b_i, b_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[u8] {
        let n = self.dim();
        &self.table[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u8> {
        let mut v = vec![0u8; self.dim()];
        v[i] = 1;
        v
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.field, self.dim())
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    /// Bilinear extension of the structure constants.
    ///
    /// # Panics
    /// If either argument has the wrong length.
    pub fn bracket(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "bracket dimension mismatch");
        let mut out = vec![0u8; n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 || i == j {
                    continue;
                }
                axpy(self.field, &mut out, self.field.mul(xi, yj), self.structure(i, j));
            }
        }
        out
    }

    pub fn try_bracket(&self, x: &[u8], y: &[u8]) -> Result<Vec<u8>> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    found: v.len(),
                });
            }
        }
        Ok(self.bracket(x, y))
    }

    /// The inner derivation `ad x : y ↦ [x, y]` as a row-vector map.
    pub fn ad(&self, x: &[u8]) -> LinearMap {
        let rows = (0..self.dim())
            .map(|i| self.bracket(x, &self.basis_vector(i)))
            .collect();
        LinearMap::from_rows(self.field, self.dim(), rows).expect("square")
    }

    /// Check alternation, antisymmetry and the Jacobi identity on basis
    /// triples, reporting the first failure.
    pub fn validate(&self) -> core::result::Result<(), AxiomViolation> {
        let n = self.dim();
        let f = self.field;
        for i in 0..n {
            if self.structure(i, i).iter().any(|&x| x != 0) {
                return Err(AxiomViolation::NotAlternating { i });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let ij = self.structure(i, j);
                let ji = self.structure(j, i);
                if ij.iter().zip(ji).any(|(&a, &b)| f.add(a, b) != 0) {
                    return Err(AxiomViolation::NotAntisymmetric { i, j });
                }
            }
        }
        for i in 0..n {
            let bi = self.basis_vector(i);
            for j in 0..n {
                let bj = self.basis_vector(j);
                for k in 0..n {
                    let bk = self.basis_vector(k);
                    let left = self.bracket(&bi, &self.bracket(&bj, &bk));
                    let mut right = self.bracket(&self.bracket(&bi, &bj), &bk);
                    let extra = self.bracket(&bj, &self.bracket(&bi, &bk));
                    axpy(f, &mut right, 1, &extra);
                    if left != right {
                        return Err(AxiomViolation::Jacobi {
                            i,
                            j,
                            k,
                            left,
                            right,
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nonabelian2(p: u32) -> LieAlgebra {
        LieAlgebra::builder(PrimeField::new(p).unwrap(), ["u", "v"])
            .bracket(0, 1, &[(1, 1)])
            .build()
    }

    #[test]
    fn builder_completes_antisymmetrically() {
        let l = nonabelian2(3);
        assert_eq!(l.structure(0, 1), &[0, 1]);
        assert_eq!(l.structure(1, 0), &[0, 2]);
        assert_eq!(l.validate(), Ok(()));
    }

    #[test]
    fn bracket_is_alternating() {
        let l = nonabelian2(2);
        for x in [[1u8, 0], [0, 1], [1, 1]] {
            assert_eq!(l.bracket(&x, &x), vec![0, 0]);
        }
        assert!(l.try_bracket(&[1], &[0, 1]).is_err());
    }

    #[test]
    fn abelian_validates() {
        let l = LieAlgebra::abelian(PrimeField::new(5).unwrap(), 3);
        assert_eq!(l.validate(), Ok(()));
    }

    #[test]
    fn tampered_antisymmetry_detected() {
        let f = PrimeField::new(3).unwrap();
        // [b0, b1] = b0 but [b1, b0] = 0
        let mut table = vec![0u8; 8];
        table[2] = 1;
        let l = LieAlgebra::from_table(f, vec!["a".into(), "b".into()], table).unwrap();
        assert_eq!(l.validate(), Err(AxiomViolation::NotAntisymmetric { i: 0, j: 1 }));
    }

    #[test]
    fn tampered_alternation_detected() {
        let f = PrimeField::new(2).unwrap();
        let mut table = vec![0u8; 8];
        // [b1, b1] = b0
        table[(3) * 2] = 1;
        let l = LieAlgebra::from_table(f, vec!["a".into(), "b".into()], table).unwrap();
        assert_eq!(l.validate(), Err(AxiomViolation::NotAlternating { i: 1 }));
    }

    #[test]
    fn jacobi_violation_reported() {
        // [x,y] = y, [x,z] = y, [y,z] = x is antisymmetric but not Lie.
        let f = PrimeField::new(5).unwrap();
        let l = LieAlgebra::builder(f, ["x", "y", "z"])
            .bracket(0, 1, &[(1, 1)])
            .bracket(0, 2, &[(1, 1)])
            .bracket(1, 2, &[(1, 0)])
            .build();
        match l.validate() {
            Err(AxiomViolation::Jacobi { left, right, .. }) => assert_ne!(left, right),
            other => panic!("expected Jacobi violation, got {other:?}"),
        }
    }
}
