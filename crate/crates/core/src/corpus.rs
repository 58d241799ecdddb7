//! Built-in test algebras.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactalg::PrimeField;
use crate::liecore::LieAlgebra;

/// Facts about a corpus algebra, relative to its canonical chief series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectations {
    pub solvable: bool,
    pub completely_solvable: bool,
    pub residual_dim: usize,
    pub chief_factor_dims: Vec<usize>,
    /// 1-based indices of the Frattini chief factors (`U = 0`).
    pub frattini_factors: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    pub expected: Option<Expectations>,
}

/// `L = ⊕_{i<p} F e_i ⊕ F c ⊕ F s ⊕ F x` with `[e_i, c] = e_i`,
/// `[e_i, s] = e_{i+1}` (`i < p-1`), `[e_i, x] = i e_{i-1}`, `[s, x] = c`.
///
/// Basis order is `e_0, …, e_{p-1}, c, s, x`.
pub fn example_sec2(p: u32) -> Result<CorpusEntry> {
    let field = PrimeField::new(p)?;
    let n = p as usize;
    let (c, s, x) = (n, n + 1, n + 2);
    let mut labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    labels.extend(["c", "s", "x"].map(String::from));
    let mut b = LieAlgebra::builder(field, labels);
    for i in 0..n {
        b = b.bracket(i, c, &[(1, i)]);
        if i + 1 < n {
            b = b.bracket(i, s, &[(1, i + 1)]);
        }
        if i > 0 {
            b = b.bracket(i, x, &[(i as i64, i - 1)]);
        }
    }
    b = b.bracket(s, x, &[(1, c)]);
    Ok(CorpusEntry {
        name: format!("example_sec2_p{p}"),
        algebra: b.build(),
        expected: Some(Expectations {
            solvable: true,
            completely_solvable: false,
            residual_dim: n,
            chief_factor_dims: vec![n, 1, 1, 1],
            frattini_factors: vec![2],
        }),
    })
}

pub fn abelian(field: PrimeField, n: usize) -> CorpusEntry {
    CorpusEntry {
        name: format!("abelian{n}_p{}", field.p()),
        algebra: LieAlgebra::abelian(field, n),
        expected: Some(Expectations {
            solvable: true,
            completely_solvable: true,
            residual_dim: 0,
            chief_factor_dims: vec![1; n],
            frattini_factors: vec![],
        }),
    }
}

/// `[u, v] = v`.
pub fn nonabelian2(field: PrimeField) -> CorpusEntry {
    CorpusEntry {
        name: format!("nonabelian2_p{}", field.p()),
        algebra: LieAlgebra::builder(field, ["u", "v"])
            .bracket(0, 1, &[(1, 1)])
            .build(),
        expected: Some(Expectations {
            solvable: true,
            completely_solvable: true,
            residual_dim: 1,
            chief_factor_dims: vec![1, 1],
            frattini_factors: vec![],
        }),
    }
}

/// `[x, y] = z`.
pub fn heisenberg(field: PrimeField) -> CorpusEntry {
    CorpusEntry {
        name: format!("heisenberg_p{}", field.p()),
        algebra: LieAlgebra::builder(field, ["x", "y", "z"])
            .bracket(0, 1, &[(1, 2)])
            .build(),
        expected: Some(Expectations {
            solvable: true,
            completely_solvable: true,
            residual_dim: 0,
            chief_factor_dims: vec![1, 1, 1],
            frattini_factors: vec![1],
        }),
    }
}

/// The 2-dimensional nonabelian algebra `⟨u, v⟩` extended by an abelian
/// `⟨a, b⟩` on which `u` acts as the identity and `v` trivially:
/// `[u, v] = v`, `[u, a] = a`, `[u, b] = b`.
pub fn split_extension(field: PrimeField) -> CorpusEntry {
    CorpusEntry {
        name: format!("split_ext4_p{}", field.p()),
        algebra: LieAlgebra::builder(field, ["u", "v", "a", "b"])
            .bracket(0, 1, &[(1, 1)])
            .bracket(0, 2, &[(1, 2)])
            .bracket(0, 3, &[(1, 3)])
            .build(),
        expected: Some(Expectations {
            solvable: true,
            completely_solvable: true,
            residual_dim: 3,
            chief_factor_dims: vec![1, 1, 1, 1],
            frattini_factors: vec![],
        }),
    }
}

/// Heisenberg `⟨x, y, z⟩` extended by the derivation `t`:
/// `[x, y] = z`, `[x, t] = x`, `[y, t] = y`, `[z, t] = 2z`.
///
/// `L^∞` is the Heisenberg algebra, of class 2; over GF(2) this breaks the
/// class-below-`p` hypothesis.
pub fn heisenberg_extension(field: PrimeField) -> CorpusEntry {
    CorpusEntry {
        name: format!("heisenberg_ext4_p{}", field.p()),
        algebra: LieAlgebra::builder(field, ["x", "y", "z", "t"])
            .bracket(0, 1, &[(1, 2)])
            .bracket(0, 3, &[(1, 0)])
            .bracket(1, 3, &[(1, 1)])
            .bracket(2, 3, &[(2, 2)])
            .build(),
        expected: Some(Expectations {
            solvable: true,
            completely_solvable: true,
            residual_dim: 3,
            chief_factor_dims: vec![1, 1, 1, 1],
            frattini_factors: vec![1],
        }),
    }
}

/// The standard corpus over GF(p), `p ∈ {2, 3, 5}`.
pub fn standard_corpus(p: u32) -> Result<Vec<CorpusEntry>> {
    if ![2, 3, 5].contains(&p) {
        return Err(if crate::exactalg::is_prime(p) {
            Error::UnsupportedPrime(p)
        } else {
            Error::NotPrime(p)
        });
    }
    let field = PrimeField::new(p)?;
    Ok(vec![
        abelian(field, 1),
        abelian(field, 2),
        abelian(field, 3),
        nonabelian2(field),
        heisenberg(field),
        split_extension(field),
        heisenberg_extension(field),
        example_sec2(p)?,
    ])
}
