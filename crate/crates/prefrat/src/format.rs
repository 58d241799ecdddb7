//! JSON algebra files and subspace specifications.
//!
//! An algebra file lists the nonzero brackets `[b_i, b_j]` for `i < j` only;
//! `[b_j, b_i] = -[b_i, b_j]` and `[b_i, b_i] = 0` are implied.
//!
//! ```json
//! { "p": 2, "dim": 3, "basis": ["x", "y", "z"],
//!   "brackets": [ { "i": 0, "j": 1, "terms": [[1, 2]] } ] }
//! ```
//!
//! Each term `[coeff, k]` contributes `coeff · b_k`. The adjoint map of the
//! library is `ad x : y ↦ [x, y]`, acting on row vectors from the right.

use std::fmt;

use prefrat_core::exactalg::{PrimeField, Subspace};
use prefrat_core::LieAlgebra;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub p: u32,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    /// `(coeff, k)` pairs, written as two-element arrays.
    pub terms: Vec<(u32, usize)>,
}

/// A subspace given by spanning vectors (coordinates are reduced mod `p`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceSpec {
    pub vectors: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormatError {
    /// Malformed JSON or a missing/mistyped field.
    Syntax { line: usize, column: usize, message: String },
    /// Well-formed JSON with an invalid value; `path` names the field.
    Field { path: String, message: String },
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Syntax { line, column, message } => {
                write!(f, "line {line}, column {column}: {message}")
            }
            FormatError::Field { path, message } => write!(f, "{path}: {message}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

fn field_error(path: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Field {
        path: path.into(),
        message: message.into(),
    }
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let file: AlgebraFile = serde_json::from_str(text)?;
        file.check()?;
        Ok(file)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    fn check(&self) -> Result<(), FormatError> {
        let field = PrimeField::new(self.p).map_err(|e| field_error("p", e.to_string()))?;
        let p = field.p() as u32;
        if self.basis.len() != self.dim {
            return Err(field_error(
                "basis",
                format!("{} labels for dimension {}", self.basis.len(), self.dim),
            ));
        }
        let mut seen = std::collections::BTreeSet::new();
        for (n, b) in self.brackets.iter().enumerate() {
            let at = |f: &str| format!("brackets[{n}].{f}");
            if b.i >= self.dim {
                return Err(field_error(at("i"), format!("index {} out of range 0..{}", b.i, self.dim)));
            }
            if b.j >= self.dim {
                return Err(field_error(at("j"), format!("index {} out of range 0..{}", b.j, self.dim)));
            }
            if b.i >= b.j {
                return Err(field_error(
                    at("j"),
                    format!("only i < j entries are allowed, got i = {}, j = {}", b.i, b.j),
                ));
            }
            if !seen.insert((b.i, b.j)) {
                return Err(field_error(at("i"), format!("duplicate entry for ({}, {})", b.i, b.j)));
            }
            let mut ks = std::collections::BTreeSet::new();
            for (t, &(coeff, k)) in b.terms.iter().enumerate() {
                if coeff >= p {
                    return Err(field_error(
                        format!("brackets[{n}].terms[{t}][0]"),
                        format!("coefficient {coeff} is not in 0..{p}"),
                    ));
                }
                if k >= self.dim {
                    return Err(field_error(
                        format!("brackets[{n}].terms[{t}][1]"),
                        format!("index {k} out of range 0..{}", self.dim),
                    ));
                }
                if !ks.insert(k) {
                    return Err(field_error(
                        format!("brackets[{n}].terms[{t}][1]"),
                        format!("basis index {k} repeated"),
                    ));
                }
            }
        }
        Ok(())
    }

    /// The structure constants as a [`LieAlgebra`]; the axioms are not checked.
    pub fn to_algebra(&self) -> Result<LieAlgebra, FormatError> {
        self.check()?;
        let field = PrimeField::new(self.p).map_err(|e| field_error("p", e.to_string()))?;
        let mut builder = LieAlgebra::builder(field, self.basis.iter().cloned());
        for b in &self.brackets {
            let terms: Vec<(i64, usize)> = b.terms.iter().map(|&(c, k)| (c as i64, k)).collect();
            builder = builder.bracket(b.i, b.j, &terms);
        }
        Ok(builder.build())
    }

    /// The sparse listing of `algebra`: nonzero brackets with `i < j`, terms
    /// in basis order.
    pub fn from_algebra(algebra: &LieAlgebra) -> Self {
        let n = algebra.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let terms: Vec<(u32, usize)> = algebra
                    .structure(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(k, &c)| (c as u32, k))
                    .collect();
                if !terms.is_empty() {
                    brackets.push(BracketEntry { i, j, terms });
                }
            }
        }
        AlgebraFile {
            p: algebra.field().p() as u32,
            dim: n,
            basis: algebra.labels().to_vec(),
            brackets,
        }
    }
}

impl SubspaceSpec {
    /// Accepts `{"vectors": [...]}` or a bare array of vectors.
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        if text.trim_start().starts_with('[') {
            Ok(SubspaceSpec {
                vectors: serde_json::from_str(text)?,
            })
        } else {
            Ok(serde_json::from_str(text)?)
        }
    }

    pub fn to_subspace(&self, algebra: &LieAlgebra) -> Result<Subspace, FormatError> {
        let field = algebra.field();
        let mut rows = Vec::with_capacity(self.vectors.len());
        for (n, v) in self.vectors.iter().enumerate() {
            if v.len() != algebra.dim() {
                return Err(field_error(
                    format!("vectors[{n}]"),
                    format!("length {} does not match dimension {}", v.len(), algebra.dim()),
                ));
            }
            rows.push(v.iter().map(|&c| field.reduce(c)).collect::<Vec<u8>>());
        }
        Subspace::span(field, algebra.dim(), rows).map_err(|e| field_error("vectors", e.to_string()))
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        SubspaceSpec {
            vectors: s
                .basis()
                .iter()
                .map(|v| v.iter().map(|&c| c as i64).collect())
                .collect(),
        }
    }
}
