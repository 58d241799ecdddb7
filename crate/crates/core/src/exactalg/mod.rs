//! Exact linear algebra over GF(p): scalars, canonical subspaces, linear maps
//! and subspace enumeration.

mod enumerate;
mod field;
mod linear_map;
mod subspace;

pub use enumerate::{complete_basis, enumerate_subspaces_between, lines_of};
pub use field::{is_prime, PrimeField, Scalar};
pub use linear_map::LinearMap;
pub use subspace::{left_kernel, rref, Subspace};

pub(crate) use subspace::axpy;
