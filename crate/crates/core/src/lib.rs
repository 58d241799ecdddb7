//! Exact computations on finite-dimensional solvable Lie algebras over GF(p).
//!
//! Algebras are given by structure constants. On top of canonical subspace
//! arithmetic the crate computes subalgebra lattices, complemented upper
//! intervals and their minimal elements, chief series with the `U`-Frattini
//! classification of their factors, `U`-prefrattini subalgebras, and
//! conjugacy under the inner automorphisms `exp(ad x)` generated by a
//! nilpotent ideal.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod chief;
pub mod conjugacy;
pub mod corpus;
pub mod error;
pub mod exactalg;
pub mod interval;
pub mod liecore;
pub mod prefrattini;

pub use error::{Error, Result};
pub use exactalg::{LinearMap, PrimeField, Scalar, Subspace};
pub use liecore::{LieAlgebra, QuotientPresentation};
