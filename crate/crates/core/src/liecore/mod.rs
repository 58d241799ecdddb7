//! Lie algebras by structure constants: brackets, product spaces, generated
//! subalgebras, ideals, central and derived series, quotients, centralisers.

mod algebra;
mod quotient;
mod series;

pub use algebra::{AxiomViolation, Builder, LieAlgebra};
pub use quotient::QuotientPresentation;
