use alloc::vec::Vec;
use core::fmt;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested modulus is not a prime number.
    NotPrime(u32),
    /// The modulus is prime but outside the supported range `2..=13`.
    UnsupportedPrime(u32),
    /// A vector or matrix had the wrong length.
    DimensionMismatch { expected: usize, found: usize },
    /// Two objects over different prime fields were combined.
    FieldMismatch { left: u8, right: u8 },
    /// A containment precondition `inner ⊆ outer` failed.
    NotContained,
    /// The subspace is not closed under the bracket; `[left, right]` escapes it.
    NotSubalgebra { left: Vec<u8>, right: Vec<u8> },
    /// The subspace is not an ideal.
    NotIdeal,
    /// The algebra is not solvable.
    NotSolvable,
    /// The subalgebra is not nilpotent.
    NotNilpotent,
    /// A supplied chief series is malformed.
    InvalidSeries(&'static str),
    IndexOutOfRange { index: usize, len: usize },
    /// `(ad x)^p` is nonzero, so the truncated exponential is undefined.
    NotExponentiable,
    /// The truncated exponential failed the automorphism check.
    NotAutomorphism,
    /// The ideal is not nilpotent of class below the characteristic
    /// (`class` is `None` when it is not nilpotent at all).
    Hypothesis { class: Option<usize>, p: u8 },
    /// A configured enumeration budget was exhausted.
    Resource { what: &'static str, limit: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::UnsupportedPrime(p) => write!(f, "prime {p} is outside the supported range 2..=13"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::FieldMismatch { left, right } => {
                write!(f, "field mismatch: GF({left}) vs GF({right})")
            }
            Error::NotContained => write!(f, "subspace is not contained in the enclosing space"),
            Error::NotSubalgebra { left, right } => write!(
                f,
                "not a subalgebra: bracket of {left:?} and {right:?} leaves the subspace"
            ),
            Error::NotIdeal => write!(f, "subspace is not an ideal"),
            Error::NotSolvable => write!(f, "algebra is not solvable"),
            Error::NotNilpotent => write!(f, "subalgebra is not nilpotent"),
            Error::InvalidSeries(why) => write!(f, "invalid chief series: {why}"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range (length {len})")
            }
            Error::NotExponentiable => {
                write!(f, "(ad x)^p is nonzero; not exponentiable in characteristic p")
            }
            Error::NotAutomorphism => write!(f, "truncated exponential is not an automorphism"),
            Error::Hypothesis { class: Some(c), p } => {
                write!(f, "nilpotency class {c} is not below the characteristic {p}")
            }
            Error::Hypothesis { class: None, p } => {
                write!(f, "ideal is not nilpotent, so the characteristic {p} bound fails")
            }
            Error::Resource { what, limit } => write!(f, "{what} exceeded its budget of {limit}"),
        }
    }
}

impl core::error::Error for Error {}
