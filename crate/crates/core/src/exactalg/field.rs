use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// The prime field GF(p) for a small prime `p`.
///
/// Elements are stored as `u8` residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u8,
}

impl PrimeField {
    pub const MAX_PRIME: u32 = 13;

    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > Self::MAX_PRIME {
            return Err(Error::UnsupportedPrime(p));
        }
        Ok(Self { p: p as u8 })
    }

    #[inline]
    pub fn p(self) -> u8 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.p as u16 - b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u8) -> Option<u8> {
        let a = a % self.p;
        if a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut acc = 1u8;
        for _ in 0..self.p - 2 {
            acc = self.mul(acc, a);
        }
        Some(acc)
    }

    pub fn div(self, a: u8, b: u8) -> Option<u8> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    /// Reduce an arbitrary integer into `[0, p)`.
    pub fn reduce(self, v: i64) -> u8 {
        v.rem_euclid(self.p as i64) as u8
    }

    pub fn scalar(self, v: i64) -> Scalar {
        Scalar {
            value: self.reduce(v),
            field: self,
        }
    }

    /// Inverse of `r!`, defined for `r < p`.
    pub fn inv_factorial(self, r: usize) -> Option<u8> {
        let mut f = 1u8;
        for k in 1..=r {
            f = self.mul(f, (k % self.p as usize) as u8);
        }
        self.inv(f)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A single element of GF(p) carrying its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    value: u8,
    field: PrimeField,
}

impl Scalar {
    pub fn value(self) -> u8 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<Scalar> {
        self.field.inv(self.value).map(|value| Scalar {
            value,
            field: self.field,
        })
    }

    /// Division; `None` when `rhs` is zero.
    pub fn checked_div(self, rhs: Scalar) -> Option<Scalar> {
        assert_eq!(self.field, rhs.field, "scalars from different fields");
        rhs.inv().map(|r| self * r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;

            fn $method(self, rhs: Scalar) -> Scalar {
                assert_eq!(self.field, rhs.field, "scalars from different fields");
                Scalar {
                    value: self.field.$method(self.value, rhs.value),
                    field: self.field,
                }
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        Scalar {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_large_primes() {
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeField::new(17), Err(Error::UnsupportedPrime(17)));
        assert!(PrimeField::new(13).is_ok());
    }

    #[test]
    fn inverses_multiply_to_one() {
        for p in [2u32, 3, 5, 7, 11, 13] {
            let f = PrimeField::new(p).unwrap();
            assert_eq!(f.inv(0), None);
            for a in 1..p as u8 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
        }
    }

    #[test]
    fn scalar_ops() {
        let f = PrimeField::new(5).unwrap();
        let two = f.scalar(2);
        let four = f.scalar(4);
        assert_eq!((two + four).value(), 1);
        assert_eq!((two - four).value(), 3);
        assert_eq!((two * four).value(), 3);
        assert_eq!((-two).value(), 3);
        assert_eq!(four.checked_div(two).unwrap().value(), 2);
        assert_eq!(four.checked_div(f.scalar(0)), None);
        assert_eq!(f.scalar(-1).value(), 4);
    }

    #[test]
    fn factorial_inverses() {
        let f = PrimeField::new(5).unwrap();
        // 4! = 24 = 4 mod 5, inverse 4
        assert_eq!(f.inv_factorial(4), Some(4));
        assert_eq!(f.inv_factorial(0), Some(1));
        assert_eq!(f.inv_factorial(5), None);
    }
}
