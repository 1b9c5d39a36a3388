use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::{CycAut, Rat};
use crate::error::{Error, Result};

/// Common surface of the exact fields used throughout the crate.
///
/// The std operators are infallible; the `checked_*` forms report tag mismatches
/// and division by zero instead of panicking.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rat(q: Rat) -> Self;
    fn inv(&self) -> Result<Self>;
    /// Complex conjugation, i.e. `τ₋₁` on the cyclotomic part.
    fn conj(&self) -> Self;
    /// Image under the embedding `ω ↦ exp(2πi·l/7)`.
    fn numeric_embed(&self, embedding: CycAut) -> Result<Complex64>;

    fn checked_add(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() + other.clone())
    }
    fn checked_sub(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() - other.clone())
    }
    fn checked_mul(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * other.clone())
    }
    fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inv()?)
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact binary arithmetic in any supported field.
pub fn field_arith<F: Field>(x: &F, y: &F, op: ArithOp) -> Result<F> {
    match op {
        ArithOp::Add => x.checked_add(y),
        ArithOp::Sub => x.checked_sub(y),
        ArithOp::Mul => x.checked_mul(y),
        ArithOp::Div => {
            if y.is_zero() {
                Err(Error::DivisionByZero)
            } else {
                x.checked_div(y)
            }
        }
    }
}

impl Field for Rat {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn from_rat(q: Rat) -> Self {
        q
    }
    fn inv(&self) -> Result<Self> {
        if Field::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn numeric_embed(&self, _embedding: CycAut) -> Result<Complex64> {
        Ok(Complex64::new(super::rat::to_f64(self), 0.0))
    }
}

/// Implements the four owned/borrowed combinations of a binary operator from a
/// `fn(&T, &T) -> T`.
macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $method:ident, $f:path) => {
        impl std::ops::$tr<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                $f(self, rhs)
            }
        }
        impl std::ops::$tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $f(&self, &rhs)
            }
        }
        impl std::ops::$tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                $f(&self, rhs)
            }
        }
        impl std::ops::$tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $f(self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binop;
