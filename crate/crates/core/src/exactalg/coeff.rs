use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact commutative ring usable as a series or polynomial coefficient.
///
/// The `*_ref` methods exist so kernels can avoid cloning large coefficients;
/// implementors with heap-backed storage should override them.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn add_assign_ref(&mut self, other: &Self) {
        let lhs = std::mem::replace(self, Self::zero());
        *self = lhs + other.clone();
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        let lhs = std::mem::replace(self, Self::zero());
        *self = lhs - other.clone();
    }

    /// Multiplicative inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;
}

/// Rings that are algebras over the rationals.
pub trait RationalAlgebra: Coeff {
    fn from_rational(r: &BigRational) -> Self;
    fn scale_rational(&self, r: &BigRational) -> Self;
}

impl Coeff for BigInt {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Coeff for BigRational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl RationalAlgebra for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
    fn scale_rational(&self, r: &BigRational) -> Self {
        self * r
    }
}
