use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::coeff::Coeff;

/// Gaussian integer `re + im*i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt { re: re.into(), im: im.into() }
    }

    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    pub fn conj(&self) -> Self {
        GaussInt { re: self.re.clone(), im: -self.im.clone() }
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mag = self.im.abs();
        let imag = if mag.is_one() { "i".to_string() } else { format!("{mag}i") };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}{imag}", if self.im.is_negative() { "-" } else { "" }),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{} {sign} {imag}", self.re)
            }
        }
    }
}

impl Zero for GaussInt {
    fn zero() -> Self {
        GaussInt::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussInt {
    fn one() -> Self {
        GaussInt::new(1, 0)
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt { re: -self.re, im: -self.im }
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: GaussInt) -> GaussInt {
        GaussInt { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: GaussInt) -> GaussInt {
        GaussInt { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: GaussInt) -> GaussInt {
        self.mul_ref(&rhs)
    }
}

impl Coeff for GaussInt {
    fn mul_ref(&self, o: &Self) -> Self {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn unit_inverse(&self) -> Option<Self> {
        // Units are 1, -1, i, -i; each inverse is the conjugate.
        let norm = &self.re * &self.re + &self.im * &self.im;
        if norm.is_one() {
            Some(self.conj())
        } else {
            None
        }
    }
    fn from_i64(v: i64) -> Self {
        GaussInt::new(v, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussInt::i();
        assert_eq!(i.mul_ref(&i), GaussInt::new(-1, 0));
        assert_eq!(i.unit_inverse(), Some(GaussInt::new(0, -1)));
        assert_eq!(GaussInt::new(1, 1).unit_inverse(), None);
    }

    #[test]
    fn display() {
        assert_eq!(GaussInt::new(-3, 0).to_string(), "-3");
        assert_eq!(GaussInt::new(0, -7).to_string(), "-7i");
        assert_eq!(GaussInt::new(2, -7).to_string(), "2 - 7i");
        assert_eq!(GaussInt::i().to_string(), "i");
        assert_eq!((-GaussInt::i()).to_string(), "-i");
        assert_eq!(GaussInt::new(3, 1).to_string(), "3 + i");
    }
}
