//! Closed rational intervals, enough to enclose `c * sqrt(v)` rigorously.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    /// Enclosure of `sqrt(v)` with endpoints on the grid `2^-bits`.
    pub fn sqrt(v: &BigRational, bits: u32) -> Interval {
        assert!(!v.is_negative(), "square root of a negative number");
        let s = BigInt::one() << bits;
        let scaled = v * BigRational::from_integer(&s * &s);
        let (a, b) = (scaled.floor().to_integer(), scaled.ceil().to_integer());
        let lo = a.sqrt();
        let mut hi = b.sqrt();
        if &hi * &hi < b {
            hi += 1;
        }
        Interval { lo: BigRational::new(lo, s.clone()), hi: BigRational::new(hi, s) }
    }

    pub fn scale(&self, c: &BigRational) -> Interval {
        let (a, b) = (&self.lo * c, &self.hi * c);
        if c.is_negative() {
            Interval { lo: b, hi: a }
        } else {
            Interval { lo: a, hi: b }
        }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", decimal(&self.lo, 12, false), decimal(&self.hi, 12, true))
    }
}

/// `r` to `digits` decimal places, rounded down or up.
pub fn decimal(r: &BigRational, digits: usize, up: bool) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = r * BigRational::from_integer(scale.clone());
    let v = if up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let neg = v.is_negative();
    let (int, frac) = v.abs().div_rem(&scale);
    let frac = format!("{:0>width$}", frac.to_string(), width = digits);
    format!("{}{int}.{frac}", if neg && !(int.is_zero() && frac.chars().all(|c| c == '0')) { "-" } else { "" })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn encloses_square_roots() {
        for (n, d) in [(3, 4), (2, 1), (1, 9), (0, 1), (7, 3)] {
            let v = q(n, d);
            for bits in [1, 8, 40] {
                let i = Interval::sqrt(&v, bits);
                assert!(&i.lo * &i.lo <= v && v <= &i.hi * &i.hi);
                assert!(&i.hi - &i.lo <= q(1, 1 << bits.min(40)) * q(2, 1));
            }
        }
        assert_eq!(Interval::sqrt(&q(1, 4), 4), Interval { lo: q(1, 2), hi: q(1, 2) });
    }

    #[test]
    fn negative_scale_swaps() {
        let i = Interval { lo: q(1, 1), hi: q(2, 1) }.scale(&q(-1, 1));
        assert_eq!(i, Interval { lo: q(-2, 1), hi: q(-1, 1) });
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal(&q(1, 3), 4, false), "0.3333");
        assert_eq!(decimal(&q(1, 3), 4, true), "0.3334");
        assert_eq!(decimal(&q(-3, 2), 2, false), "-1.50");
    }
}
