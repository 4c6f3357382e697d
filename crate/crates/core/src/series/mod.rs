//! Truncated formal power series in one variable over an exact ring.
//!
//! A series carries its truncation order `N`: the coefficients of degrees
//! `0..=N` are known exactly, everything above is unknown. Binary operations
//! truncate to the smaller of the two orders.

mod tower;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{AlgebraError, Result};
use crate::exactalg::{Coeff, QLaurent};

pub use tower::SeriesTower;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries<C> {
    coeffs: Vec<C>,
    order: usize,
}

impl<C: Coeff> TruncSeries<C> {
    /// Coefficients past `order` are dropped; missing ones are zero.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncSeries { coeffs, order }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![C::one()], order)
    }

    /// The series variable itself.
    pub fn var(order: usize) -> Self {
        Self::monomial(C::one(), 1, order)
    }

    pub fn monomial(c: C, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        TruncSeries { coeffs: (0..=order).map(f).collect(), order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, d: usize) -> &C {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Add `c` to the coefficient of degree `d`; ignored above the order.
    pub fn add_to_coeff(&mut self, d: usize, c: &C) {
        if d <= self.order {
            self.coeffs[d].add_assign_ref(c);
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot extend a truncated series");
        TruncSeries { coeffs: self.coeffs[..=order].to_vec(), order }
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, s: &C) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|c| c.mul_ref(s)).collect(), order: self.order }
    }

    /// Multiply by `var^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k.min(self.order + 1)];
        coeffs.extend(self.coeffs.iter().take((self.order + 1).saturating_sub(k)).cloned());
        TruncSeries { coeffs, order: self.order }
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TruncSeries<D> {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect(), order: self.order }
    }

    pub fn map_indexed(&self, f: impl Fn(usize, &C) -> C) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().enumerate().map(|(d, c)| f(d, c)).collect(),
            order: self.order,
        }
    }

    /// First degree (up to the common order) where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, C, C)> {
        let n = self.order.min(other.order);
        (0..=n)
            .find(|&d| self.coeffs[d] != other.coeffs[d])
            .map(|d| (d, self.coeffs[d].clone(), other.coeffs[d].clone()))
    }

    /// Equality of all coefficients up to the common order.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        let order = self.order.saturating_sub(1);
        TruncSeries::from_fn(order, |d| {
            if d < self.order {
                self.coeffs[d + 1].mul_ref(&C::from_i64(d as i64 + 1))
            } else {
                C::zero()
            }
        })
    }

    /// `1 / self`, requiring an invertible constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| AlgebraError::NonUnitConstant(self.coeffs[0].to_string()))?;
        let mut out = vec![C::zero(); self.order + 1];
        out[0] = inv0.clone();
        for d in 1..=self.order {
            let mut acc = C::zero();
            for i in 1..=d {
                if !self.coeffs[i].is_zero() {
                    acc.add_assign_ref(&self.coeffs[i].mul_ref(&out[d - i]));
                }
            }
            out[d] = -acc.mul_ref(&inv0);
        }
        Ok(TruncSeries { coeffs: out, order: self.order })
    }

    /// `self(inner)`, truncated at `self`'s order (or `inner`'s, if smaller).
    /// `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(AlgebraError::NonZeroConstant(inner.coeffs[0].to_string()));
        }
        let order = self.order.min(inner.order);
        let inner = inner.truncate(order);
        let mut acc = TruncSeries::zero(order);
        // Horner: c_0 + u(c_1 + u(c_2 + ...)).
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0].add_assign_ref(c);
        }
        Ok(acc)
    }

    pub fn render(&self, var: &str) -> String
    where
        C: fmt::Display,
    {
        let mut parts = Vec::new();
        for (d, c) in self.coeffs.iter().enumerate() {
            parts.push(format!("[{var}^{d}] {c}"));
        }
        parts.join("\n")
    }
}

impl TruncSeries<QLaurent> {
    /// Substitute `x -> q^j x`: coefficient of `x^d` gains `q^(j d)`.
    pub fn scale_var(&self, j: i64) -> Self {
        self.map_indexed(|d, c| c.shift(j * d as i64))
    }

    /// Specialize `q = 1`.
    pub fn at_q_one(&self) -> TruncSeries<BigInt> {
        self.map(|c| c.eval_at_one())
    }

    /// Substitute `x = q^ell` (`ell >= 1`), giving a q-series complete up to
    /// `q^order`. Needs every coefficient to be a polynomial in `q` and the
    /// x-order to be at least `order / ell`.
    pub fn substitute_q_power(&self, ell: u32, order: usize) -> Result<TruncSeries<BigInt>> {
        if ell == 0 {
            return Err(AlgebraError::InvalidArgument("x = q^0 is not a formal substitution".into()));
        }
        if self.order * (ell as usize) < order {
            return Err(AlgebraError::InvalidArgument(format!(
                "x-order {} too small for q-order {order} at x = q^{ell}",
                self.order
            )));
        }
        let mut out = TruncSeries::zero(order);
        for (d, c) in self.coeffs.iter().enumerate() {
            if !c.is_polynomial() {
                return Err(AlgebraError::InvalidArgument(format!("coefficient {c} has negative q-powers")));
            }
            let base = d * ell as usize;
            for (e, v) in c.terms() {
                out.add_to_coeff(base + e as usize, v);
            }
        }
        Ok(out)
    }
}

impl<C: Coeff> Neg for TruncSeries<C> {
    type Output = Self;
    fn neg(self) -> Self {
        TruncSeries { coeffs: self.coeffs.into_iter().map(|c| -c).collect(), order: self.order }
    }
}

impl<'a, C: Coeff> Add<&'a TruncSeries<C>> for &'a TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn add(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
        let order = self.order.min(rhs.order);
        TruncSeries::from_fn(order, |d| {
            let mut c = self.coeffs[d].clone();
            c.add_assign_ref(&rhs.coeffs[d]);
            c
        })
    }
}

impl<'a, C: Coeff> Sub<&'a TruncSeries<C>> for &'a TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn sub(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
        let order = self.order.min(rhs.order);
        TruncSeries::from_fn(order, |d| {
            let mut c = self.coeffs[d].clone();
            c.sub_assign_ref(&rhs.coeffs[d]);
            c
        })
    }
}

impl<'a, C: Coeff> Mul<&'a TruncSeries<C>> for &'a TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn mul(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
        let order = self.order.min(rhs.order);
        let mut out = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j].add_assign_ref(&a.mul_ref(b));
                }
            }
        }
        TruncSeries { coeffs: out, order }
    }
}

impl<C: Coeff> Add for TruncSeries<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for TruncSeries<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for TruncSeries<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Coeff> fmt::Debug for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncSeries").field("order", &self.order).field("coeffs", &self.coeffs).finish()
    }
}

/// Cauchy product truncated at the smaller order.
pub fn series_mul<C: Coeff>(a: &TruncSeries<C>, b: &TruncSeries<C>) -> TruncSeries<C> {
    a * b
}

/// `x -> q^j x`.
pub fn series_scale_var(s: &TruncSeries<QLaurent>, j: i64) -> TruncSeries<QLaurent> {
    s.scale_var(j)
}

pub fn series_compose<C: Coeff>(outer: &TruncSeries<C>, inner: &TruncSeries<C>) -> Result<TruncSeries<C>> {
    outer.compose(inner)
}

/// `(x;q)_m = (1 - x)(1 - q x)...(1 - q^(m-1) x)`.
pub fn pochhammer_x(m: u32, order: usize) -> TruncSeries<QLaurent> {
    let mut acc = TruncSeries::one(order);
    for i in 0..m {
        acc = mul_one_minus(&acc, i as i64);
    }
    acc
}

/// Multiply by `(1 - q^i x)`: a shift-and-subtract, no full product.
pub(crate) fn mul_one_minus(s: &TruncSeries<QLaurent>, i: i64) -> TruncSeries<QLaurent> {
    let mut out = s.clone();
    for d in 1..=s.order {
        let t = s.coeffs[d - 1].shift(i);
        out.coeffs[d].sub_assign_ref(&t);
    }
    out
}

/// `1 / ((1 - y)(1 - q y)...(1 - q^ell y))` as a series in `y`, dividing by
/// one factor at a time.
pub fn series_reciprocal_pochhammer(ell: u32, order: usize) -> Result<TruncSeries<QLaurent>> {
    let mut acc = TruncSeries::<QLaurent>::one(order);
    for i in 0..=ell as i64 {
        // c_d += q^i c_(d-1), in increasing d.
        for d in 1..=order {
            let t = acc.coeffs[d - 1].shift(i);
            acc.coeffs[d].add_assign_ref(&t);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn ql(c: &[i64]) -> QLaurent {
        QLaurent::from_coeffs(c)
    }

    fn int_series(c: &[i64], order: usize) -> TruncSeries<BigInt> {
        TruncSeries::new(c.iter().map(|&v| BigInt::from(v)).collect(), order)
    }

    #[test]
    fn mul_examples() {
        let a = int_series(&[1, 1], 4);
        let b = int_series(&[1, -1], 4);
        assert_eq!(series_mul(&a, &b), int_series(&[1, 0, -1], 4));
        let qx = TruncSeries::new(vec![ql(&[1]), ql(&[0, 1])], 4);
        assert_eq!(
            series_mul(&qx, &qx),
            TruncSeries::new(vec![ql(&[1]), ql(&[0, 2]), ql(&[0, 0, 1])], 4)
        );
        let s = int_series(&[3, -1, 4, 1, 5], 4);
        assert_eq!(series_mul(&s, &TruncSeries::one(4)), s);
    }

    #[test]
    fn mixed_orders_truncate_to_min() {
        let a = int_series(&[1, 1, 1], 2);
        let b = int_series(&[1, 1, 1, 1, 1], 5);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
    }

    #[test]
    fn scale_var_examples() {
        let s = TruncSeries::new(vec![ql(&[1]), ql(&[1]), ql(&[1])], 2);
        assert_eq!(
            series_scale_var(&s, 1),
            TruncSeries::new(vec![ql(&[1]), ql(&[0, 1]), ql(&[0, 0, 1])], 2)
        );
        assert_eq!(series_scale_var(&s, 0), s);
        // S(x) = 1 + x + 0 x^2 - q x^3 + ...
        let s_prefix = TruncSeries::new(vec![ql(&[1]), ql(&[1]), ql(&[]), ql(&[0, -1])], 3);
        let expect = TruncSeries::new(vec![ql(&[1]), ql(&[0, 1]), ql(&[]), QLaurent::monomial(-1, 4)], 3);
        assert_eq!(series_scale_var(&s_prefix, 1), expect);
    }

    #[test]
    fn reciprocal_pochhammer_examples() {
        assert_eq!(
            series_reciprocal_pochhammer(0, 3).unwrap(),
            TruncSeries::new(vec![ql(&[1]); 4], 3)
        );
        assert_eq!(
            series_reciprocal_pochhammer(1, 2).unwrap(),
            TruncSeries::new(vec![ql(&[1]), ql(&[1, 1]), ql(&[1, 1, 1])], 2)
        );
        for ell in 0..5 {
            let direct = pochhammer_x(ell + 1, 7).reciprocal().unwrap();
            assert_eq!(series_reciprocal_pochhammer(ell, 7).unwrap(), direct);
        }
        let at_one = series_reciprocal_pochhammer(0, 2).unwrap().at_q_one();
        assert_eq!(at_one, int_series(&[1, 1, 1], 2));
        let bad = int_series(&[2, 1], 3);
        assert!(matches!(bad.reciprocal(), Err(AlgebraError::NonUnitConstant(_))));
    }

    #[test]
    fn compose_examples() {
        let outer = int_series(&[1, 1, 1], 2);
        assert_eq!(series_compose(&outer, &TruncSeries::var(2)).unwrap(), outer);
        let geom = int_series(&[1, 1, 1, 1], 3);
        let inner = int_series(&[0, 1, 1], 3);
        assert_eq!(series_compose(&geom, &inner).unwrap(), int_series(&[1, 1, 2, 3], 3));
        let t2 = int_series(&[1, 4, 2], 2);
        assert_eq!(series_compose(&t2, &TruncSeries::var(2)).unwrap(), t2);
        assert!(matches!(
            series_compose(&geom, &int_series(&[1, 1], 3)),
            Err(AlgebraError::NonZeroConstant(_))
        ));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer_x(0, 4), TruncSeries::one(4));
        assert_eq!(pochhammer_x(1, 4), TruncSeries::new(vec![ql(&[1]), ql(&[-1])], 4));
        assert_eq!(
            pochhammer_x(2, 4),
            TruncSeries::new(vec![ql(&[1]), ql(&[-1, -1]), ql(&[0, 1])], 4)
        );
    }

    #[test]
    fn rational_reciprocal() {
        let s = TruncSeries::new(
            vec![BigRational::from_integer(2.into()), BigRational::from_integer(1.into())],
            3,
        );
        let r = s.reciprocal().unwrap();
        assert!((&s * &r).agrees_with(&TruncSeries::one(3)));
    }

    #[test]
    fn shift_keeps_order() {
        let s = int_series(&[1, 2, 3], 3);
        assert_eq!(s.shift(2), int_series(&[0, 0, 1, 2], 3));
        assert_eq!(s.shift(9), TruncSeries::zero(3));
    }
}
