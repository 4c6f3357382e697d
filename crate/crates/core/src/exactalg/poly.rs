use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::coeff::Coeff;
use super::gaussint::GaussInt;

/// Dense univariate polynomial over an exact ring; no truncation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Integer polynomial in `x`.
pub type IntPoly = Poly<BigInt>;

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn x() -> Self {
        Poly::new(vec![C::zero(), C::one()])
    }

    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: C, degree: usize) -> Self {
        let mut v = vec![C::zero(); degree + 1];
        v[degree] = c;
        Poly::new(v)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> C {
        self.coeffs.get(d).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn scale(&self, s: &C) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.mul_ref(s)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut v = vec![C::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly::new(v)
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(d, c)| c.mul_ref(&C::from_i64(d as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, at: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(at);
            acc.add_assign_ref(c);
        }
        acc
    }

    /// `self(inner(x))` by Horner's rule.
    pub fn compose(&self, inner: &Poly<C>) -> Poly<C> {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * inner;
            acc = acc + Poly::constant(c.clone());
        }
        acc
    }

    /// Re-expand about `x = 1`: coefficients of `(x-1)^k`.
    pub fn about_one(&self) -> Poly<C> {
        self.compose(&Poly::new(vec![C::one(), C::one()]))
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Descending-degree rendering, e.g. `16x^5 - 20x^3 + 5x`.
    pub fn render(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let compound = s.trim_start_matches('-').contains(' ');
            let (neg, mag) = if !compound && s.starts_with('-') {
                (true, s[1..].to_string())
            } else if compound {
                (false, format!("({s})"))
            } else {
                (false, s)
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if d == 0 {
                out.push_str(&mag);
                continue;
            }
            if mag != "1" {
                out.push_str(&mag);
            }
            out.push_str(var);
            if d > 1 {
                out.push('^');
                out.push_str(&d.to_string());
            }
        }
        out
    }
}

impl IntPoly {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn eval_gauss(&self, at: &GaussInt) -> GaussInt {
        self.map(|c| GaussInt::new(c.clone(), 0)).eval(at)
    }

    pub fn eval_rational(&self, at: &BigRational) -> BigRational {
        self.map(|c| BigRational::from_integer(c.clone())).eval(at)
    }

    /// Coefficients reduced into `[0, m)`.
    pub fn reduce_mod(&self, m: &BigInt) -> IntPoly {
        Poly::new(self.coeffs.iter().map(|c| c.mod_floor(m)).collect())
    }

    /// Exact division of every coefficient by `d`, if possible.
    pub fn div_scalar_exact(&self, d: &BigInt) -> Option<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Poly::new(out))
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<C: Coeff> Zero for Poly<C> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coeff> One for Poly<C> {
    fn one() -> Self {
        Poly::constant(C::one())
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Poly<C>) -> Poly<C> {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Poly<C>) -> Poly<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

impl<'a, C: Coeff> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    let mut c = self.coeff(i);
                    if let Some(r) = rhs.coeffs.get(i) {
                        c.add_assign_ref(r);
                    }
                    c
                })
                .collect(),
        )
    }
}

impl<'a, C: Coeff> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    let mut c = self.coeff(i);
                    if let Some(r) = rhs.coeffs.get(i) {
                        c.sub_assign_ref(r);
                    }
                    c
                })
                .collect(),
        )
    }
}

impl<'a, C: Coeff> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a.mul_ref(b);
                out[i + j].add_assign_ref(&t);
            }
        }
        Poly::new(out)
    }
}

impl<C: Coeff> Coeff for Poly<C> {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            self.coeffs[0].unit_inverse().map(Poly::constant)
        } else {
            None
        }
    }
    fn from_i64(v: i64) -> Self {
        Poly::constant(C::from_i64(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_matches_table_style() {
        let t5 = IntPoly::from_i64s(&[0, 5, 0, -20, 0, 16]);
        assert_eq!(t5.to_string(), "16x^5 - 20x^3 + 5x");
        assert_eq!(IntPoly::from_i64s(&[-1, 0, 2]).to_string(), "2x^2 - 1");
        assert_eq!(IntPoly::from_i64s(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn compose_and_about_one() {
        let t2 = IntPoly::from_i64s(&[-1, 0, 2]);
        assert_eq!(t2.compose(&t2), IntPoly::from_i64s(&[1, 0, -8, 0, 8]));
        assert_eq!(t2.about_one(), IntPoly::from_i64s(&[1, 4, 2]));
    }

    #[test]
    fn derivative_and_mod() {
        let p = IntPoly::from_i64s(&[-1, 0, 2]);
        assert_eq!(p.derivative(), IntPoly::from_i64s(&[0, 4]));
        assert_eq!(p.reduce_mod(&BigInt::from(2)), IntPoly::from_i64s(&[1]));
        assert_eq!(p.eval_gauss(&GaussInt::i()), GaussInt::new(-3, 0));
    }
}
