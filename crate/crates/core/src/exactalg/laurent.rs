use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::coeff::Coeff;
use crate::error::{AlgebraError, Result};

/// Laurent polynomial in `q` with arbitrary-precision integer coefficients.
///
/// Sparse: exponent -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl QLaurent {
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let c = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        QLaurent { terms }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = QLaurent::zero();
        for (e, c) in terms {
            out.add_term(e, &c.into());
        }
        out
    }

    /// Polynomial from a dense coefficient list starting at `q^0`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(e, &c)| (e as i64, c)))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when no negative powers of `q` occur.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    pub fn add_term(&mut self, exp: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return QLaurent::zero();
        }
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Substitute `q -> q^e`; `e` must be nonzero.
    pub fn substitute_power(&self, e: i64) -> Self {
        assert!(e != 0, "substitution q -> q^0 is not a ring automorphism");
        QLaurent {
            terms: self.terms.iter().map(|(j, c)| (j * e, c.clone())).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn eval(&self, q: &BigInt) -> num_rational::BigRational {
        use num_rational::BigRational;
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                BigRational::from_integer(num_traits::pow(q.clone(), *e as usize))
            } else {
                BigRational::from_integer(num_traits::pow(q.clone(), (-*e) as usize)).recip()
            };
            acc += BigRational::from_integer(c.clone()) * p;
        }
        acc
    }

    /// Exact quotient `self / divisor`; fails if a remainder is left.
    pub fn div_exact(&self, divisor: &QLaurent) -> Result<QLaurent> {
        let (d_hi, d_lead) = match divisor.terms.iter().next_back() {
            Some((e, c)) => (*e, c.clone()),
            None => return Err(AlgebraError::InexactDivision("division by zero".into())),
        };
        let d_lo = divisor.min_exp().unwrap();
        let mut rem = self.clone();
        let mut quot = QLaurent::zero();
        // Long division from the top; terminates once the remainder's span
        // is narrower than the divisor's.
        while let Some((r_hi, r_lead)) = rem.terms.iter().next_back().map(|(e, c)| (*e, c.clone()))
        {
            let r_lo = rem.min_exp().unwrap();
            if r_hi - r_lo < d_hi - d_lo {
                break;
            }
            let (q, r) = r_lead.div_rem(&d_lead);
            if !r.is_zero() {
                return Err(AlgebraError::InexactDivision(format!(
                    "leading coefficient {r_lead} not divisible by {d_lead}"
                )));
            }
            let shift = r_hi - d_hi;
            quot.add_term(shift, &q);
            for (e, c) in &divisor.terms {
                rem.add_term(e + shift, &(-(c * &q)));
            }
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(AlgebraError::InexactDivision(format!(
                "({self}) / ({divisor}) leaves remainder {rem}"
            )))
        }
    }

    /// Render with an arbitrary variable name, ascending exponents.
    pub fn render(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if *e == 0 {
                out.push_str(&a.to_string());
                continue;
            }
            if !a.is_one() {
                out.push_str(&a.to_string());
                out.push('*');
            }
            out.push_str(var);
            if *e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        out
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurent({self})")
    }
}

impl From<i64> for QLaurent {
    fn from(c: i64) -> Self {
        QLaurent::constant(c)
    }
}

impl From<BigInt> for QLaurent {
    fn from(c: BigInt) -> Self {
        QLaurent::constant(c)
    }
}

impl Zero for QLaurent {
    fn zero() -> Self {
        QLaurent::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for QLaurent {
    fn one() -> Self {
        QLaurent::constant(1)
    }
}

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(mut self) -> QLaurent {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<'a> Add<&'a QLaurent> for &'a QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl<'a> Sub<&'a QLaurent> for &'a QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &(-c));
        }
        out
    }
}

impl<'a> Mul<&'a QLaurent> for &'a QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl Add for QLaurent {
    type Output = QLaurent;
    fn add(mut self, rhs: QLaurent) -> QLaurent {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
        self
    }
}

impl Sub for QLaurent {
    type Output = QLaurent;
    fn sub(mut self, rhs: QLaurent) -> QLaurent {
        for (e, c) in rhs.terms {
            self.add_term(e, &(-c));
        }
        self
    }
}

impl Mul for QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: QLaurent) -> QLaurent {
        &self * &rhs
    }
}

impl Coeff for QLaurent {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(*e, c);
        }
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(*e, &(-c));
        }
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if c.abs().is_one() {
            Some(QLaurent::monomial(c.clone(), -e))
        } else {
            None
        }
    }
    fn from_i64(v: i64) -> Self {
        QLaurent::constant(v)
    }
}
