use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::coeff::{Coeff, RationalAlgebra};
use crate::error::{AlgebraError, Result};

/// Exponent vector over the formal parameters; trailing zeros are trimmed so
/// that every monomial has exactly one representation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn var(index: usize, power: u32) -> Self {
        let mut e = vec![0; index + 1];
        e[index] = power;
        Monomial::new(e)
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::new((0..n).map(|i| self.exp(i) + other.exp(i)).collect())
    }

    fn without(&self, var: usize) -> Monomial {
        let mut e = self.0.clone();
        if var < e.len() {
            e[var] = 0;
        }
        Monomial::new(e)
    }
}

/// Polynomial in formal parameters (variable 0 is `alpha`, variable 1 is
/// `beta`) with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

const NAMES: [&str; 2] = ["alpha", "beta"];

impl ParamPoly {
    pub fn constant(c: BigRational) -> Self {
        let mut p = ParamPoly::default();
        p.add_term(Monomial::default(), &c);
        p
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// The formal parameter with index `index`.
    pub fn var(index: usize) -> Self {
        let mut p = ParamPoly::default();
        p.add_term(Monomial::var(index, 1), &BigRational::one());
        p
    }

    pub fn alpha() -> Self {
        Self::var(0)
    }

    pub fn beta() -> Self {
        Self::var(1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    /// Constant value if the polynomial has no parameter dependence.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::default()).cloned(),
            _ => None,
        }
    }

    /// True when every monomial has an even power of `var`.
    pub fn is_even_in(&self, var: usize) -> bool {
        self.terms.keys().all(|m| m.exp(var) % 2 == 0)
    }

    /// Replace `var` by an arbitrary polynomial. This is a ring homomorphism.
    pub fn substitute(&self, var: usize, value: &ParamPoly) -> ParamPoly {
        let max = self.degree_in(var) as usize;
        let mut powers = Vec::with_capacity(max + 1);
        powers.push(ParamPoly::one());
        for k in 1..=max {
            let next = powers[k - 1].mul_ref(value);
            powers.push(next);
        }
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let k = m.exp(var) as usize;
            let rest = m.without(var);
            for (pm, pc) in &powers[k].terms {
                out.add_term(rest.mul(pm), &(c * pc));
            }
        }
        out
    }

    /// `var -> var + shift`.
    pub fn shift_var(&self, var: usize, shift: &BigRational) -> ParamPoly {
        let mut v = ParamPoly::var(var);
        v.add_term(Monomial::default(), shift);
        self.substitute(var, &v)
    }

    /// `var -> value`.
    pub fn eval_var(&self, var: usize, value: &BigRational) -> ParamPoly {
        self.substitute(var, &ParamPoly::constant(value.clone()))
    }

    /// Exact quotient by the linear factor `(var + c)`; fails on a nonzero
    /// remainder.
    pub fn div_linear(&self, var: usize, c: &BigRational) -> Result<ParamPoly> {
        let deg = self.degree_in(var) as usize;
        // Coefficients of var^k, each a polynomial in the remaining variables.
        let mut slices = vec![ParamPoly::zero(); deg + 1];
        for (m, coeff) in &self.terms {
            slices[m.exp(var) as usize].add_term(m.without(var), coeff);
        }
        let root = -c.clone();
        let mut quot = vec![ParamPoly::zero(); deg];
        let mut carry = ParamPoly::zero();
        for k in (0..=deg).rev() {
            let cur = slices[k].clone() + carry.scale_rational(&root);
            if k == 0 {
                if !cur.is_zero() {
                    return Err(AlgebraError::InexactDivision(format!(
                        "({self}) / (var{var} + {c}) leaves remainder {cur}"
                    )));
                }
            } else {
                quot[k - 1] = cur.clone();
            }
            carry = cur;
        }
        let mut out = ParamPoly::zero();
        for (k, slice) in quot.into_iter().enumerate() {
            let vm = Monomial::var(var, k as u32);
            for (m, coeff) in slice.terms {
                out.add_term(m.mul(&vm), &coeff);
            }
        }
        Ok(out)
    }

    pub fn render_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        // Highest total degree first reads most naturally for these.
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|a, b| {
            let da: u32 = a.0.exps().iter().sum();
            let db: u32 = b.0.exps().iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (i, (m, c)) in items.into_iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let vars: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(v, e)| {
                    if *e == 1 {
                        names(v)
                    } else {
                        format!("{}^{}", names(v), e)
                    }
                })
                .collect();
            if vars.is_empty() {
                out.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    out.push_str(&a.to_string());
                    out.push('*');
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }
}

fn default_name(v: usize) -> String {
    NAMES.get(v).map(|s| s.to_string()).unwrap_or_else(|| format!("t{v}"))
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(&default_name))
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({self})")
    }
}

impl Zero for ParamPoly {
    fn zero() -> Self {
        ParamPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ParamPoly {
    fn one() -> Self {
        ParamPoly::from_int(1)
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(mut self) -> ParamPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(mut self, rhs: ParamPoly) -> ParamPoly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(mut self, rhs: ParamPoly) -> ParamPoly {
        self.sub_assign_ref(&rhs);
        self
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: ParamPoly) -> ParamPoly {
        self.mul_ref(&rhs)
    }
}

impl Coeff for ParamPoly {
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = ParamPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), &(-c));
        }
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.as_constant()
            .filter(|c| !c.is_zero())
            .map(|c| ParamPoly::constant(c.recip()))
    }
    fn from_i64(v: i64) -> Self {
        ParamPoly::from_int(v)
    }
}

impl RationalAlgebra for ParamPoly {
    fn from_rational(r: &BigRational) -> Self {
        ParamPoly::constant(r.clone())
    }
    fn scale_rational(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn small_poly() -> impl Strategy<Value = ParamPoly> {
        prop::collection::vec((0u32..3, 0u32..3, -4i64..5), 0..5).prop_map(|ts| {
            let mut p = ParamPoly::zero();
            for (a, b, c) in ts {
                p.add_term(Monomial::new(vec![a, b]), &rat(c, 1));
            }
            p
        })
    }

    #[test]
    fn division_by_linear_factor() {
        let a = ParamPoly::alpha();
        let one = ParamPoly::one();
        let p = (a.clone() + one.clone()) * (a.clone() * a.clone() - ParamPoly::beta());
        let q = p.div_linear(0, &rat(1, 1)).unwrap();
        assert_eq!(q, a.clone() * a.clone() - ParamPoly::beta());
        assert!((a.clone() * a).div_linear(0, &rat(1, 1)).is_err());
    }

    #[test]
    fn display() {
        let a = ParamPoly::alpha();
        let p = (a.clone() * a.clone() * a.clone() * a.clone() - a.clone() * a).scale_rational(&rat(1, 6));
        assert_eq!(p.to_string(), "1/6*alpha^4 - 1/6*alpha^2");
    }

    #[test]
    fn evaluation_after_identity_substitution() {
        let a = ParamPoly::alpha();
        let p = a.clone() * a.clone() + a.clone().scale_rational(&rat(3, 2));
        assert_eq!(p.substitute(0, &ParamPoly::alpha()), p);
        assert_eq!(p.eval_var(0, &rat(1, 1)).as_constant(), Some(rat(5, 2)));
    }

    proptest! {
        #[test]
        fn substitution_is_ring_homomorphism(p in small_poly(), r in small_poly(), s in small_poly()) {
            let lhs = p.mul_ref(&r).substitute(0, &s);
            let rhs = p.substitute(0, &s).mul_ref(&r.substitute(0, &s));
            prop_assert_eq!(lhs, rhs);
            let lhs = (p.clone() + r.clone()).substitute(1, &s);
            let rhs = p.substitute(1, &s) + r.substitute(1, &s);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn alpha_to_one_then_identity(p in small_poly()) {
            let at_one = p.eval_var(0, &rat(1, 1));
            prop_assert_eq!(at_one.substitute(0, &ParamPoly::alpha()), at_one.clone());
            prop_assert_eq!(at_one.degree_in(0), 0);
        }
    }
}
