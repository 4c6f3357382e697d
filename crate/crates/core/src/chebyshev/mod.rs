//! Chebyshev polynomials over the integers, their explicit and hypergeometric
//! forms, and the formal interpolation `T_alpha` about `x = 1`.

mod alpha;
mod checks;
mod fixture;
mod interval;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::exactalg::{binomial, factorial, Coeff, IntPoly, Poly, RationalAlgebra};
use crate::series::TruncSeries;

pub use alpha::{t_alpha, t_alpha_at, t_param, u_alpha, u_alpha_at, u_alpha_printed_at, AlphaSeries};
pub use checks::{
    alpha_relations_check, composition_check, congruence_check, congruence_suite, convergence_probe,
    explicit_check, gauss_eval_check, group_law_check, hypergeometric_check, inverse_check, inverse_suite,
    misprint_check_6_44, probe_check, recurrence_check, structure_check, table_errata_check, AlphaRelation,
    Congruence, ProbeResult, Structure,
};
pub use fixture::{TableRow, PRINTED_TABLE};

/// `T_n` from `T_0 = 1`, `T_1 = x`, `T_(n+2) = 2x T_(n+1) - T_n`.
pub fn cheb_t(n: usize) -> IntPoly {
    three_term(IntPoly::one(), IntPoly::x(), n)
}

/// `U_n` from `U_0 = 1`, `U_1 = 2x`, `U_(n+2) = 2x U_(n+1) - U_n`.
pub fn cheb_u(n: usize) -> IntPoly {
    three_term(IntPoly::one(), IntPoly::from_i64s(&[0, 2]), n)
}

fn three_term(p0: IntPoly, p1: IntPoly, n: usize) -> IntPoly {
    if n == 0 {
        return p0;
    }
    let two_x = IntPoly::from_i64s(&[0, 2]);
    let (mut a, mut b) = (p0, p1);
    for _ in 1..n {
        let c = &(&two_x * &b) - &a;
        a = b;
        b = c;
    }
    b
}

/// Closed forms for `T_n` and `U_n` that avoid the recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExplicitFormula {
    /// `T_n = (n/2) sum (-1)^k (n-k-1)! / (k! (n-2k)!) (2x)^(n-2k)`, `n >= 1`.
    TFactorial,
    /// `U_n = sum (-1)^k C(n-k, k) (2x)^(n-2k)`.
    UBinomial,
    /// `T_n = sum C(n, 2k) x^(n-2k) (x^2 - 1)^k`.
    TPowers,
}

pub fn cheb_explicit(kind: ExplicitFormula, n: usize) -> Result<IntPoly> {
    let half = n / 2;
    match kind {
        ExplicitFormula::TFactorial => {
            if n == 0 {
                return Err(AlgebraError::InvalidArgument("factorial form needs n >= 1".into()));
            }
            let mut coeffs = vec![BigInt::zero(); n + 1];
            for k in 0..=half {
                let num = BigInt::from(n) * factorial((n - k - 1) as u32) * (BigInt::one() << (n - 2 * k));
                let den = BigInt::from(2) * factorial(k as u32) * factorial((n - 2 * k) as u32);
                let c = BigRational::new(num, den);
                if !c.is_integer() {
                    return Err(AlgebraError::InexactDivision(format!("T_{n} coefficient of x^{}: {c}", n - 2 * k)));
                }
                let c = c.to_integer();
                coeffs[n - 2 * k] = if k % 2 == 0 { c } else { -c };
            }
            Ok(IntPoly::new(coeffs))
        }
        ExplicitFormula::UBinomial => {
            let mut coeffs = vec![BigInt::zero(); n + 1];
            for k in 0..=half {
                let c = binomial((n - k) as i64, k as i64) * (BigInt::one() << (n - 2 * k));
                coeffs[n - 2 * k] = if k % 2 == 0 { c } else { -c };
            }
            Ok(IntPoly::new(coeffs))
        }
        ExplicitFormula::TPowers => {
            let x2m1 = IntPoly::from_i64s(&[-1, 0, 1]);
            let mut acc = IntPoly::zero();
            let mut power = IntPoly::one();
            for k in 0..=half {
                let term = power.shift(n - 2 * k).scale(&binomial(n as i64, 2 * k as i64));
                acc = &acc + &term;
                power = &power * &x2m1;
            }
            Ok(acc)
        }
    }
}

/// Truncated `2F1(a, b; c; z) = sum (a)_k (b)_k / ((c)_k k!) z^k`.
/// Fails if `(c)_k` vanishes for some `k < order`.
pub fn hypergeometric_f<C: RationalAlgebra>(a: &C, b: &C, c: &BigRational, order: usize) -> Result<TruncSeries<C>> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = C::one();
    coeffs.push(term.clone());
    for k in 0..order {
        let ck = c + BigRational::from_integer(BigInt::from(k));
        if ck.is_zero() {
            return Err(AlgebraError::Pole(k));
        }
        let kk = C::from_i64(k as i64);
        let num = (a.clone() + kk.clone()).mul_ref(&(b.clone() + kk));
        let den = ck * BigRational::from_integer(BigInt::from(k + 1));
        term = term.mul_ref(&num).scale_rational(&den.recip());
        coeffs.push(term.clone());
    }
    Ok(TruncSeries::new(coeffs, order))
}

/// `sum f_k z^k` at `z = (1 - x)/2`, as a polynomial in `x`.
pub fn in_x(f: &TruncSeries<BigRational>) -> Poly<BigRational> {
    let z = Poly::new(vec![BigRational::new(1.into(), 2.into()), BigRational::new((-1).into(), 2.into())]);
    Poly::new(f.coeffs().to_vec()).compose(&z)
}

/// `T_n` with rational coefficients.
pub fn to_rational(p: &IntPoly) -> Poly<BigRational> {
    p.map(|c| BigRational::from_integer(c.clone()))
}

/// `gamma_0 = 0`, `gamma_1 = 1`, `gamma_(n+2) = 2 gamma_(n+1) + gamma_n`.
pub fn pell_gamma(n_max: usize) -> Vec<BigInt> {
    let mut g = vec![BigInt::zero(), BigInt::one()];
    while g.len() <= n_max + 1 {
        let l = g.len();
        let next = BigInt::from(2) * &g[l - 1] + &g[l - 2];
        g.push(next);
    }
    g.truncate(n_max + 2);
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_render_like_the_table() {
        assert_eq!(cheb_t(5).render("x"), "16x^5 - 20x^3 + 5x");
        assert_eq!(cheb_u(4).render("x"), "16x^4 - 12x^2 + 1");
        assert_eq!(cheb_t(9).render("x"), "256x^9 - 576x^7 + 432x^5 - 120x^3 + 9x");
        assert_eq!(cheb_t(0), IntPoly::one());
        assert_eq!(cheb_u(1).render("x"), "2x");
    }

    #[test]
    fn explicit_examples() {
        assert_eq!(cheb_explicit(ExplicitFormula::TPowers, 3).unwrap().render("x"), "4x^3 - 3x");
        assert_eq!(cheb_explicit(ExplicitFormula::UBinomial, 2).unwrap().render("x"), "4x^2 - 1");
        assert_eq!(cheb_explicit(ExplicitFormula::TFactorial, 4).unwrap().render("x"), "8x^4 - 8x^2 + 1");
        assert!(cheb_explicit(ExplicitFormula::TFactorial, 0).is_err());
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn hypergeometric_examples() {
        let f = hypergeometric_f(&q(-1, 1), &q(1, 1), &q(1, 2), 3).unwrap();
        assert_eq!(f.coeffs(), &[q(1, 1), q(-2, 1), q(0, 1), q(0, 1)]);
        assert_eq!(in_x(&f), to_rational(&cheb_t(1)));
        let f = hypergeometric_f(&q(-2, 1), &q(2, 1), &q(1, 2), 4).unwrap();
        assert_eq!(&f.coeffs()[..3], &[q(1, 1), q(-8, 1), q(8, 1)]);
        assert_eq!(in_x(&f), to_rational(&cheb_t(2)));
        assert_eq!(hypergeometric_f(&q(1, 1), &q(1, 1), &q(-2, 1), 5).unwrap_err(), AlgebraError::Pole(2));
    }

    #[test]
    fn gamma_prefix() {
        let g: Vec<i64> = pell_gamma(4).iter().map(|v| v.try_into().unwrap()).collect();
        assert_eq!(g, vec![0, 1, 2, 5, 12, 29]);
    }
}
