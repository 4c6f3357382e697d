//! `T_alpha(x) = sum c_(alpha|k) (x - 1)^k` with `c_(alpha|0) = 1` and
//! `c_(alpha|k+1) = (alpha^2 - k^2) / ((k+1)(2k+1)) c_(alpha|k)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::exactalg::{Coeff, ParamPoly, RationalAlgebra};
use crate::series::TruncSeries;

/// Series in `u = x - 1` whose coefficients are polynomials in the parameters.
pub type AlphaSeries = TruncSeries<ParamPoly>;

fn step(k: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from((k + 1) * (2 * k + 1)))
}

/// `T_v` in the parameter variable `var`.
pub fn t_param(var: usize, order: usize) -> AlphaSeries {
    let v = ParamPoly::var(var);
    let v2 = v.mul_ref(&v);
    let mut coeffs = vec![ParamPoly::one()];
    for k in 0..order {
        let factor = v2.clone() - ParamPoly::from_int((k * k) as i64);
        let next = coeffs[k].mul_ref(&factor).scale_rational(&step(k));
        coeffs.push(next);
    }
    TruncSeries::new(coeffs, order)
}

/// `T_alpha`, parameter variable 0.
pub fn t_alpha(order: usize) -> AlphaSeries {
    t_param(0, order)
}

/// `U_alpha = T'_(alpha+1) / (alpha + 1)`. The division is exact in the
/// parameter ring; a remainder is an error.
pub fn u_alpha(order: usize) -> Result<AlphaSeries> {
    let shifted = t_alpha(order + 1).map(|c| c.shift_var(0, &BigRational::one()));
    let d = shifted.derivative();
    let coeffs = d
        .coeffs()
        .iter()
        .map(|c| c.div_linear(0, &BigRational::one()))
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncSeries::new(coeffs, order))
}

/// `T_alpha` at a rational value of `alpha`.
pub fn t_alpha_at(alpha: &BigRational, order: usize) -> TruncSeries<BigRational> {
    let a2 = alpha * alpha;
    let mut coeffs = vec![BigRational::one()];
    for k in 0..order {
        let kk = BigRational::from_integer(BigInt::from(k * k));
        let next = &coeffs[k] * (&a2 - kk) * step(k);
        coeffs.push(next);
    }
    TruncSeries::new(coeffs, order)
}

fn divide_by_alpha_plus_one(s: TruncSeries<BigRational>, alpha: &BigRational) -> Result<TruncSeries<BigRational>> {
    let d = alpha + BigRational::one();
    if d.is_zero() {
        return Err(AlgebraError::InvalidArgument("alpha = -1".into()));
    }
    Ok(s.map(|c| c.scale_rational(&d.recip())))
}

/// `T'_(alpha+1) / (alpha + 1)` at a rational `alpha`.
pub fn u_alpha_at(alpha: &BigRational, order: usize) -> Result<TruncSeries<BigRational>> {
    let t = t_alpha_at(&(alpha + BigRational::one()), order + 1);
    divide_by_alpha_plus_one(t.derivative(), alpha)
}

/// `T'_alpha / (alpha + 1)` at a rational `alpha`.
pub fn u_alpha_printed_at(alpha: &BigRational, order: usize) -> Result<TruncSeries<BigRational>> {
    divide_by_alpha_plus_one(t_alpha_at(alpha, order + 1).derivative(), alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::{cheb_t, cheb_u, to_rational};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn leading_coefficients() {
        let t = t_alpha(4);
        assert_eq!(t.coeff(1).to_string(), "alpha^2");
        assert_eq!(t.coeff(2).to_string(), "1/6*alpha^4 - 1/6*alpha^2");
        // alpha = 2: T_2 = 1 + 4u + 2u^2
        let at2: Vec<_> = t.coeffs().iter().map(|c| c.eval_var(0, &q(2, 1)).as_constant().unwrap()).collect();
        assert_eq!(at2, vec![q(1, 1), q(4, 1), q(2, 1), q(0, 1), q(0, 1)]);
    }

    #[test]
    fn integer_values_give_polynomials() {
        let t = t_alpha(10);
        for n in 0..=8i64 {
            let about_one = to_rational(&cheb_t(n as usize)).about_one();
            for (k, c) in t.coeffs().iter().enumerate() {
                assert_eq!(c.eval_var(0, &q(n, 1)).as_constant().unwrap(), about_one.coeff(k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn u_alpha_divides_and_specializes() {
        let u = u_alpha(8).unwrap();
        for n in 0..=6i64 {
            let about_one = to_rational(&cheb_u(n as usize)).about_one();
            for (k, c) in u.coeffs().iter().enumerate() {
                assert_eq!(c.eval_var(0, &q(n, 1)).as_constant().unwrap(), about_one.coeff(k));
            }
        }
        assert_eq!(u_alpha_at(&q(3, 1), 5).unwrap().coeffs(), to_rational(&cheb_u(3)).about_one().coeffs().iter().cloned().chain(std::iter::repeat(q(0, 1))).take(6).collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn printed_u_convention_is_not_polynomial() {
        // alpha^2 / (alpha + 1) has a remainder.
        let t = t_alpha(3);
        assert!(t.derivative().coeff(0).div_linear(0, &BigRational::one()).is_err());
    }

    #[test]
    fn half_alpha() {
        let t = t_alpha_at(&q(1, 2), 2);
        assert_eq!(t.coeffs(), &[q(1, 1), q(1, 4), q(-1, 32)]);
    }
}
