//! q-combinatorial primitives.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::coeff::Coeff;
use super::laurent::QLaurent;
use crate::error::{AlgebraError, Result};

/// `[m]_q = 1 + q + ... + q^(m-1)`; zero for `m = 0`.
pub fn q_number(m: u32) -> QLaurent {
    QLaurent::from_terms((0..m as i64).map(|e| (e, 1)))
}

/// `[1][2]...[m]`.
pub fn q_factorial(m: u32) -> QLaurent {
    (1..=m).fold(QLaurent::one(), |acc, k| acc.mul_ref(&q_number(k)))
}

/// Pascal rows of Gaussian binomials, grown on demand. Row `n` holds
/// `[n choose k]` for `0 <= k <= n`.
static PASCAL: RwLock<Vec<Vec<QLaurent>>> = RwLock::new(Vec::new());

/// Gaussian binomial `[n choose k]_q`, built from the Pascal rule
/// `[n+1, r] = q^r [n, r] + [n, r-1]`. Zero when `k > n`.
pub fn gauss_binomial(n: u32, k: u32) -> QLaurent {
    if k > n {
        return QLaurent::zero();
    }
    let (n, k) = (n as usize, k as usize);
    {
        let rows = PASCAL.read().unwrap_or_else(|e| e.into_inner());
        if let Some(row) = rows.get(n) {
            return row[k].clone();
        }
    }
    let mut rows = PASCAL.write().unwrap_or_else(|e| e.into_inner());
    if rows.is_empty() {
        rows.push(vec![QLaurent::one()]);
    }
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let m = prev.len();
        let mut row = Vec::with_capacity(m + 1);
        for r in 0..=m {
            let mut c = if r < m { prev[r].shift(r as i64) } else { QLaurent::zero() };
            if r > 0 {
                c.add_assign_ref(&prev[r - 1]);
            }
            row.push(c);
        }
        rows.push(row);
    }
    rows[n][k].clone()
}

/// Gaussian binomial from the quotient `[n]...[n-k+1] / ([1]...[k])`.
/// Kept independent of the Pascal table; a remainder is reported as an error.
pub fn gauss_binomial_quotient(n: u32, k: u32) -> Result<QLaurent> {
    if k > n {
        return Err(AlgebraError::InvalidArgument(format!("k = {k} exceeds n = {n}")));
    }
    let num = ((n - k + 1)..=n).fold(QLaurent::one(), |acc, m| acc.mul_ref(&q_number(m)));
    num.div_exact(&q_factorial(k))
}

/// Substitute `q -> q^e`.
pub fn substitute_q_power(p: &QLaurent, e: i64) -> Result<QLaurent> {
    if e == 0 {
        return Err(AlgebraError::InvalidArgument("exponent must be nonzero".into()));
    }
    Ok(p.substitute_power(e))
}

/// `(2k+1)!! = 1 * 3 * 5 * ... * (2k+1)`.
pub fn odd_double_factorial(k: u32) -> BigInt {
    (0..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(2 * i + 1))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Ordinary binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_numbers() {
        assert!(q_number(0).is_zero());
        assert_eq!(q_number(1), QLaurent::one());
        assert_eq!(q_number(3), QLaurent::from_coeffs(&[1, 1, 1]));
    }

    #[test]
    fn q_factorials() {
        assert_eq!(q_factorial(0), QLaurent::one());
        assert_eq!(q_factorial(2), QLaurent::from_coeffs(&[1, 1]));
        assert_eq!(q_factorial(3), QLaurent::from_coeffs(&[1, 2, 2, 1]));
    }

    #[test]
    fn gauss_binomial_values() {
        for m in 0..8 {
            assert_eq!(gauss_binomial(m, 0), QLaurent::one());
        }
        assert_eq!(gauss_binomial(2, 1), QLaurent::from_coeffs(&[1, 1]));
        assert_eq!(gauss_binomial(4, 2), QLaurent::from_coeffs(&[1, 1, 2, 1, 1]));
        assert!(gauss_binomial(2, 3).is_zero());
    }

    #[test]
    fn quotient_route_agrees_and_rejects_bad_k() {
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(gauss_binomial_quotient(n, k).unwrap(), gauss_binomial(n, k));
            }
        }
        assert!(gauss_binomial_quotient(2, 3).is_err());
    }

    #[test]
    fn substitution_examples() {
        let p = QLaurent::from_coeffs(&[1, 1]);
        assert_eq!(substitute_q_power(&p, -1).unwrap(), QLaurent::from_terms([(0, 1), (-1, 1)]));
        assert_eq!(
            substitute_q_power(&gauss_binomial(2, 1), -1).unwrap(),
            gauss_binomial(2, 1).shift(-1)
        );
        assert_eq!(substitute_q_power(&QLaurent::q_pow(2), 3).unwrap(), QLaurent::q_pow(6));
        assert!(substitute_q_power(&p, 0).is_err());
    }

    #[test]
    fn odd_double_factorials() {
        assert_eq!(odd_double_factorial(0), BigInt::from(1));
        assert_eq!(odd_double_factorial(2), BigInt::from(15));
        // iterated product oracle
        let oracle: i64 = [1, 3, 5, 7, 9].iter().product();
        assert_eq!(odd_double_factorial(4), BigInt::from(oracle));
    }
}
