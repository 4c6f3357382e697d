use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::exactalg::QLaurent;
use crate::series::{mul_one_minus, TruncSeries};

/// `sum_nu x^nu (1 - x)(1 - q x)...(1 - q^nu x)` to `x^N`.
pub fn euler_tower_p_series(order: usize) -> TruncSeries<QLaurent> {
    let mut acc = TruncSeries::zero(order);
    let mut poch = mul_one_minus(&TruncSeries::one(order), 0);
    for nu in 0..=order {
        acc = &acc + &poch.shift(nu);
        poch = mul_one_minus(&poch, nu as i64 + 1);
    }
    acc
}

fn int_series(order: usize) -> Vec<BigInt> {
    vec![BigInt::zero(); order + 1]
}

/// In-place multiplication by `(1 - q^j)`.
fn mul_one_minus_q_pow(s: &mut [BigInt], j: usize) {
    for d in (j..s.len()).rev() {
        let prev = s[d - j].clone();
        s[d] -= prev;
    }
}

/// `prod_{j=1..N} (1 - q^j)` truncated at `q^N`.
pub fn pentagonal_product(order: usize) -> TruncSeries<BigInt> {
    let mut s = int_series(order);
    s[0] = BigInt::one();
    for j in 1..=order {
        mul_one_minus_q_pow(&mut s, j);
    }
    TruncSeries::new(s, order)
}

fn add_signed_monomial(s: &mut [BigInt], exp: i64, negative: bool) {
    if exp >= 0 && (exp as usize) < s.len() {
        if negative {
            s[exp as usize] -= 1;
        } else {
            s[exp as usize] += 1;
        }
    }
}

/// `sum_{n in Z} (-1)^n q^(n(3n+1)/2)` truncated at `q^N`.
pub fn pentagonal_sum(order: usize) -> TruncSeries<BigInt> {
    let mut s = int_series(order);
    let mut n: i64 = 0;
    loop {
        let e1 = n * (3 * n + 1) / 2;
        let e2 = n * (3 * n - 1) / 2;
        if e1 > order as i64 && e2 > order as i64 {
            break;
        }
        add_signed_monomial(&mut s, e1, n % 2 != 0);
        if n != 0 {
            add_signed_monomial(&mut s, e2, n % 2 != 0);
        }
        n += 1;
    }
    TruncSeries::new(s, order)
}

/// `P_l = sum_nu q^(nu l) (1 - q^l)...(1 - q^(l+nu))` as a q-series.
pub fn tower_p_specialized(ell: u32, order: usize) -> Result<TruncSeries<BigInt>> {
    if ell == 0 {
        return Err(AlgebraError::InvalidArgument("tower index must be positive".into()));
    }
    let ell = ell as usize;
    let mut acc = int_series(order);
    let mut prod = int_series(order);
    prod[0] = BigInt::one();
    mul_one_minus_q_pow(&mut prod, ell);
    let mut nu = 0usize;
    while nu * ell <= order {
        for d in nu * ell..=order {
            acc[d] += &prod[d - nu * ell];
        }
        mul_one_minus_q_pow(&mut prod, ell + nu + 1);
        nu += 1;
    }
    Ok(TruncSeries::new(acc, order))
}

/// `sum_{n>=0} (-1)^n q^(3 l n + n(3n+1)/2) (1 - q^(2l+2n+1))`.
pub fn tower_p_closed(ell: u32, order: usize) -> TruncSeries<BigInt> {
    let ell = ell as i64;
    let mut s = int_series(order);
    let mut n: i64 = 0;
    while 3 * ell * n + n * (3 * n + 1) / 2 <= order as i64 {
        let base = 3 * ell * n + n * (3 * n + 1) / 2;
        let odd = n % 2 != 0;
        add_signed_monomial(&mut s, base, odd);
        add_signed_monomial(&mut s, base + 2 * ell + 2 * n + 1, !odd);
        n += 1;
    }
    TruncSeries::new(s, order)
}

/// `sum_{n>=0} (-1)^n { q^(3 l n + n(3n-1)/2) + q^((3n+1) l + n(3n+1)/2) }`.
pub fn tower_bar_closed(ell: u32, order: usize) -> TruncSeries<BigInt> {
    let ell = ell as i64;
    let mut s = int_series(order);
    let mut n: i64 = 0;
    while 3 * ell * n + n * (3 * n - 1) / 2 <= order as i64 {
        let odd = n % 2 != 0;
        add_signed_monomial(&mut s, 3 * ell * n + n * (3 * n - 1) / 2, odd);
        add_signed_monomial(&mut s, (3 * n + 1) * ell + n * (3 * n + 1) / 2, odd);
        n += 1;
    }
    TruncSeries::new(s, order)
}

fn signed_q(negative: bool, e: i64) -> QLaurent {
    QLaurent::monomial(if negative { -1 } else { 1 }, e)
}

/// Sparse form `sum_n (-x)^(3n) q^(n(3n-1)/2) (1 + x q^n)`.
pub fn s_sparse(order: usize) -> TruncSeries<QLaurent> {
    let mut s = TruncSeries::zero(order);
    let mut n = 0usize;
    while 3 * n <= order {
        let (ni, odd) = (n as i64, n % 2 == 1);
        s.add_to_coeff(3 * n, &signed_q(odd, ni * (3 * ni - 1) / 2));
        s.add_to_coeff(3 * n + 1, &signed_q(odd, ni * (3 * ni - 1) / 2 + ni));
        n += 1;
    }
    s
}

/// Sparse form `sum_n (-x)^(3n) q^(n(3n+1)/2) {1 + x q^(2n+1) + x^2 q^(2n+1) (q^(n+1) - 1)}`.
pub fn s_q_sparse(order: usize) -> TruncSeries<QLaurent> {
    s_q_sparse_with_shift(order, 1)
}

/// The same sparse form with `q^(2n)` in place of `q^(2n+1)`, as it is
/// commonly printed. Wrong from `x^1` on; kept for the errata check.
pub fn s_q_sparse_printed(order: usize) -> TruncSeries<QLaurent> {
    s_q_sparse_with_shift(order, 0)
}

fn s_q_sparse_with_shift(order: usize, extra: i64) -> TruncSeries<QLaurent> {
    let mut s = TruncSeries::zero(order);
    let mut n = 0usize;
    while 3 * n <= order {
        let (ni, odd) = (n as i64, n % 2 == 1);
        let base = ni * (3 * ni + 1) / 2;
        let inner = base + 2 * ni + extra;
        s.add_to_coeff(3 * n, &signed_q(odd, base));
        s.add_to_coeff(3 * n + 1, &signed_q(odd, inner));
        let tail = &signed_q(odd, inner) * &(QLaurent::q_pow(ni + 1) - QLaurent::one());
        s.add_to_coeff(3 * n + 2, &tail);
        n += 1;
    }
    s
}

/// Sparse form `1 + sum_{l>=1} (-1)^l { q^(l(3l-1)/2) x^(3l-1) + q^(l(3l+1)/2) x^(3l) }`.
pub fn calp_sparse(order: usize) -> TruncSeries<QLaurent> {
    let mut s = TruncSeries::one(order);
    let mut l = 1usize;
    while 3 * l - 1 <= order {
        let (li, odd) = (l as i64, l % 2 == 1);
        s.add_to_coeff(3 * l - 1, &signed_q(odd, li * (3 * li - 1) / 2));
        s.add_to_coeff(3 * l, &signed_q(odd, li * (3 * li + 1) / 2));
        l += 1;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncSeries<BigInt>) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn product_examples() {
        assert_eq!(ints(&pentagonal_product(7)), vec![1, -1, -1, 0, 0, 1, 0, 1]);
        assert_eq!(ints(&pentagonal_product(1)), vec![1, -1]);
        let p15 = ints(&pentagonal_product(15));
        let mut expect = vec![0i64; 16];
        for (e, c) in [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)] {
            expect[e] = c;
        }
        assert_eq!(p15, expect);
    }

    #[test]
    fn calp_prefix() {
        let p = euler_tower_p_series(6);
        assert_eq!(p.coeff(0), &QLaurent::one());
        assert!(p.coeff(1).is_zero());
        assert_eq!(p.coeff(2), &QLaurent::monomial(-1, 1));
        assert_eq!(p.coeff(3), &QLaurent::monomial(-1, 2));
        assert_eq!(p.coeff(6), &QLaurent::q_pow(7));
    }

    #[test]
    fn tower_rejects_zero_index() {
        assert!(tower_p_specialized(0, 5).is_err());
    }

    #[test]
    fn tower_closed_forms_agree() {
        for ell in 1..=4 {
            assert_eq!(tower_p_specialized(ell, 30).unwrap(), tower_p_closed(ell, 30));
        }
        assert_eq!(tower_p_closed(0, 40), pentagonal_product(40));
    }
}
