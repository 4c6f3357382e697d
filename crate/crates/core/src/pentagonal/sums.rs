use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::exactalg::{binomial, gauss_binomial, Poly, QLaurent};
use crate::series::{mul_one_minus, TruncSeries};

/// Polynomial in the parameter `a` with `QLaurent` coefficients.
pub type APoly = Poly<QLaurent>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalSum {
    pub n: u32,
    pub value: BigInt,
}

/// `s_n = sum_k (-1)^k C(n-k, k)`.
pub fn classic_sum(n: u32) -> ClassicalSum {
    let n_i = n as i64;
    let value = (0..=n_i / 2).fold(BigInt::zero(), |acc, k| {
        let b = binomial(n_i - k, k);
        if k % 2 == 0 {
            acc + b
        } else {
            acc - b
        }
    });
    ClassicalSum { n, value }
}

/// Which specialization of the parameter `a` a q-sum uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AMode {
    One,
    Q,
    Symbolic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QSumValue {
    Fixed(QLaurent),
    Symbolic(APoly),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSum {
    pub n: u32,
    pub mode: AMode,
    pub value: QSumValue,
}

impl QSum {
    pub fn fixed(&self) -> Option<&QLaurent> {
        match &self.value {
            QSumValue::Fixed(v) => Some(v),
            QSumValue::Symbolic(_) => None,
        }
    }

    pub fn symbolic(&self) -> Option<&APoly> {
        match &self.value {
            QSumValue::Symbolic(v) => Some(v),
            QSumValue::Fixed(_) => None,
        }
    }
}

fn sign(k: u32) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `S_n(a) = sum_k (-1)^k [n-k, k] q^(k(k-1)/2) a^(n-k)`, by direct summation.
pub fn q_sum_s(n: u32, mode: AMode) -> QSum {
    let terms = (0..=n / 2).map(|k| {
        let base = gauss_binomial(n - k, k).shift((k as i64) * (k as i64 - 1) / 2);
        (k, if sign(k) < 0 { -base } else { base })
    });
    let value = match mode {
        AMode::One => QSumValue::Fixed(terms.fold(QLaurent::zero(), |acc, (_, t)| acc + t)),
        AMode::Q => QSumValue::Fixed(
            terms.fold(QLaurent::zero(), |acc, (k, t)| acc + t.shift((n - k) as i64)),
        ),
        AMode::Symbolic => QSumValue::Symbolic(terms.fold(APoly::zero(), |acc, (k, t)| {
            acc + APoly::monomial(t, (n - k) as usize)
        })),
    };
    QSum { n, mode, value }
}

/// Quadratic exponents of the six-case closed form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExponentAnsatz;

impl ExponentAnsatz {
    pub fn x(n: i64) -> i64 {
        6 * n * n + n
    }
    pub fn y(n: i64) -> i64 {
        6 * n * n + 5 * n + 1
    }
    pub fn u(n: i64) -> i64 {
        6 * n * n + 7 * n + 2
    }
    pub fn v(n: i64) -> i64 {
        6 * n * n + 11 * n + 5
    }

    /// The linear compatibility conditions that determine the exponents.
    pub fn relations_hold(n: i64) -> bool {
        Self::y(n) == Self::x(n) + 4 * n + 1
            && Self::u(n) == Self::x(n) + 6 * n + 2
            && Self::v(n) == Self::u(n) + 4 * n + 3
            && Self::x(n + 1) == 6 * n + 5 + Self::u(n)
    }
}

/// Closed form of `S_n` (`a = 1`) or `S_n(q)` (`a = q`) by residue of `n` mod 6.
pub fn closed_form_s(n: u32, mode: AMode) -> Result<QLaurent> {
    type A = ExponentAnsatz;
    let t = (n / 6) as i64;
    let q = QLaurent::q_pow;
    let neg = |e: i64| QLaurent::monomial(-1, e);
    let value = match (mode, n % 6) {
        (AMode::One, 0) => q(A::x(t) - 2 * t),
        (AMode::One, 1) => q(A::x(t)),
        (AMode::One, 3) => neg(A::u(t) - 2 * t - 1),
        (AMode::One, 4) => neg(A::u(t)),
        (AMode::One, _) => QLaurent::zero(),
        (AMode::Q, 0) => q(A::x(t)),
        (AMode::Q, 1) => q(A::y(t)),
        (AMode::Q, 2) => &q(A::y(t)) * &(q(2 * t + 1) - QLaurent::one()),
        (AMode::Q, 3) => neg(A::u(t)),
        (AMode::Q, 4) => neg(A::v(t)),
        (AMode::Q, _) => &neg(A::v(t)) * &(q(2 * t + 2) - QLaurent::one()),
        (AMode::Symbolic, _) => {
            return Err(AlgebraError::InvalidArgument(
                "closed form exists only for a = 1 and a = q".into(),
            ))
        }
    };
    Ok(value)
}

/// `S(x, q^L) = sum_m q^(L m) x^m (x;q)_m` by direct expansion to order `N`.
pub fn series_s(a_exponent: i64, order: usize) -> TruncSeries<QLaurent> {
    let mut acc = TruncSeries::zero(order);
    let mut poch = TruncSeries::<QLaurent>::one(order);
    // x^m (x;q)_m has valuation m, so terms past m = N contribute nothing.
    for m in 0..=order {
        for d in m..=order {
            let c = poch.coeff(d - m);
            if !c.is_zero() {
                acc.add_to_coeff(d, &c.shift(a_exponent * m as i64));
            }
        }
        poch = mul_one_minus(&poch, m as i64);
    }
    acc
}

/// `S(x, a) = sum_m a^m x^m (x;q)_m` with symbolic `a`.
pub fn series_s_symbolic(order: usize) -> TruncSeries<APoly> {
    let mut acc = TruncSeries::zero(order);
    let mut poch = TruncSeries::<QLaurent>::one(order);
    for m in 0..=order {
        for d in m..=order {
            let c = poch.coeff(d - m);
            if !c.is_zero() {
                acc.add_to_coeff(d, &APoly::monomial(c.clone(), m));
            }
        }
        poch = mul_one_minus(&poch, m as i64);
    }
    acc
}

/// `f_n = sum_k (-1)^k q^(k^2) [n-k, k]`.
pub fn f_sum(n: u32) -> QLaurent {
    (0..=n / 2).fold(QLaurent::zero(), |acc, k| {
        let t = gauss_binomial(n - k, k).shift((k * k) as i64);
        if k % 2 == 0 {
            acc + t
        } else {
            acc - t
        }
    })
}

/// Multiply an integer q-series in place by `1 / (1 - q^i)`.
pub(crate) fn div_one_minus_q_pow(s: &mut [BigInt], i: usize) {
    for d in i..s.len() {
        let prev = s[d - i].clone();
        s[d] += prev;
    }
}

/// `f_inf = sum_k (-1)^k q^(k^2) / ((1-q)(1-q^2)...(1-q^k))` to `q^M`.
pub fn f_limit_series(order: usize) -> TruncSeries<BigInt> {
    let mut acc = vec![BigInt::zero(); order + 1];
    // Running 1 / (q;q)_k.
    let mut recip = vec![BigInt::zero(); order + 1];
    recip[0] = BigInt::one();
    let mut k = 0usize;
    while k * k <= order {
        if k > 0 {
            div_one_minus_q_pow(&mut recip, k);
        }
        for d in k * k..=order {
            let t = &recip[d - k * k];
            if k % 2 == 0 {
                acc[d] += t;
            } else {
                acc[d] -= t;
            }
        }
        k += 1;
    }
    TruncSeries::new(acc, order)
}
