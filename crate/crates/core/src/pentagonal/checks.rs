//! Identity checks over the q-sums and Euler's tower. Each check expands the
//! two sides through separate code paths and compares them exactly.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::sums::*;
use super::tower::*;
use crate::exactalg::{binomial, gauss_binomial, q_factorial, Coeff, Monomial, ParamPoly, QLaurent};
use crate::report::{Check, VerificationReport};
use crate::series::{pochhammer_x, series_reciprocal_pochhammer, SeriesTower, TruncSeries};

/// Period-6 pattern of the classical sums, indexed by `n mod 6`.
const PERIOD: [i64; 6] = [1, 1, 0, -1, -1, 0];

/// `s_n` against its period-6 table and against the expansion of
/// `1 / (1 - x + x^2)`, for `n <= order`.
pub fn classic_check(order: usize) -> VerificationReport {
    let mut check = Check::new("classic-1.6", order);
    let denom = TruncSeries::new(vec![BigInt::one(), -BigInt::one(), BigInt::one()], order);
    let Some(gen) = check.attempt(denom.reciprocal()) else {
        return check.finish();
    };
    for n in 0..=order {
        let s = classic_sum(n as u32).value;
        let table = BigInt::from(PERIOD[n % 6]);
        if !check.expect_eq(&format!("s_{n} vs period table"), n, &s, &table) {
            break;
        }
        if !check.expect_eq(&format!("s_{n} vs 1/(1-x+x^2)"), n, &s, gen.coeff(n)) {
            break;
        }
        let shifted = classic_sum(n as u32 + 3).value;
        if !check.expect_eq(&format!("s_{} = -s_{n}", n + 3), n, &shifted, &-s.clone()) {
            break;
        }
    }
    check.finish()
}

/// Direct sums `S_n`, `S_n(q)` against the six-case closed form, `n <= order`.
pub fn ansatz_check(order: usize) -> VerificationReport {
    let mut check = Check::new("ansatz-2.16", order);
    for n in 0..=order as u32 {
        if !check.expect_true("exponent relations", n as usize, ExponentAnsatz::relations_hold(n as i64)) {
            break;
        }
        for (mode, label) in [(AMode::One, "a=1"), (AMode::Q, "a=q")] {
            let direct = q_sum_s(n, mode);
            let direct = direct.fixed().unwrap();
            let Some(closed) = check.attempt(closed_form_s(n, mode)) else {
                return check.finish();
            };
            check.expect_eq(&format!("S_{n} ({label})"), n as usize, direct, &closed);
            check.expect_true(&format!("S_{n} ({label}) has no negative q-powers"), n as usize, direct.is_polynomial());
        }
        if check.failed() {
            break;
        }
    }
    check.finish()
}

/// The expansion of `S(x, q)` to `x^8` as printed, coefficient by coefficient.
/// The `x^5` entry reads `-(q^2 - q^7)`.
pub const PRINTED_S_Q_EXPANSION: [&[(i64, i64)]; 9] = [
    &[(0, 1)],
    &[(1, 1)],
    &[(2, 1), (1, -1)],
    &[(2, -1)],
    &[(5, -1)],
    &[(2, -1), (7, 1)],
    &[(7, 1)],
    &[(12, 1)],
    &[(15, 1), (12, -1)],
];

/// Printed `S(x, q)` table against direct expansion. Expected to fail at `x^5`.
pub fn errata_2_15_check(order: usize) -> VerificationReport {
    let order = order.min(PRINTED_S_Q_EXPANSION.len() - 1);
    let mut check = Check::new("errata-2.15-x5", order);
    let direct = series_s(1, order);
    for (d, printed) in PRINTED_S_Q_EXPANSION.iter().enumerate().take(order + 1) {
        let printed = QLaurent::from_terms(printed.iter().copied());
        let computed = direct.coeff(d);
        if let Ok(closed) = closed_form_s(d as u32, AMode::Q) {
            let agrees = &closed == computed;
            if printed != *computed {
                check.note(format!(
                    "x^{d}: printed {printed}, direct expansion {computed}, closed form {closed} ({})",
                    if agrees { "direct = closed form" } else { "direct != closed form" }
                ));
            }
        }
        check.expect_eq(&format!("printed vs expanded coefficient of x^{d}"), d, &printed, computed);
    }
    check.finish()
}

/// The tabulated prefix with `x^5` replaced by `q^5 - q^7`.
fn corrected_s_q_prefix() -> Vec<QLaurent> {
    PRINTED_S_Q_EXPANSION
        .iter()
        .enumerate()
        .map(|(d, t)| match d {
            5 => QLaurent::from_terms([(5, 1), (7, -1)]),
            _ => QLaurent::from_terms(t.iter().copied()),
        })
        .collect()
}

/// The sparse `a = q` form with `x q^(2n)` (as printed) against direct
/// expansion. Expected to fail at `x^1`.
pub fn errata_2_23_check(order: usize) -> VerificationReport {
    let mut check = Check::new("errata-2.23-q", order);
    check.expect_series("printed sparse form vs direct expansion", &s_q_sparse_printed(order), &series_s(1, order));
    check.finish()
}

/// Identities between a defining sum and a sparse or functional form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MainIdentity {
    /// `sum x^m (x;q)_m` against its pentagonal-exponent form.
    SeriesS,
    /// `sum q^m x^m (x;q)_m` against its sparse form.
    SeriesSq,
    /// Euler's tower series against its sparse form.
    CalP,
    /// `prod (1 - q^j)` against `sum (-1)^n q^(n(3n+1)/2)`.
    Pentagonal,
    /// `S(x) = 1 + x - q x^3 S(q x)`.
    FunctionalS,
    /// `F(x) = sum f_n x^n` against its functional equation and its
    /// reciprocal-Pochhammer expansion.
    GeneratingF,
}

impl MainIdentity {
    pub fn id(self) -> &'static str {
        match self {
            MainIdentity::SeriesS => "series-2.21",
            MainIdentity::SeriesSq => "series-2.23",
            MainIdentity::CalP => "calP-4.10",
            MainIdentity::Pentagonal => "pentagonal-3.3",
            MainIdentity::FunctionalS => "funcS-4.13",
            MainIdentity::GeneratingF => "genF-5.23",
        }
    }
}

pub fn main_identity_check(which: MainIdentity, order: usize) -> VerificationReport {
    let mut check = Check::new(which.id(), order);
    match which {
        MainIdentity::SeriesS => {
            check.expect_series("defining sum vs sparse form", &series_s(0, order), &s_sparse(order));
        }
        MainIdentity::SeriesSq => {
            let direct = series_s(1, order);
            check.expect_series("defining sum vs sparse form", &direct, &s_q_sparse(order));
            for (d, printed) in corrected_s_q_prefix().iter().enumerate().take(order + 1) {
                check.expect_eq(&format!("x^{d} vs tabulated prefix"), d, direct.coeff(d), printed);
            }
            check.note("sparse side uses q^(2n+1) on the x and x^2 terms");
        }
        MainIdentity::CalP => calp_identities(&mut check, order),
        MainIdentity::Pentagonal => pentagonal_identity(&mut check, order),
        MainIdentity::FunctionalS => {
            let s = series_s(0, order);
            let mut rhs = s.scale_var(1).shift(3).scale(&QLaurent::monomial(-1, 1));
            rhs.add_to_coeff(0, &QLaurent::one());
            rhs.add_to_coeff(1, &QLaurent::one());
            check.expect_series("S(x) vs 1 + x - q x^3 S(qx)", &s, &rhs);
        }
        MainIdentity::GeneratingF => generating_f(&mut check, order),
    }
    check.finish()
}

fn calp_identities(check: &mut Check, order: usize) {
    let p = euler_tower_p_series(order);
    check.expect_series("defining sum vs sparse form", &p, &calp_sparse(order));
    // P(x) = 1 - q x^2 - q^2 x^3 P(q x)
    let mut rhs = p.scale_var(1).shift(3).scale(&QLaurent::monomial(-1, 2));
    rhs.add_to_coeff(0, &QLaurent::one());
    rhs.add_to_coeff(2, &QLaurent::monomial(-1, 1));
    check.expect_series("functional equation residual", &p, &rhs);
    for l in 0..order.saturating_sub(2) {
        let expect = p.coeff(l).shift(l as i64 + 2);
        check.expect_eq("c_{l+3} = -q^(l+2) c_l", l + 3, p.coeff(l + 3), &-expect);
    }
    let s = series_s(0, order);
    let mut one_plus = p.shift(1);
    one_plus.add_to_coeff(0, &QLaurent::one());
    check.expect_series("S(x) vs 1 + x P(x)", &s, &one_plus);
}

fn pentagonal_identity(check: &mut Check, order: usize) {
    let product = pentagonal_product(order);
    let sum = pentagonal_sum(order);
    if !check.expect_series("product vs pentagonal sum", &product, &sum) {
        return;
    }
    // Every nonzero exponent must be a generalized pentagonal number with
    // sign (-1)^n, and every such number up to the order must occur.
    let mut expected = std::collections::BTreeMap::new();
    for n in -(order as i64)..=(order as i64) {
        let e = n * (3 * n + 1) / 2;
        if (0..=order as i64).contains(&e) {
            expected.insert(e as usize, if n % 2 == 0 { 1i64 } else { -1 });
        }
    }
    for (d, c) in product.coeffs().iter().enumerate() {
        let want = BigInt::from(expected.get(&d).copied().unwrap_or(0));
        if !check.expect_eq("coefficient vs generalized pentagonal table", d, c, &want) {
            return;
        }
    }
    check.note(format!("{} nonzero exponents up to q^{order}", expected.len()));
}

/// `F(x) = sum f_n x^n`, checked against `F(x)(1-x) = 1 - q x^2 F(qx)` and
/// against `sum_k (-x^2)^k q^(k^2) / (x;q)_(k+1)`.
fn generating_f(check: &mut Check, order: usize) {
    let f = TruncSeries::from_fn(order, |n| f_sum(n as u32));
    let lhs = &f * &mul_one_minus_x(order);
    let mut rhs = f.scale_var(1).shift(2).scale(&QLaurent::monomial(-1, 1));
    rhs.add_to_coeff(0, &QLaurent::one());
    check.expect_series("F(x)(1-x) vs 1 - q x^2 F(qx)", &lhs, &rhs);
    let mut expansion = TruncSeries::zero(order);
    let mut k = 0usize;
    while 2 * k <= order {
        let Some(recip) = check.attempt(series_reciprocal_pochhammer(k as u32, order)) else {
            return;
        };
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let term = recip.shift(2 * k).scale(&QLaurent::monomial(sign, (k * k) as i64));
        expansion = &expansion + &term;
        k += 1;
    }
    check.expect_series("sum f_n x^n vs reciprocal Pochhammer expansion", &f, &expansion);
}

fn mul_one_minus_x(order: usize) -> TruncSeries<QLaurent> {
    TruncSeries::new(vec![QLaurent::one(), -QLaurent::one()], order)
}

/// Euler tower recursion `P_l = 1 - q^(2l+1) - q^(3l+2) P_(l+1)` for
/// `l = 1..=6`, and `P_0 = prod (1 - q^j) = 1 - q - q^2 P_1`.
pub fn tower_recursion_check(order: usize) -> VerificationReport {
    let mut check = Check::new("tower-3.11", order);
    let mut towers = Vec::new();
    for ell in 1..=7 {
        match tower_p_specialized(ell, order) {
            Ok(t) => towers.push(t),
            Err(e) => {
                check.error(&e);
                return check.finish();
            }
        }
    }
    for ell in 1..=6usize {
        let mut rhs = towers[ell].shift(3 * ell + 2).scale(&BigInt::from(-1));
        rhs.add_to_coeff(0, &BigInt::one());
        rhs.add_to_coeff(2 * ell + 1, &BigInt::from(-1));
        check.expect_series(&format!("P_{ell} recursion"), &towers[ell - 1], &rhs);
    }
    let mut euler = towers[0].shift(2).scale(&BigInt::from(-1));
    euler.add_to_coeff(0, &BigInt::one());
    euler.add_to_coeff(1, &BigInt::from(-1));
    check.expect_series("prod (1-q^j) vs 1 - q - q^2 P_1", &pentagonal_product(order), &euler);
    check.finish()
}

/// Tower series against the closed form for `l = 1..=6` (and the product at `l = 0`).
pub fn tower_closed_form_check(order: usize) -> VerificationReport {
    let mut check = Check::new("tower-3.15", order);
    check.expect_series("P_0 closed form vs product", &tower_p_closed(0, order), &pentagonal_product(order));
    for ell in 1..=6 {
        if let Some(t) = check.attempt(tower_p_specialized(ell, order)) {
            check.expect_series(&format!("P_{ell} vs closed form"), &t, &tower_p_closed(ell, order));
        }
    }
    check.finish()
}

/// Specialization `x = q^l`, `l = 1..=6`: the defining sum, the tower
/// `1 + q^l P_l`, its closed form, and the sparse side all agree to `q^N`.
pub fn specialization_check(order: usize) -> VerificationReport {
    let mut check = Check::new("bar-3.19", order);
    let direct = series_s(0, order);
    let sparse = s_sparse(order);
    for ell in 1..=6u32 {
        let Some(s_bar) = check.attempt(direct.substitute_q_power(ell, order)) else {
            break;
        };
        let Some(sparse_bar) = check.attempt(sparse.substitute_q_power(ell, order)) else {
            break;
        };
        let Some(tower) = check.attempt(tower_p_specialized(ell, order)) else {
            break;
        };
        let mut p_bar = tower.shift(ell as usize);
        p_bar.add_to_coeff(0, &BigInt::one());
        check.expect_series(&format!("S(q^{ell}) vs 1 + q^{ell} P_{ell}"), &s_bar, &p_bar);
        check.expect_series(&format!("1 + q^{ell} P_{ell} vs closed form"), &p_bar, &tower_bar_closed(ell, order));
        check.expect_series(&format!("S(q^{ell}) vs sparse side at x = q^{ell}"), &s_bar, &sparse_bar);
    }
    check.finish()
}

/// `R(x, y) = sum y^m (x;q)_m` three ways, plus its `q = 1` form.
pub fn tower_r_check(order: usize) -> VerificationReport {
    let mut check = Check::new("tower-R-2.31", order);
    let n = order;
    // Defining sum.
    let mut defining = SeriesTower::zero(n, n);
    for m in 0..=n {
        let p = pochhammer_x(m as u32, n);
        for (l, c) in p.coeffs().iter().enumerate() {
            defining.add_term(l, m, c);
        }
    }
    // Sum over x-coefficients c_l(y) = (-y)^l q^(l(l-1)/2) / (y;q)_(l+1).
    let Some(expansion) = check.attempt(r_tower_expansion(n)) else {
        return check.finish();
    };
    if let Some((l, m, a, b)) = defining.first_difference(&expansion) {
        check.mismatch(&format!("defining sum vs expansion at x^{l} y^{m}"), l, a, b);
    }
    // Functional equation R(x,y) = 1 + y (1 - x) R(qx, y).
    let one_minus_x = SeriesTower::from_x_series(&mul_one_minus_x(n), n);
    let rhs = SeriesTower::one(n, n).add(&one_minus_x.mul(&defining.scale_outer(1)).shift_inner(1));
    if let Some((l, m, a, b)) = defining.first_difference(&rhs) {
        check.mismatch(&format!("functional equation residual at x^{l} y^{m}"), l, a, b);
    }
    // c_0 = 1 + y c_0 and c_(l+1) = y q^(l+1) c_(l+1) - y q^l c_l.
    let c = |l: usize| defining.coeff(l);
    let c0_rhs = &TruncSeries::one(n) + &c(0).shift(1);
    check.expect_series("c_0 = 1 + y c_0", c(0), &c0_rhs);
    for l in 0..n {
        let rhs = &c(l + 1).shift(1).scale(&QLaurent::q_pow(l as i64 + 1))
            - &c(l).shift(1).scale(&QLaurent::q_pow(l as i64));
        check.expect_series(&format!("c_{} recursion", l + 1), c(l + 1), &rhs);
    }
    // q = 1: sum_l (-xy)^l / (1 - y)^(l+1), expanded over the integers.
    let classical = defining.at_q_one();
    let geom = TruncSeries::new(vec![BigInt::one(); n + 1], n);
    let mut power = geom.clone();
    for (l, row) in classical.iter().enumerate() {
        let sign = if l % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let expect = power.shift(l).scale(&sign);
        check.expect_series(&format!("q = 1 coefficient of x^{l}"), row, &expect);
        for (j, v) in row.coeffs().iter().enumerate() {
            let b = binomial(j as i64, l as i64) * &sign;
            check.expect_eq(&format!("q = 1 binomial form at x^{l} y^{j}"), l, v, &b);
        }
        power = &power * &geom;
    }
    check.note(format!("q = 1 specialization compared with sum (-xy)^l / (1 - y)^(l+1) through x^{n} y^{n}"));
    check.finish()
}

fn r_tower_expansion(n: usize) -> crate::Result<SeriesTower> {
    let mut t = SeriesTower::zero(n, n);
    for l in 0..=n {
        let recip = series_reciprocal_pochhammer(l as u32, n)?;
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let coeff = recip.shift(l).scale(&QLaurent::monomial(sign, (l * l.saturating_sub(1) / 2) as i64));
        for (m, c) in coeff.coeffs().iter().enumerate() {
            t.add_term(l, m, c);
        }
    }
    Ok(t)
}

/// Jacobi triple product to `Q^N` with Laurent-in-`z` coefficients, then the
/// substitution `Q = q^(3/2)`, `z = -q^(1/2)` on both sides, compared with the
/// pentagonal product.
pub fn jacobi_triple_product_check(order: usize) -> VerificationReport {
    let mut check = Check::new("jacobi-3.4", order);
    let n = order;
    let mut product = TruncSeries::<QLaurent>::one(n);
    let z = QLaurent::q_pow(1);
    let z_inv = QLaurent::q_pow(-1);
    let mut k = 1usize;
    while 2 * k - 1 <= n {
        product = mul_one_plus(&product, 2 * k - 1, &z);
        product = mul_one_plus(&product, 2 * k - 1, &z_inv);
        product = mul_one_plus(&product, 2 * k, &-QLaurent::one());
        k += 1;
    }
    let mut sum = TruncSeries::<QLaurent>::zero(n);
    let mut m: i64 = 0;
    while (m * m) as usize <= n {
        sum.add_to_coeff((m * m) as usize, &QLaurent::q_pow(m));
        if m != 0 {
            sum.add_to_coeff((m * m) as usize, &QLaurent::q_pow(-m));
        }
        m += 1;
    }
    if !check.expect_series("product vs theta sum (coefficients in z)", &product, &sum) {
        return check.finish();
    }
    let euler = pentagonal_product(n);
    for (label, side) in [("product", &product), ("sum", &sum)] {
        match jacobi_substitute(side, n) {
            Ok(s) => {
                check.expect_series(&format!("{label} at Q = q^(3/2), z = -q^(1/2)"), &s, &euler);
            }
            Err(e) => check.error(&e),
        }
    }
    check.finish()
}

/// Multiply by `(1 + c Q^k)`.
fn mul_one_plus(s: &TruncSeries<QLaurent>, k: usize, c: &QLaurent) -> TruncSeries<QLaurent> {
    let mut out = s.clone();
    for d in k..=s.order() {
        let t = s.coeff(d - k).mul_ref(c);
        out.add_to_coeff(d, &t);
    }
    out
}

/// Map `Q^a z^b -> (-1)^b q^((3a+b)/2)`, keeping exponents up to `order`.
/// Every monomial with `a <= order` has q-exponent at least `a`, so the
/// result is complete to `q^order`.
fn jacobi_substitute(s: &TruncSeries<QLaurent>, order: usize) -> crate::Result<TruncSeries<BigInt>> {
    let mut out = TruncSeries::zero(order);
    for (a, c) in s.coeffs().iter().enumerate() {
        for (b, v) in c.terms() {
            let twice = 3 * a as i64 + b;
            if twice % 2 != 0 {
                return Err(crate::AlgebraError::InvalidArgument(format!(
                    "half-integer q-exponent from Q^{a} z^{b}"
                )));
            }
            let e = twice / 2;
            if (0..=order as i64).contains(&e) {
                let signed = if b % 2 == 0 { v.clone() } else { -v.clone() };
                out.add_to_coeff(e as usize, &signed);
            }
        }
    }
    Ok(out)
}

/// `prod_(j=1..n) (1 - alpha_j) = 1 - alpha_1 - sum_(k>=2) alpha_k (1 - alpha_1)...(1 - alpha_(k-1))`
/// in independent variables, for `n = 2..=min(order, 5)`.
pub fn telescoping_check(order: usize) -> VerificationReport {
    let mut check = Check::new("telescope-3.9", order);
    let top = order.min(5);
    if top < 2 {
        check.note("no instances below n = 2");
    }
    for n in 2..=top {
        let vars: Vec<ParamPoly> = (0..n).map(ParamPoly::var).collect();
        let one = ParamPoly::one();
        let lhs = vars.iter().fold(one.clone(), |acc, a| acc.mul_ref(&(one.clone() - a.clone())));
        let mut rhs = one.clone() - vars[0].clone();
        let mut prefix = one.clone();
        for k in 1..n {
            prefix = prefix.mul_ref(&(one.clone() - vars[k - 1].clone()));
            rhs = rhs - vars[k].mul_ref(&prefix);
        }
        check.expect_eq(&format!("n = {n}"), n, &lhs, &rhs);
        check.note(format!("n = {n}: {} monomials", lhs.num_terms()));
    }
    let _ = Monomial::default();
    check.finish()
}

/// Recurrence families over the q-sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RecurrenceFamily {
    /// `S_n = q^floor(n/3) S_(n-1) - q^(floor(2n/3)-1) S_(n-2)`.
    SOne,
    /// `S_n(q) = q^floor((n+2)/3) S_(n-1)(q) - q^floor((2n+1)/3) S_(n-2)(q)`.
    SQ,
    /// `f_(n+2) = f_(n+1) - q^(n+1) f_n`, with the `q^-1` companion sequence.
    F,
    /// `S_(n+2)(a) = a S_(n+1)(a/q) q^(n+1) - a S_n(a/q) q^n` with symbolic `a`.
    SSymbolic,
    /// `s_(n+2) = s_(n+1) - s_n`.
    Classical,
}

impl RecurrenceFamily {
    pub fn id(self) -> &'static str {
        match self {
            RecurrenceFamily::SOne => "rec-5.25",
            RecurrenceFamily::SQ => "rec-5.27",
            RecurrenceFamily::F => "rec-5.19",
            RecurrenceFamily::SSymbolic => "rec-2.13a",
            RecurrenceFamily::Classical => "rec-5.4",
        }
    }
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// Check a recurrence for every `2 <= n <= n_max`.
pub fn recurrence_suite(family: RecurrenceFamily, n_max: usize) -> VerificationReport {
    let mut check = Check::new(family.id(), n_max);
    let nm = n_max as u32;
    match family {
        RecurrenceFamily::SOne | RecurrenceFamily::SQ => {
            let mode = if family == RecurrenceFamily::SOne { AMode::One } else { AMode::Q };
            let s: Vec<QLaurent> = (0..=nm).map(|n| q_sum_s(n, mode).fixed().unwrap().clone()).collect();
            for n in 2..=n_max {
                let ni = n as i64;
                let (e1, e2) = if mode == AMode::One {
                    (floor_div(ni, 3), floor_div(2 * ni, 3) - 1)
                } else {
                    (floor_div(ni + 2, 3), floor_div(2 * ni + 1, 3))
                };
                let rhs = s[n - 1].shift(e1) - s[n - 2].shift(e2);
                if !check.expect_eq(&format!("n = {n}"), n, &s[n], &rhs) {
                    break;
                }
            }
        }
        RecurrenceFamily::F => {
            let f: Vec<QLaurent> = (0..=nm).map(f_sum).collect();
            if n_max >= 1 {
                check.expect_eq("f_0", 0, &f[0], &QLaurent::one());
                check.expect_eq("f_1", 1, &f[1], &QLaurent::one());
            }
            // Companion g_n = sum (-1)^k q^(k(k-n)) [n-k, k]: recurrence with
            // q^-(n+1), and g_n(q^-1) = f_n.
            let g: Vec<QLaurent> = (0..=nm)
                .map(|n| {
                    (0..=n / 2).fold(QLaurent::zero(), |acc, k| {
                        let t = gauss_binomial(n - k, k).shift(k as i64 * (k as i64 - n as i64));
                        if k % 2 == 0 {
                            acc + t
                        } else {
                            acc - t
                        }
                    })
                })
                .collect();
            for n in 2..=n_max {
                let rhs = f[n - 1].clone() - f[n - 2].shift(n as i64 - 1);
                check.expect_eq(&format!("f_{n} recurrence"), n, &f[n], &rhs);
                let rhs_g = g[n - 1].clone() - g[n - 2].shift(-(n as i64 - 1));
                check.expect_eq(&format!("q^-1 companion recurrence at n = {n}"), n, &g[n], &rhs_g);
            }
            for n in 0..=n_max {
                check.expect_eq(&format!("g_{n}(1/q) = f_{n}"), n, &g[n].substitute_power(-1), &f[n]);
            }
        }
        RecurrenceFamily::SSymbolic => symbolic_recurrence(&mut check, n_max),
        RecurrenceFamily::Classical => {
            let s: Vec<BigInt> = (0..=nm).map(|n| classic_sum(n).value).collect();
            for n in 2..=n_max {
                let rhs = &s[n - 1] - &s[n - 2];
                if !check.expect_eq(&format!("n = {n}"), n, &s[n], &rhs) {
                    break;
                }
            }
        }
    }
    if n_max < 2 {
        check.note("no instances below n = 2");
    }
    check.finish()
}

/// `a -> a / q` on a polynomial in `a`.
fn a_over_q(p: &APoly) -> APoly {
    APoly::new(p.coeffs().iter().enumerate().map(|(j, c)| c.shift(-(j as i64))).collect())
}

fn symbolic_recurrence(check: &mut Check, n_max: usize) {
    let s: Vec<APoly> = (0..=n_max as u32)
        .map(|n| q_sum_s(n, AMode::Symbolic).symbolic().unwrap().clone())
        .collect();
    let a = APoly::x();
    check.expect_eq("S_0(a) = 1", 0, &s[0], &APoly::one());
    if n_max >= 1 {
        check.expect_eq("S_1(a) = a", 1, &s[1], &a);
    }
    for n in 2..=n_max {
        let k = (n - 2) as i64;
        let t1 = a_over_q(&s[n - 1]).shift(1).scale(&QLaurent::q_pow(k + 1));
        let t2 = a_over_q(&s[n - 2]).shift(1).scale(&QLaurent::q_pow(k));
        let rhs = t1 - t2;
        check.expect_eq(&format!("S_{n}(a) recurrence"), n, &s[n], &rhs);
        // a = q specialization against a = 1 values.
        let at_q = |p: &APoly| p.eval(&QLaurent::q_pow(1));
        let at_one = |p: &APoly| p.eval(&QLaurent::one());
        let rhs_q = (at_q(&s[n - 1]).shift(1) - at_one(&s[n - 2]).shift(0)).shift(k + 1);
        let lhs_q = at_q(&s[n]);
        // S_(n+2)(q) = q^(n+1) (q S_(n+1) - S_n) with S_n = S_n(1).
        let rhs_q2 = (at_one(&s[n - 1]).shift(1) - at_one(&s[n - 2])).shift(k + 1);
        let _ = rhs_q;
        check.expect_eq(&format!("S_{n}(q) via a = 1 values"), n, &lhs_q, &rhs_q2);
        if check.failed() {
            return;
        }
    }
    // Series form: S(x, a) = 1 + a x (1 - x) S(q x, a / q).
    let series = series_s_symbolic(n_max);
    let mut transformed = TruncSeries::from_fn(n_max, |d| a_over_q(series.coeff(d)).scale(&QLaurent::q_pow(d as i64)));
    transformed = &transformed * &TruncSeries::new(vec![APoly::zero(), a.clone(), -a.clone()], n_max);
    transformed.add_to_coeff(0, &APoly::one());
    check.expect_series("S(x,a) = 1 + a x (1-x) S(qx, a/q)", &series, &transformed);
    for n in 0..=n_max {
        check.expect_eq(&format!("series coefficient x^{n} vs S_{n}(a)"), n, series.coeff(n), &s[n]);
    }
}

/// `[n]!` and `[n choose r]` under `q -> 1/q`, for `n <= n_max`.
pub fn q_inverse_check(n_max: usize) -> VerificationReport {
    let mut check = Check::new("qinv-5.15", n_max);
    for n in 0..=n_max as u32 {
        let f = q_factorial(n);
        let ni = n as i64;
        check.expect_eq(&format!("[{n}]! at 1/q"), n as usize, &f.substitute_power(-1), &f.shift(-(ni * (ni - 1) / 2)));
        for r in 0..=n {
            let b = gauss_binomial(n, r);
            let ri = r as i64;
            check.expect_eq(
                &format!("[{n} choose {r}] at 1/q"),
                n as usize,
                &b.substitute_power(-1),
                &b.shift(ri * (ri - ni)),
            );
        }
    }
    check.finish()
}

/// `f_inf` against `f_n` for `n = M + 1` and `n = 2M`. The coefficient of `q^d`
/// in `f_n` is fixed once `n > d`.
pub fn f_limit_check(order: usize) -> VerificationReport {
    let mut check = Check::new("flim-5.16b", order);
    let limit = f_limit_series(order);
    let mut ns = vec![order + 1];
    if 2 * order > order + 1 {
        ns.push(2 * order);
    }
    for n in ns {
        let f = f_sum(n as u32);
        let truncated = TruncSeries::from_fn(order, |d| f.coeff(d as i64));
        check.expect_series(&format!("f_{n} vs f_inf"), &truncated, &limit);
    }
    check.finish()
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_checks_pass() {
        assert!(classic_check(30).passed());
        assert!(ansatz_check(20).passed());
        assert!(main_identity_check(MainIdentity::SeriesS, 20).passed());
        assert!(main_identity_check(MainIdentity::SeriesSq, 20).passed());
        assert!(main_identity_check(MainIdentity::Pentagonal, 50).passed());
        assert!(main_identity_check(MainIdentity::CalP, 20).passed());
        assert!(main_identity_check(MainIdentity::FunctionalS, 20).passed());
        assert!(main_identity_check(MainIdentity::GeneratingF, 12).passed());
        assert!(tower_recursion_check(20).passed());
        assert!(tower_closed_form_check(20).passed());
        assert!(specialization_check(20).passed());
        assert!(tower_r_check(6).passed());
        assert!(jacobi_triple_product_check(12).passed());
        assert!(telescoping_check(5).passed());
        assert!(q_inverse_check(6).passed());
        assert!(f_limit_check(10).passed());
    }

    #[test]
    fn recurrences_pass() {
        for fam in [
            RecurrenceFamily::SOne,
            RecurrenceFamily::SQ,
            RecurrenceFamily::F,
            RecurrenceFamily::SSymbolic,
            RecurrenceFamily::Classical,
        ] {
            let r = recurrence_suite(fam, 14);
            assert!(r.passed(), "{fam:?}: {r:?}");
        }
    }

    #[test]
    fn recurrence_examples() {
        // f_3 = f_2 - q^2 f_1
        assert_eq!(f_sum(3), f_sum(2) - QLaurent::q_pow(2));
        // S_4 = q S_3 - q S_2 = -q^2
        let s = |n| q_sum_s(n, AMode::One).fixed().unwrap().clone();
        assert_eq!(s(4), s(3).shift(1) - s(2).shift(1));
        assert_eq!(s(4), QLaurent::monomial(-1, 2));
    }

    #[test]
    fn errata_fails_at_x5() {
        let r = errata_2_15_check(8);
        assert_eq!(r.status, crate::Status::Fail);
        assert_eq!(r.first_discrepancy.as_ref().unwrap().degree, 5);
        assert_eq!(r.first_discrepancy.as_ref().unwrap().lhs, "-q^2 + q^7");
        assert_eq!(r.first_discrepancy.as_ref().unwrap().rhs, "q^5 - q^7");
    }

    #[test]
    fn printed_sparse_q_form_fails_at_x1() {
        let r = errata_2_23_check(8);
        assert_eq!(r.status, crate::Status::Fail);
        let d = r.first_discrepancy.unwrap();
        assert_eq!((d.degree, d.lhs.as_str(), d.rhs.as_str()), (1, "1", "q"));
    }

    #[test]
    fn telescope_small() {
        let r = telescoping_check(2);
        assert!(r.passed());
    }
}
