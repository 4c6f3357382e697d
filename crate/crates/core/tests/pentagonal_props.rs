use proptest::prelude::*;
use qsix_core::pentagonal::{
    classic_check, classic_sum, closed_form_s, f_sum, pentagonal_product, pentagonal_sum, q_sum_s, series_s,
    tower_p_closed, tower_p_specialized, AMode, ExponentAnsatz,
};
use qsix_core::{BigInt, Status, TruncSeries};

#[test]
fn classical_sum_has_period_six() {
    let s: Vec<BigInt> = (0..=206).map(|n| classic_sum(n).value).collect();
    for n in 0..=200 {
        assert_eq!(s[n], s[n + 6], "period at n = {n}");
        assert_eq!(&s[n] + &s[n + 3], BigInt::from(0), "antiperiod at n = {n}");
    }
}

#[test]
fn series_at_q_one_is_rational_function() {
    // S(x, 1) at q = 1 collapses to sum x^m (1-x)^m = 1 / (1 - x + x^2).
    let order = 30;
    let denom = TruncSeries::new(vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)], order);
    assert_eq!(series_s(0, order).at_q_one(), denom.reciprocal().unwrap());
}

#[test]
fn finite_sums_match_closed_forms() {
    for n in 0..=24 {
        for mode in [AMode::One, AMode::Q] {
            let direct = q_sum_s(n, mode);
            assert_eq!(direct.fixed(), Some(&closed_form_s(n, mode).unwrap()), "n = {n}, {mode:?}");
        }
    }
    assert!(closed_form_s(3, AMode::Symbolic).is_err());
}

#[test]
fn exponent_ansatz_relations() {
    for n in -30..=30 {
        assert!(ExponentAnsatz::relations_hold(n), "n = {n}");
    }
}

#[test]
fn euler_pentagonal_theorem() {
    assert_eq!(pentagonal_product(120), pentagonal_sum(120));
}

#[test]
fn towers_specialize_to_closed_forms() {
    assert!(tower_p_specialized(0, 5).is_err());
    for ell in 1..=5 {
        assert_eq!(tower_p_specialized(ell, 30).unwrap(), tower_p_closed(ell, 30), "ell = {ell}");
    }
}

#[test]
fn f_sums_at_q_one_are_classical() {
    for n in 0..=30 {
        assert_eq!(f_sum(n).eval_at_one(), classic_sum(n).value, "n = {n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn truncation_is_a_prefix(big in 6usize..20, small in 0usize..6) {
        for a in [0i64, 1] {
            prop_assert_eq!(series_s(a, small), series_s(a, big).truncate(small));
        }
    }

    #[test]
    fn pass_is_monotone_in_order(order in 0usize..120) {
        prop_assert_eq!(classic_check(order).status, Status::Pass);
        prop_assert_eq!(pentagonal_product(order), pentagonal_sum(order));
    }
}
