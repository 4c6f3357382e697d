use num_traits::{One, Zero};
use proptest::prelude::*;
use qsix_core::chebyshev::{
    cheb_explicit, cheb_t, cheb_u, hypergeometric_f, t_alpha, t_alpha_at, to_rational, u_alpha_at,
    ExplicitFormula,
};
use qsix_core::{AlgebraError, BigInt, BigRational, IntPoly};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn alpha() -> impl Strategy<Value = BigRational> {
    (-12i64..13, 1i64..6).prop_map(|(n, d)| rat(n, d))
}

#[test]
fn composition_multiplies_indices() {
    for n in 0..=8 {
        for m in 0..=8 {
            assert_eq!(cheb_t(n).compose(&cheb_t(m)), cheb_t(n * m), "T_{n} o T_{m}");
        }
    }
}

#[test]
fn values_at_one() {
    let one = BigInt::one();
    for n in 0..=25 {
        assert_eq!(cheb_t(n).eval(&one), one);
        assert_eq!(cheb_u(n).eval(&one), BigInt::from(n as i64 + 1));
    }
}

#[test]
fn explicit_forms_match_recurrence() {
    for n in 1..=24 {
        assert_eq!(cheb_explicit(ExplicitFormula::TFactorial, n).unwrap(), cheb_t(n));
        assert_eq!(cheb_explicit(ExplicitFormula::TPowers, n).unwrap(), cheb_t(n));
        assert_eq!(cheb_explicit(ExplicitFormula::UBinomial, n).unwrap(), cheb_u(n));
    }
    assert!(cheb_explicit(ExplicitFormula::TFactorial, 0).is_err());
}

#[test]
fn alpha_series_terminates_at_integers() {
    for n in 0..=10i64 {
        let s = t_alpha_at(&rat(n, 1), n as usize + 3);
        // Coefficients are taken about x = 1.
        let about_one = to_rational(&cheb_t(n as usize)).about_one();
        for k in 0..=n as usize {
            assert_eq!(s.coeff(k), &about_one.coeff(k), "T_{n} k = {k}");
        }
        for k in (n as usize + 1)..=(n as usize + 3) {
            assert!(s.coeff(k).is_zero());
        }
    }
}

#[test]
fn hypergeometric_pole_is_reported() {
    let a = rat(1, 1);
    let e = hypergeometric_f(&a, &a, &rat(-2, 1), 5).unwrap_err();
    assert!(matches!(e, AlgebraError::Pole(2)), "{e:?}");
}

#[test]
fn gaussian_evaluation_is_ring_map() {
    let i = qsix_core::GaussInt::i();
    for n in 0..=12 {
        let t: IntPoly = cheb_t(n);
        let direct = t.eval_gauss(&i);
        // T_n(i) has parity n: real for even n, imaginary for odd n.
        if n % 2 == 0 {
            assert!(direct.im.is_zero());
        } else {
            assert!(direct.re.is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn specialization_commutes_with_expansion(a in alpha()) {
        let symbolic = t_alpha(6);
        let direct = t_alpha_at(&a, 6);
        for k in 0..=6 {
            let v = symbolic.coeff(k).eval_var(0, &a).as_constant().unwrap();
            prop_assert_eq!(&v, direct.coeff(k));
        }
    }

    #[test]
    fn t_alpha_is_even(a in alpha()) {
        prop_assert_eq!(t_alpha_at(&a, 6), t_alpha_at(&-a.clone(), 6));
    }

    #[test]
    fn u_difference_relation(a in alpha()) {
        // U has a pole at alpha = -1.
        prop_assume!(a != rat(-1, 1) && a != rat(1, 1));
        // U_a - U_(a-2) = 2 T_a.
        let two = rat(2, 1);
        let lhs = &u_alpha_at(&a, 6).unwrap() - &u_alpha_at(&(a.clone() - two.clone()), 6).unwrap();
        prop_assert_eq!(lhs, t_alpha_at(&a, 6).scale(&two));
    }
}
