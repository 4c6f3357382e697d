use proptest::prelude::*;
use qsix_core::exactalg::{gauss_binomial, QLaurent};
use qsix_core::series::{pochhammer_x, series_reciprocal_pochhammer};
use qsix_core::{BigInt, TruncSeries};

fn int_series(max_order: usize) -> impl Strategy<Value = TruncSeries<BigInt>> {
    (1..=max_order).prop_flat_map(|order| {
        prop::collection::vec(-5i64..6, order + 1)
            .prop_map(move |c| TruncSeries::new(c.into_iter().map(BigInt::from).collect(), order))
    })
}

fn unit_series(order: usize) -> impl Strategy<Value = TruncSeries<BigInt>> {
    (prop::sample::select(vec![-1i64, 1]), prop::collection::vec(-5i64..6, order)).prop_map(move |(c0, rest)| {
        let mut c = vec![BigInt::from(c0)];
        c.extend(rest.into_iter().map(BigInt::from));
        TruncSeries::new(c, order)
    })
}

fn no_constant(order: usize) -> impl Strategy<Value = TruncSeries<BigInt>> {
    prop::collection::vec(-3i64..4, order).prop_map(move |rest| {
        let mut c = vec![BigInt::from(0)];
        c.extend(rest.into_iter().map(BigInt::from));
        TruncSeries::new(c, order)
    })
}

proptest! {
    #[test]
    fn product_is_commutative_and_associative(a in int_series(8), b in int_series(8), c in int_series(8)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn mixed_orders_truncate(a in int_series(10), b in int_series(10)) {
        let p = &a * &b;
        prop_assert_eq!(p.order(), a.order().min(b.order()));
        let m = p.order();
        prop_assert_eq!(p, &a.truncate(m) * &b.truncate(m));
    }

    #[test]
    fn reciprocal_is_inverse(a in unit_series(9)) {
        let r = a.reciprocal().unwrap();
        prop_assert_eq!(&a * &r, TruncSeries::one(9));
    }

    #[test]
    fn composition_is_associative(a in int_series(6), b in no_constant(6), c in no_constant(6)) {
        let order = a.order();
        let (b, c) = (b.truncate(order), c.truncate(order));
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn prefix_property(a in int_series(10), b in int_series(10), k in 0usize..10) {
        let p = &a * &b;
        let k = k.min(p.order());
        prop_assert_eq!(p.truncate(k), &a.truncate(k) * &b.truncate(k));
    }
}

/// `(x;q)_m = sum_k (-1)^k q^(k(k-1)/2) [m choose k] x^k`.
#[test]
fn euler_finite_binomial_theorem() {
    for m in 0..=12u32 {
        let order = m as usize + 2;
        let p = pochhammer_x(m, order);
        let expect = TruncSeries::from_fn(order, |k| {
            let k = k as u32;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            gauss_binomial(m, k).shift((k as i64) * (k as i64 - 1) / 2) * QLaurent::constant(sign)
        });
        assert_eq!(p, expect, "m = {m}");
    }
}

/// `1/(x;q)_(l+1) = sum_k [l+k choose k] x^k`.
#[test]
fn reciprocal_pochhammer_is_q_binomial_series() {
    for ell in 0..=6u32 {
        let s = series_reciprocal_pochhammer(ell, 10).unwrap();
        for k in 0..=10u32 {
            assert_eq!(s.coeff(k as usize), &gauss_binomial(ell + k, k));
        }
    }
}
