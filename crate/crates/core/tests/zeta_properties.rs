use harmonia::oracle::{digamma, euler_sum_direct, zeta_series, EULER_GAMMA};
use harmonia::quad::QuadSpec;
use harmonia::zeta::{
    euler_sum_even_orders, euler_sum_odd_orders, euler_sum_odd_orders_with, zeta_even,
    zeta_genfun_even, zeta_genfun_odd, zeta_odd, OddEulerForm, ZetaRepresentation,
};
use harmonia::Error;
use proptest::prelude::*;

fn spec() -> QuadSpec {
    QuadSpec::default()
}

fn z(s: u32) -> f64 {
    zeta_series(f64::from(s)).unwrap().value
}

#[test]
fn odd_zeta_in_every_representation() {
    for k in 1..=4 {
        let want = z(2 * k + 1);
        for rep in ZetaRepresentation::ALL {
            let got = zeta_odd(k, rep, &spec()).unwrap();
            assert!((got - want).abs() < 1e-9, "k={k} {rep:?}: {got} vs {want}");
        }
    }
    assert!(matches!(zeta_odd(0, ZetaRepresentation::Tan, &spec()), Err(Error::DivergentSum(_))));
}

#[test]
fn even_zeta_values() {
    assert_eq!(zeta_even(0), -0.5);
    assert!((zeta_even(1) - z(2)).abs() < 1e-12);
    assert!((zeta_even(3) - z(6)).abs() < 1e-12);
}

#[test]
fn euler_sums() {
    assert!((euler_sum_odd_orders(0, 1, &spec()).unwrap() - 2.0 * z(3)).abs() < 1e-8);
    for r in 1..=3 {
        assert!(euler_sum_even_orders(0, r, &spec()).unwrap().abs() < 1e-9, "r={r}");
    }
    let cases = [
        (euler_sum_even_orders(1, 1, &spec()).unwrap(), 2, 3),
        (euler_sum_odd_orders(1, 1, &spec()).unwrap(), 3, 2),
        (euler_sum_odd_orders(0, 2, &spec()).unwrap(), 1, 4),
        (euler_sum_even_orders(1, 2, &spec()).unwrap(), 2, 5),
        (euler_sum_odd_orders(2, 1, &spec()).unwrap(), 5, 2),
    ];
    for (got, order, power) in cases {
        let b = euler_sum_direct(order, power, 100_000).unwrap().value;
        assert!((got - b).abs() < 1e-6, "H_{order}/n^{power}: {got} vs {b}");
    }
    // sum H(n)/n^4 = 3 zeta(5) - zeta(2) zeta(3)
    let h14 = euler_sum_odd_orders(0, 2, &spec()).unwrap();
    assert!((h14 - (3.0 * z(5) - z(2) * z(3))).abs() < 1e-8);
}

#[test]
fn both_odd_euler_forms_agree_where_both_apply() {
    for (k, r) in [(1, 1), (1, 2), (2, 1)] {
        let a = euler_sum_odd_orders_with(k, r, OddEulerForm::General, &spec()).unwrap();
        let b = euler_sum_odd_orders_with(k, r, OddEulerForm::Split, &spec()).unwrap();
        assert!((a - b).abs() < 1e-9, "k={k} r={r}");
    }
}

#[test]
fn generating_functions_at_trivial_points() {
    assert!((zeta_genfun_even(0.5).unwrap() - 0.5).abs() < 1e-15);
    assert_eq!(zeta_genfun_even(0.0).unwrap(), 0.0);
    assert_eq!(zeta_genfun_odd(0.0, &spec()).unwrap(), 0.0);
    assert!(zeta_genfun_even(1.0).is_err());
    assert!(zeta_genfun_odd(-1.2, &spec()).is_err());
}

#[test]
fn generating_functions_match_series() {
    for x in [0.1f64, 0.25, 0.5, 0.75] {
        let even: f64 = (1..=200).map(|k| zeta_even(k) * x.powi(2 * k as i32)).sum();
        let odd: f64 = (1..=200u32)
            .map(|k| zeta_series(f64::from(2 * k + 1)).unwrap().value * x.powi(2 * k as i32 + 1))
            .sum();
        assert!((zeta_genfun_even(x).unwrap() - even).abs() < 1e-8, "x={x}");
        assert!((zeta_genfun_odd(x, &spec()).unwrap() - odd).abs() < 1e-8, "x={x}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn odd_genfun_matches_digamma_form(x in -0.95f64..0.95) {
        prop_assume!(x.abs() > 1e-6);
        let a = digamma(1.0 + x).unwrap().value;
        let b = digamma(1.0 - x).unwrap().value;
        let want = -x * EULER_GAMMA - 0.5 * x * (a + b);
        prop_assert!((zeta_genfun_odd(x, &spec()).unwrap() - want).abs() < 1e-7);
    }

    #[test]
    fn genfuns_have_the_right_symmetry(x in 0.001f64..0.99) {
        prop_assert!((zeta_genfun_even(x).unwrap() - zeta_genfun_even(-x).unwrap()).abs() < 1e-14);
        let s = spec();
        prop_assert!((zeta_genfun_odd(x, &s).unwrap() + zeta_genfun_odd(-x, &s).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn representations_agree(k in 1u32..=6) {
        let t = zeta_odd(k, ZetaRepresentation::Tan, &spec()).unwrap();
        for rep in [ZetaRepresentation::Cot, ZetaRepresentation::BernoulliCot] {
            prop_assert!((zeta_odd(k, rep, &spec()).unwrap() - t).abs() <= 1e-8);
        }
    }
}
