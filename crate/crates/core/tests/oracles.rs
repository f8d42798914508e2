use harmonia::exactq::{rational_to_f64, ratio, Rational};
use harmonia::oracle::{
    catalan_with, digamma, direct_harmonic, direct_harmonic_f64, direct_trig_sum, harmonic_real,
    zeta_series, Trig, EULER_GAMMA,
};
use num_traits::FromPrimitive;
use proptest::prelude::*;

#[test]
fn direct_harmonic_examples() {
    assert_eq!(direct_harmonic(1, 3), ratio(11, 6));
    assert_eq!(direct_harmonic(2, 2), ratio(5, 4));
    // counts terms; H_0 = 0 is a convention of the integral formulas only
    assert_eq!(direct_harmonic(0, 7), Rational::from_u64(7).unwrap());
}

#[test]
fn direct_trig_examples() {
    assert!((direct_trig_sum(2.0, 1, 2, Trig::Cos) + 0.5).abs() < 1e-15);
    assert!((direct_trig_sum(4.0, 1, 3, Trig::Sin) - 2.0 / 3.0).abs() < 1e-15);
    assert!(direct_trig_sum(1.0, 2, 5, Trig::Sin).abs() < 1e-15);
}

#[test]
fn series_oracles() {
    let z2 = zeta_series(2.0).unwrap();
    assert!((z2.value - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
    assert!(z2.tail_bound <= 1e-12);
    assert!((harmonic_real(1.0).unwrap().value - 1.0).abs() < 1e-12);
    let half = harmonic_real(0.5).unwrap();
    assert!((half.value - (2.0 - 2.0 * std::f64::consts::LN_2)).abs() < 1e-10);
    assert!((digamma(1.0).unwrap().value + EULER_GAMMA).abs() < 1e-12);
    assert!(zeta_series(1.0).is_err());
    assert!(digamma(0.0).is_err());
    assert!(harmonic_real(-1.0).is_err());
}

#[test]
fn catalan_bound_is_honest() {
    let fine = catalan_with(1_000_000);
    for terms in [100, 1000, 10_000] {
        let c = catalan_with(terms);
        assert!((c.value - fine.value).abs() <= c.tail_bound + fine.tail_bound);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compensated_sum_within_n_ulps(k in 0u32..6, n in 1u64..400) {
        let exact = rational_to_f64(&direct_harmonic(k, n));
        let float = direct_harmonic_f64(k, n);
        prop_assert!((exact - float).abs() <= f64::EPSILON * exact.abs() * n as f64);
    }

    #[test]
    fn zeta_tail_bound_holds_for_shorter_sums(s in 2.0f64..9.0, terms in 50u64..2000) {
        let reference = zeta_series(s).unwrap();
        let short = harmonia::oracle::zeta_series_with(s, terms).unwrap();
        prop_assert!((short.value - reference.value).abs() <= short.tail_bound + reference.tail_bound);
    }

    #[test]
    fn harmonic_real_recurrence(n in 0.0f64..50.0) {
        // H(n+1) = H(n) + 1/(n+1)
        let a = harmonic_real(n).unwrap();
        let b = harmonic_real(n + 1.0).unwrap();
        prop_assert!((b.value - a.value - 1.0 / (n + 1.0)).abs() <= a.tail_bound + b.tail_bound + 1e-13);
    }
}
