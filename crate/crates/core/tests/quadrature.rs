use std::f64::consts::PI;

use harmonia::quad::{integrate, QuadSpec};
use harmonia::trig::{sin_pi, sin_pi_reflected, tan_half_pi};
use harmonia::Error;
use proptest::prelude::*;

#[test]
fn identity_integrand() {
    let r = integrate(|u| u, &QuadSpec::default()).unwrap();
    assert!((r.value - 0.5).abs() < 1e-12);
    assert!(r.converged);
}

#[test]
fn reflected_sine_against_tangent_is_one() {
    for n in [1.0, 3.0, 17.0, 250.0] {
        let spec = QuadSpec::default().with_oscillation(n);
        let v = integrate(|u| sin_pi_reflected(n, u) * tan_half_pi(u), &spec).unwrap().into_value().unwrap();
        assert!((v - 1.0).abs() < 1e-9, "n={n}: {v}");
    }
}

#[test]
fn odd_power_difference_gives_zeta3() {
    let z3 = harmonia::oracle::zeta_series(3.0).unwrap().value;
    let v = integrate(|u| (u - u * u * u) * tan_half_pi(u), &QuadSpec::default()).unwrap().value;
    assert!((v - 12.0 * z3 / PI.powi(3)).abs() < 1e-9);
}

#[test]
fn nan_is_reported_with_its_abscissa() {
    let e = integrate(|u| if u > 0.5 { f64::NAN } else { u }, &QuadSpec::default()).unwrap_err();
    match e {
        Error::NonFinite { abscissa, .. } => assert!(abscissa > 0.5 && abscissa < 1.0),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn exhausted_budget_is_not_silent() {
    let spec = QuadSpec::default().with_max_panels(1);
    let r = integrate(|u| (1.0 / (u + 1e-4)).sin(), &spec).unwrap();
    assert!(!r.converged);
    assert!(matches!(r.into_value(), Err(Error::NotConverged { .. })));
}

#[test]
fn refinement_never_hurts_on_the_corpus() {
    // a few integrands with known values; halving rel_tol must not move
    // the answer further from the truth
    let z3 = harmonia::oracle::zeta_series(3.0).unwrap().value;
    let corpus: Vec<(Box<dyn Fn(f64) -> f64>, f64)> = vec![
        (Box::new(|u: f64| u.sqrt()), 2.0 / 3.0),
        (Box::new(|u: f64| (u - u * u * u) * tan_half_pi(u)), 12.0 * z3 / PI.powi(3)),
        (Box::new(|u: f64| sin_pi_reflected(9.0, u) * tan_half_pi(u)), 1.0),
        (Box::new(|u: f64| (-u).exp()), 1.0 - (-1.0f64).exp()),
    ];
    for (f, truth) in &corpus {
        let mut last = f64::INFINITY;
        for tol in [1e-6, 5e-7, 2.5e-7, 1.25e-7] {
            let spec = QuadSpec::default().with_tolerances(tol, tol * 1e-2);
            let err = (integrate(f, &spec).unwrap().value - truth).abs();
            assert!(err <= last.max(1e-15), "tol={tol}: {err} > {last}");
            last = err;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polynomials_are_integrated_exactly(coeffs in prop::collection::vec(-5.0f64..5.0, 1..30)) {
        let exact: f64 = coeffs.iter().enumerate().map(|(i, c)| c / (i as f64 + 1.0)).sum();
        let f = |u: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * u + c);
        let v = integrate(f, &QuadSpec::default()).unwrap().value;
        prop_assert!((v - exact).abs() < 1e-12 * (1.0 + exact.abs()));
    }

    #[test]
    fn integer_frequency_sines_vanish(n in 1u32..=500) {
        let nf = f64::from(n);
        let spec = QuadSpec::default().with_oscillation(2.0 * nf);
        let v = integrate(|u| sin_pi(2.0 * nf * u), &spec).unwrap().value;
        prop_assert!(v.abs() < 1e-10, "n={} v={}", n, v);
    }

    #[test]
    fn converged_results_respect_their_tolerance(a in 0.1f64..20.0, b in -3.0f64..3.0) {
        let spec = QuadSpec::default();
        let r = integrate(|u| (a * u).cos() + b * u * u, &spec).unwrap();
        prop_assert!(r.converged);
        prop_assert!(r.err_estimate <= spec.abs_tol.max(spec.rel_tol * r.value.abs()));
        let exact = (a).sin() / a + b / 3.0;
        prop_assert!((r.value - exact).abs() < 1e-10);
    }
}
