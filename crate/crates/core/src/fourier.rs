//! Partial Fourier sums `C^m_K(n) = sum_{j<=n} cos(2 pi j / m) / j^K` and
//! `S^m_K(n) = sum_{j<=n} sin(2 pi j / m) / j^K`, their limits, and the
//! limit integrals behind them.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::exactq::{bernoulli_polynomial, Parity, Variant};
use crate::harmonic::{check_n, h_integral};
use crate::quad::{integrate, QuadSpec};
use crate::trig::{cos_pi, cot_pi, one_minus_u_tan_half_pi, sin_pi, xcot};
use crate::zeta::{zeta_even, zeta_odd, ZetaRepresentation};

pub use crate::oracle::Trig;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourierSpec {
    pub m: f64,
    /// The power `K` in `1 / j^K`.
    pub k: u32,
    pub trig: Trig,
    /// Number of terms; `None` is the infinite series.
    pub n: Option<u64>,
}

impl FourierSpec {
    pub fn partial(m: f64, k: u32, trig: Trig, n: u64) -> Self {
        FourierSpec {
            m,
            k,
            trig,
            n: Some(n),
        }
    }

    pub fn limit(m: f64, k: u32, trig: Trig) -> Self {
        FourierSpec {
            m,
            k,
            trig,
            n: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.m >= 1.0 && self.m.is_finite()) {
            return Err(Error::Domain(format!("m must be real and >= 1, got {}", self.m)));
        }
        if self.k == 0 {
            return Err(Error::Domain("Fourier sums need K >= 1".into()));
        }
        if self.n == Some(0) {
            return Err(Error::Domain("partial sums need n >= 1".into()));
        }
        Ok(())
    }
}

fn sign(e: u32) -> f64 {
    if e % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn fact(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Tighten the relative tolerance of an integral whose multiplier `c` is
/// large compared with the final result, which is of order one.
fn scaled_spec(spec: &QuadSpec, c: f64, nu: f64) -> QuadSpec {
    let rel = (spec.rel_tol / c.abs().max(1.0)).max(1e-15);
    QuadSpec {
        rel_tol: rel,
        ..spec.clone()
    }
    .with_oscillation(nu)
}

/// `c * int_0^1 (1-u)^p w(u) cot(pi u / m) du` with `w = sin(2 pi n u / m)`,
/// or `w = 1 - cos(2 pi n u / m)` when `versine` is set.
fn kernel_integral(
    p: u32,
    m: f64,
    n: f64,
    versine: bool,
    c: f64,
    spec: &QuadSpec,
) -> Result<f64> {
    let t = 2.0 * n / m;
    let f = |u: f64| {
        let w = if versine {
            let s = sin_pi(n * u / m);
            2.0 * s * s
        } else {
            sin_pi(t * u)
        };
        c * (1.0 - u).powi(p as i32) * w * cot_pi(u / m)
    };
    integrate(f, &scaled_spec(spec, c, t))?.into_value()
}

fn harmonic(k: u32, n: f64, spec: &QuadSpec) -> Result<f64> {
    if k == 0 {
        return Ok(0.0);
    }
    Ok(h_integral(k, n, Variant::SinPiK, spec)?.value)
}

/// `C^m_K(n)` or `S^m_K(n)` from the integral formulas, with `H_j(n)` taken
/// from [`h_integral`].
pub fn partial_sum(fs: &FourierSpec, spec: &QuadSpec) -> Result<f64> {
    fs.validate()?;
    let nn = fs
        .n
        .ok_or_else(|| Error::Domain("partial_sum needs a finite n".into()))?;
    let n = nn as f64;
    let m = fs.m;
    let a = 2.0 * PI / m;
    let x = a * n;
    let big_k = fs.k;
    let half = big_k / 2;
    let inv = 0.5 * n.powi(-(big_k as i32));
    let taylor = |odd: bool, terms: u32| -> f64 {
        (0..terms)
            .map(|j| {
                let p = if odd { 2 * j + 1 } else { 2 * j };
                sign(j) * x.powi(p as i32) / fact(p)
            })
            .sum()
    };
    match (fs.trig, Parity::of(big_k)) {
        (Trig::Cos, Parity::Even) => {
            let k = half;
            let boundary = inv * (cos_pi(2.0 * n / m) - taylor(false, k + 1));
            let mut rec = 0.0;
            for j in 0..=k {
                rec += sign(k - j) * a.powi(2 * (k - j) as i32) / fact(2 * (k - j))
                    * harmonic(2 * j, n, spec)?;
            }
            let c = sign(k) * a.powi(2 * k as i32) / (2.0 * fact(2 * k - 1));
            Ok(boundary + rec + kernel_integral(2 * k - 1, m, n, false, c, spec)?)
        }
        (Trig::Sin, Parity::Odd) => {
            let k = half;
            let boundary = inv * (sin_pi(2.0 * n / m) - taylor(true, k + 1));
            let mut rec = 0.0;
            for j in 0..=k {
                rec += sign(k - j) * a.powi((2 * k + 1 - 2 * j) as i32) / fact(2 * k + 1 - 2 * j)
                    * harmonic(2 * j, n, spec)?;
            }
            let c = sign(k) * a.powi(2 * k as i32 + 1) / (2.0 * fact(2 * k));
            Ok(boundary + rec + kernel_integral(2 * k, m, n, false, c, spec)?)
        }
        (Trig::Cos, Parity::Odd) => {
            let k = half;
            let boundary = inv * (cos_pi(2.0 * n / m) - taylor(false, k + 1));
            let mut rec = 0.0;
            for j in 0..=k {
                rec += sign(k - j) * a.powi(2 * (k - j) as i32) / fact(2 * (k - j))
                    * harmonic(2 * j + 1, n, spec)?;
            }
            let c = -sign(k) * a.powi(2 * k as i32 + 1) / (2.0 * fact(2 * k));
            Ok(boundary + rec + kernel_integral(2 * k, m, n, true, c, spec)?)
        }
        (Trig::Sin, Parity::Even) => {
            let k = half;
            let boundary = inv * (sin_pi(2.0 * n / m) - taylor(true, k));
            let mut rec = 0.0;
            for j in 0..k {
                rec -= sign(k - j) * a.powi((2 * k - 1 - 2 * j) as i32) / fact(2 * k - 1 - 2 * j)
                    * harmonic(2 * j + 1, n, spec)?;
            }
            let c = sign(k) * a.powi(2 * k as i32) / (2.0 * fact(2 * k - 1));
            Ok(boundary + rec + kernel_integral(2 * k - 1, m, n, true, c, spec)?)
        }
    }
}

/// `a - b` for `a = xcot(alpha)`, `b = xcot(beta)`, using the Laurent
/// series when both arguments are small.
fn xcot_difference(alpha: f64, beta: f64) -> f64 {
    if alpha.abs().max(beta.abs()) < 1e-2 {
        let (a2, b2) = (alpha * alpha, beta * beta);
        let d2 = (alpha - beta) * (alpha + beta);
        let d4 = d2 * (a2 + b2);
        let d6 = d2 * (a2 * a2 + a2 * b2 + b2 * b2);
        let d8 = d4 * (a2 * a2 + b2 * b2);
        -d2 / 3.0 - d4 / 45.0 - 2.0 * d6 / 945.0 - d8 / 4725.0
    } else {
        xcot(alpha) - xcot(beta)
    }
}

/// `(1-u)^p - (1-u)` without cancellation near `u = 0`.
fn power_minus_linear(p: u32, u: f64) -> f64 {
    let v = 1.0 - u;
    if p == 1 {
        0.0
    } else {
        v * ((f64::from(p) - 1.0) * (-u).ln_1p()).exp_m1()
    }
}

/// `(1-u)^p c1 cot(pi u / m) - m (1-u) c2 cot(pi u)`, the fused difference
/// appearing in the regularized limit integral (`c1 = c2 = 1`) and in
/// Theorem 2 (`c1 = cos(2 pi n u / m)`, `c2 = cos(2 pi n u)`).
fn fused_cot_difference(p: u32, m: f64, u: f64, c1: f64, c2: f64, dc: f64) -> f64 {
    let v = 1.0 - u;
    if u < 0.5 {
        // both cot terms ~ m / (pi u); combine the poles before dividing
        let (alpha, beta) = (PI * u / m, PI * u);
        let x1 = xcot(alpha);
        let bracket = power_minus_linear(p, u) * c1 * x1
            + v * (dc * x1 + c2 * xcot_difference(alpha, beta));
        m / (PI * u) * bracket
    } else {
        v.powi(p as i32) * c1 * cot_pi(u / m) - m * v * c2 * cot_pi(u)
    }
}

/// `int_0^1 (1-u)^p cot(pi u / m) - m (1-u) cot(pi u) du`, finite for
/// `p >= 1` or `m > 1`.
pub fn regularized_integral(p: u32, m: f64, spec: &QuadSpec) -> Result<f64> {
    if !(m >= 1.0 && m.is_finite()) {
        return Err(Error::Domain(format!("m must be >= 1, got {m}")));
    }
    if p == 0 && m == 1.0 {
        return Err(Error::DivergentIntegral(
            "int_0^1 cot(pi u) - (1-u) cot(pi u) du".into(),
        ));
    }
    integrate(|u| fused_cot_difference(p, m, u, 1.0, 1.0, 0.0), spec)?.into_value()
}

/// Limit of `C^m_K(n)` or `S^m_K(n)` as `n -> infinity`.
pub fn limit_closed_form(fs: &FourierSpec, spec: &QuadSpec) -> Result<f64> {
    fs.validate()?;
    if fs.n.is_some() {
        return Err(Error::Domain("limit_closed_form needs n = infinity".into()));
    }
    let m = fs.m;
    let a = 2.0 * PI / m;
    let half = fs.k / 2;
    match (fs.trig, Parity::of(fs.k)) {
        (Trig::Cos, Parity::Even) => {
            let k = half;
            let sum: f64 = (0..=k)
                .map(|j| sign(k - j) * a.powi(2 * (k - j) as i32) / fact(2 * (k - j)) * zeta_even(j))
                .sum();
            Ok(sum + sign(k) * m / (4.0 * fact(2 * k - 1)) * a.powi(2 * k as i32))
        }
        (Trig::Sin, Parity::Odd) => {
            if fs.k == 1 && m == 1.0 {
                return Err(Error::TrivialZero("S^1_1 vanishes term by term".into()));
            }
            let k = half;
            let sum: f64 = (0..=k)
                .map(|j| {
                    sign(k - j) * a.powi((2 * k + 1 - 2 * j) as i32) / fact(2 * k + 1 - 2 * j)
                        * zeta_even(j)
                })
                .sum();
            Ok(sum + sign(k) * m / (4.0 * fact(2 * k)) * a.powi(2 * k as i32 + 1))
        }
        (Trig::Cos, Parity::Odd) => {
            if fs.k == 1 && m == 1.0 {
                return Err(Error::DivergentSum("C^1_1 is the harmonic series".into()));
            }
            let k = half;
            let mut sum = 0.0;
            for j in 1..=k {
                sum += sign(k - j) * a.powi(2 * (k - j) as i32) / fact(2 * (k - j))
                    * zeta_odd(j, ZetaRepresentation::Tan, spec)?;
            }
            let log_term = sign(k) * m.ln() * a.powi(2 * k as i32) / fact(2 * k);
            let c = sign(k) * a.powi(2 * k as i32 + 1) / (2.0 * fact(2 * k));
            Ok(sum + log_term - c * regularized_integral(2 * k, m, spec)?)
        }
        (Trig::Sin, Parity::Even) => {
            let k = half;
            let mut sum = 0.0;
            for j in 1..k {
                sum -= sign(k - j) * a.powi((2 * k - 1 - 2 * j) as i32) / fact(2 * k - 1 - 2 * j)
                    * zeta_odd(j, ZetaRepresentation::Tan, spec)?;
            }
            let log_term = -sign(k) * m.ln() * a.powi(2 * k as i32 - 1) / fact(2 * k - 1);
            let c = sign(k) * a.powi(2 * k as i32) / (2.0 * fact(2 * k - 1));
            Ok(sum + log_term + c * regularized_integral(2 * k - 1, m, spec)?)
        }
    }
}

/// The classical Bernoulli-polynomial values of `sum cos(2 pi x j) / j^{2k}`
/// and `sum sin(2 pi x j) / j^{2k+1}` at `x = 1/m`; only for the (Cos, even)
/// and (Sin, odd) families.
pub fn bernoulli_fourier_value(fs: &FourierSpec) -> Result<f64> {
    fs.validate()?;
    let x = 1.0 / fs.m;
    let big_k = fs.k;
    let b = bernoulli_polynomial(big_k).to_f64().eval(x);
    let half = big_k / 2;
    let base = (2.0 * PI).powi(big_k as i32) / (2.0 * fact(big_k));
    match (fs.trig, Parity::of(big_k)) {
        (Trig::Cos, Parity::Even) => Ok(-sign(half) * base * b),
        (Trig::Sin, Parity::Odd) => Ok(-sign(half) * base * b),
        _ => Err(Error::Domain(
            "Bernoulli closed form exists only for C^m_{2k} and S^m_{2k+1}".into(),
        )),
    }
}

/// `int_0^1 (1-u)^k sin(2 pi n u / m) cot(pi u / m) du`, which tends to `m/2`
/// (or to 1 when `k = 0`, `m = 1`).
pub fn theorem1_integral(k: u32, m: f64, n: f64, spec: &QuadSpec) -> Result<f64> {
    check_n(n)?;
    if !(m >= 1.0 && m.is_finite()) {
        return Err(Error::Domain(format!("m must be >= 1, got {m}")));
    }
    if k == 0 && m == 1.0 && sin_pi(2.0 * n) != 0.0 {
        return Err(Error::DivergentIntegral(format!(
            "cot(pi u) pole at u=1 is not cancelled for n={n}"
        )));
    }
    let t = 2.0 * n / m;
    integrate(
        |u| (1.0 - u).powi(k as i32) * sin_pi(t * u) * cot_pi(u / m),
        &spec.clone().with_oscillation(t),
    )?
    .into_value()
}

/// `int_0^1 (1-u)^k cos(2 pi n u / m) cot(pi u / m) - m (1-u) cos(2 pi n u) cot(pi u) du`,
/// evaluated as one fused integrand; tends to `m log(m) / pi`.
pub fn theorem2_integral(k: u32, m: f64, n: f64, spec: &QuadSpec) -> Result<f64> {
    check_n(n)?;
    if !(m >= 1.0 && m.is_finite()) {
        return Err(Error::Domain(format!("m must be >= 1, got {m}")));
    }
    if k == 0 && m == 1.0 {
        return Err(Error::Domain("Theorem 2 excludes k = 0 with m = 1".into()));
    }
    let f = |u: f64| {
        let (ta, tb) = (2.0 * n * u / m, 2.0 * n * u);
        let (c1, c2) = (cos_pi(ta), cos_pi(tb));
        // cos A - cos B = -2 sin((A+B)/2) sin((A-B)/2)
        let dc = -2.0 * sin_pi(0.5 * (ta + tb)) * sin_pi(0.5 * (ta - tb));
        fused_cot_difference(k, m, u, c1, c2, dc)
    };
    integrate(f, &spec.clone().with_oscillation(2.0 * n))?.into_value()
}

/// `int_0^1 (u^k - u) cos(pi n (1-u)) tan(pi u / 2) du`, which tends to 0.
pub fn corollary1_integral(k: u32, n: f64, spec: &QuadSpec) -> Result<f64> {
    check_n(n)?;
    if k == 1 {
        return Ok(0.0);
    }
    // u^k - u = -(1-u) s(u) with s = u + ... + u^{k-1}, or s = -1 when k = 0
    let s = |u: f64| -> f64 {
        if k == 0 {
            -1.0
        } else {
            (1..k).map(|i| u.powi(i as i32)).sum()
        }
    };
    integrate(
        |u| -s(u) * cos_pi(n * (1.0 - u)) * one_minus_u_tan_half_pi(u),
        &spec.clone().with_oscillation(n),
    )?
    .into_value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{direct_harmonic_f64, direct_trig_sum};

    fn spec() -> QuadSpec {
        QuadSpec::default()
    }

    #[test]
    fn reduces_to_harmonic_numbers() {
        let got = partial_sum(&FourierSpec::partial(1.0, 2, Trig::Cos, 10), &spec()).unwrap();
        assert!((got - direct_harmonic_f64(2, 10)).abs() < 1e-9, "{got}");
        let got = partial_sum(&FourierSpec::partial(1.0, 3, Trig::Sin, 10), &spec()).unwrap();
        assert!(got.abs() < 1e-9, "{got}");
    }

    #[test]
    fn matches_direct_sums() {
        for &m in &[2.0, 3.0, 4.0, 6.5] {
            for k in 1..=4 {
                for trig in [Trig::Cos, Trig::Sin] {
                    for n in [1, 7, 20] {
                        let fs = FourierSpec::partial(m, k, trig, n);
                        let got = partial_sum(&fs, &spec()).unwrap();
                        let want = direct_trig_sum(m, k, n, trig);
                        assert!((got - want).abs() < 1e-8, "{fs:?}: {got} vs {want}");
                    }
                }
            }
        }
    }

    #[test]
    fn classical_limits() {
        let s41 = limit_closed_form(&FourierSpec::limit(4.0, 1, Trig::Sin), &spec()).unwrap();
        assert!((s41 - PI / 4.0).abs() < 1e-12);
        let c21 = limit_closed_form(&FourierSpec::limit(2.0, 1, Trig::Cos), &spec()).unwrap();
        assert!((c21 + 2f64.ln()).abs() < 1e-9, "{c21}");
        let s42 = limit_closed_form(&FourierSpec::limit(4.0, 2, Trig::Sin), &spec()).unwrap();
        assert!((s42 - crate::oracle::CATALAN).abs() < 1e-9, "{s42}");
    }

    #[test]
    fn excluded_limits() {
        assert!(matches!(
            limit_closed_form(&FourierSpec::limit(1.0, 1, Trig::Sin), &spec()),
            Err(Error::TrivialZero(_))
        ));
        assert!(matches!(
            limit_closed_form(&FourierSpec::limit(1.0, 1, Trig::Cos), &spec()),
            Err(Error::DivergentSum(_))
        ));
        assert!(limit_closed_form(&FourierSpec::partial(2.0, 1, Trig::Cos, 3), &spec()).is_err());
        assert!(partial_sum(&FourierSpec::limit(2.0, 1, Trig::Cos), &spec()).is_err());
        assert!(partial_sum(&FourierSpec::partial(0.5, 2, Trig::Cos, 3), &spec()).is_err());
    }

    #[test]
    fn bernoulli_forms_agree() {
        for &m in &[2.0, 3.0, 4.0] {
            for (big_k, trig) in [(2, Trig::Cos), (4, Trig::Cos), (1, Trig::Sin), (3, Trig::Sin)] {
                let fs = FourierSpec::limit(m, big_k, trig);
                let a = limit_closed_form(&fs, &spec()).unwrap();
                let b = bernoulli_fourier_value(&fs).unwrap();
                assert!((a - b).abs() < 1e-10, "m={m} K={big_k}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn fused_difference_is_smooth_near_zero() {
        for p in 0..4 {
            let a = fused_cot_difference(p, 3.0, 1e-9, 1.0, 1.0, 0.0);
            let b = fused_cot_difference(p, 3.0, 1e-6, 1.0, 1.0, 0.0);
            assert!((a - b).abs() < 1e-5, "p={p}: {a} vs {b}");
        }
    }

    #[test]
    fn theorem_integrals_near_limits() {
        assert!((theorem1_integral(0, 1.0, 100.0, &spec()).unwrap() - 1.0).abs() < 0.05);
        assert!((theorem1_integral(2, 3.0, 100.0, &spec()).unwrap() - 1.5).abs() < 0.08);
        let t2 = theorem2_integral(0, 2.0, 100.0, &spec()).unwrap();
        assert!((t2 - 2.0 * 2f64.ln() / PI).abs() < 0.05, "{t2}");
        assert!(theorem2_integral(3, 1.0, 100.0, &spec()).unwrap().abs() < 0.05);
        assert_eq!(corollary1_integral(1, 17.0, &spec()).unwrap(), 0.0);
        assert!(corollary1_integral(3, 100.0, &spec()).unwrap().abs() < 0.05);
    }
}
