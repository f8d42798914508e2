//! `H_k(n)` from its integral representations.
//!
//! Every formula has the shape `1/(2 n^k) + c * int_0^1 p(u) w(u, n) du`
//! where `p` is an exact kernel polynomial and `w` is one of
//!
//! | variant   | even order                        | odd order                              |
//! |-----------|-----------------------------------|----------------------------------------|
//! | `SinPiK`  | `sin(pi n (1-u)) tan(pi u / 2)`   | `(1 - cos(pi n (1-u))) tan(pi u / 2)`  |
//! | `Sin2PiK` | `sin(2 pi n (1-u)) cot(pi u)`     | `(1 - cos(2 pi n (1-u))) cot(pi u)`    |
//! | `Cos2PiK` | `sin(2 pi n (1-u)) cot(pi u)`     | `(1 - cos(2 pi n (1-u))) cot(pi u)`    |
//!
//! with `c = pi^k / 2`, `-(2 pi)^k / 2` and `pi^k` respectively.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::exactq::{kernel_poly, KernelFamily, Parity, PolyF64, Variant};
use crate::quad::{integrate, QuadResult, QuadSpec};
use crate::trig::{cos_pi, cot_pi, sin_pi, sin_pi_reflected, tan_half_pi, versine_pi_reflected};

#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicEval {
    pub k: u32,
    pub n: f64,
    pub variant: Variant,
    pub value: f64,
    pub quad: QuadResult,
}

pub(crate) fn check_n(n: f64) -> Result<()> {
    if n > 0.0 && n.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("n must be positive and finite, got {n}")))
    }
}

fn weight(variant: Variant, parity: Parity, n: f64, u: f64) -> f64 {
    match (variant, parity) {
        (Variant::SinPiK, Parity::Even) => sin_pi_reflected(n, u) * tan_half_pi(u),
        (Variant::SinPiK, Parity::Odd) => versine_pi_reflected(n, u) * tan_half_pi(u),
        (_, Parity::Even) => sin_pi_reflected(2.0 * n, u) * cot_pi(u),
        (_, Parity::Odd) => versine_pi_reflected(2.0 * n, u) * cot_pi(u),
    }
}

fn multiplier(variant: Variant, k: u32) -> f64 {
    let e = k as i32;
    match variant {
        Variant::SinPiK => PI.powi(e) / 2.0,
        Variant::Sin2PiK => -(2.0 * PI).powi(e) / 2.0,
        Variant::Cos2PiK => PI.powi(e),
    }
}

/// `H_k(n)` via the integral formula of `variant`.
///
/// The `Sin2PiK` even-order integrand has a non-cancelled `cot(pi u)` pole
/// at `u = 0` unless `2n` is an integer; that case is rejected as divergent.
pub fn h_integral(k: u32, n: f64, variant: Variant, spec: &QuadSpec) -> Result<HarmonicEval> {
    check_n(n)?;
    if variant == Variant::Cos2PiK && k == 0 {
        return Err(Error::UnsupportedOrder { k, variant });
    }
    let parity = Parity::of(k);
    let poly = kernel_poly(KernelFamily::new(parity, variant), k / 2).to_f64();
    let at_zero = poly.eval(0.0);
    if variant != Variant::SinPiK && at_zero != 0.0 {
        let w0 = match parity {
            Parity::Even => sin_pi(2.0 * n),
            Parity::Odd => 1.0 - cos_pi(2.0 * n),
        };
        if w0 != 0.0 {
            return Err(Error::DivergentIntegral(format!(
                "{} kernel of order {k} meets cot(pi u) at u=0 with weight {w0:e} (n={n})",
                variant.name()
            )));
        }
    }
    let nu = match variant {
        Variant::SinPiK => n,
        _ => 2.0 * n,
    };
    let c = multiplier(variant, k);
    let q = integrate(
        |u| c * poly.eval(u) * weight(variant, parity, n, u),
        &spec.clone().with_oscillation(nu),
    )?;
    let value = 0.5 * n.powi(-(k as i32)) + q.into_value()?;
    Ok(HarmonicEval {
        k,
        n,
        variant,
        value,
        quad: q,
    })
}

/// `|H_0(n)|` from the `SinPiK` formula; zero at positive integers.
pub fn h_zero_check(n: u64, spec: &QuadSpec) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("h_zero_check needs n >= 1".into()));
    }
    Ok(h_integral(0, n as f64, Variant::SinPiK, spec)?.value.abs())
}

/// `pi x / sin(pi x)`, equal to 1 at `x = 0`.
fn pi_x_over_sin(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        PI * x / sin_pi(x)
    }
}

fn check_genfun_args(n: f64, x: f64) -> Result<()> {
    check_n(n)?;
    if !(x.abs() < 1.0) {
        return Err(Error::Domain(format!("generating function needs |x| < 1, got {x}")));
    }
    if x.abs() == n {
        return Err(Error::Pole {
            what: "generating function",
            at: x,
        });
    }
    Ok(())
}

/// `sum_{k>=0} H_{2k}(n) x^{2k}` in closed integral form.
pub fn genfun_even(n: f64, x: f64, spec: &QuadSpec) -> Result<f64> {
    check_genfun_args(n, x)?;
    let c = 0.5 * pi_x_over_sin(x);
    let q = integrate(
        |u| c * cos_pi(x * u) * sin_pi_reflected(n, u) * tan_half_pi(u),
        &spec.clone().with_oscillation(n),
    )?;
    Ok(n * n / (2.0 * (n * n - x * x)) - q.into_value()?)
}

/// `sum_{k>=0} H_{2k+1}(n) x^{2k+1}` in closed integral form.
pub fn genfun_odd(n: f64, x: f64, spec: &QuadSpec) -> Result<f64> {
    check_genfun_args(n, x)?;
    let c = 0.5 * pi_x_over_sin(x);
    let q = integrate(
        |u| c * sin_pi(x * u) * versine_pi_reflected(n, u) * tan_half_pi(u),
        &spec.clone().with_oscillation(n),
    )?;
    Ok(n * x / (2.0 * (n * n - x * x)) + q.into_value()?)
}

/// `int_0^1 u^{2k} sin(pi n (1-u)) tan(pi u / 2) du`, which tends to 1.
pub fn theorem3_integral(k: u32, n: f64, spec: &QuadSpec) -> Result<f64> {
    check_n(n)?;
    let p = 2 * k as i32;
    integrate(
        |u| u.powi(p) * sin_pi_reflected(n, u) * tan_half_pi(u),
        &spec.clone().with_oscillation(n),
    )?
    .into_value()
}

/// `int_0^1 u^p sin(2 pi n (1-u)) cot(pi u) du` with `p = 2k` (`Even`) or
/// `p = 2k + 1` (`Odd`); tends to -1 for `p = 0` and to -1/2 otherwise.
pub fn theorem4_integral(k: u32, n: f64, power: Parity, spec: &QuadSpec) -> Result<f64> {
    check_n(n)?;
    let p = match power {
        Parity::Even => 2 * k as i32,
        Parity::Odd => 2 * k as i32 + 1,
    };
    if p == 0 && sin_pi(2.0 * n) != 0.0 {
        return Err(Error::DivergentIntegral(format!(
            "cot(pi u) pole at u=0 is not cancelled for n={n}"
        )));
    }
    integrate(
        |u| u.powi(p) * sin_pi_reflected(2.0 * n, u) * cot_pi(u),
        &spec.clone().with_oscillation(2.0 * n),
    )?
    .into_value()
}

/// Residual of the even-order recurrence
///
/// `H_{2k} = (1/(2n^{2k})) sum_{j<=k} (-1)^j (pi n)^{2j} / (2j+1)!
///          - sum_{j<k} (-1)^{k-j} pi^{2k-2j} / (2k+1-2j)! H_{2j}
///          - (-1)^k pi^{2k} / (2 (2k)!) int u^{2k} sin(pi n (1-u)) tan(pi u / 2) du`
///
/// with every `H_{2j}` taken from [`h_integral`].
pub fn even_recurrence_residual(k: u32, n: f64, spec: &QuadSpec) -> Result<f64> {
    check_n(n)?;
    let sign = |e: u32| if e % 2 == 0 { 1.0 } else { -1.0 };
    let fact = |m: u32| (1..=m).map(f64::from).product::<f64>();
    let lhs = h_integral(2 * k, n, Variant::SinPiK, spec)?.value;
    let boundary: f64 = (0..=k)
        .map(|j| sign(j) * (PI * n).powi(2 * j as i32) / fact(2 * j + 1))
        .sum::<f64>()
        / (2.0 * n.powi(2 * k as i32));
    let mut prior = 0.0;
    for j in 0..k {
        let h = h_integral(2 * j, n, Variant::SinPiK, spec)?.value;
        prior += sign(k - j) * PI.powi(2 * (k - j) as i32) / fact(2 * k + 1 - 2 * j) * h;
    }
    let tail =
        sign(k) * PI.powi(2 * k as i32) / (2.0 * fact(2 * k)) * theorem3_integral(k, n, spec)?;
    Ok((lhs - (boundary - prior - tail)).abs())
}

/// Kernel polynomial in floating point, as used by [`h_integral`].
pub fn kernel_f64(k: u32, variant: Variant) -> PolyF64 {
    kernel_poly(KernelFamily::new(Parity::of(k), variant), k / 2).to_f64()
}
