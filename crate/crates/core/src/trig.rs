//! Trigonometric helpers that stay accurate at the endpoints of `[0, 1]`,
//! where the integrands pair a cot/tan pole with a vanishing factor.

use std::f64::consts::{FRAC_PI_2, PI};

/// `x - 2 round(x / 2)`, exact for |x| < 2^52.
fn reduce_two(x: f64) -> f64 {
    x - 2.0 * (x / 2.0).round()
}

/// `sin(pi x)` with exact argument reduction; zero at every integer.
pub fn sin_pi(x: f64) -> f64 {
    let mut r = reduce_two(x);
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    (PI * r).sin()
}

/// `cos(pi x)` with exact argument reduction; zero at every half-integer.
pub fn cos_pi(x: f64) -> f64 {
    let r = reduce_two(x).abs();
    let (r, sign) = if r > 0.5 { (1.0 - r, -1.0) } else { (r, 1.0) };
    let v = if r < 0.25 {
        (PI * r).cos()
    } else {
        (PI * (0.5 - r)).sin()
    };
    sign * v
}

/// `sin^2(pi x / 2) = (1 - cos(pi x)) / 2` without the cancellation.
pub fn half_versine_pi(x: f64) -> f64 {
    let s = sin_pi(0.5 * x);
    s * s
}

/// `sin(pi a (1 - u))`, expanded by angle subtraction on the lower half so
/// that small `u` is not lost in the rounding of `1 - u`.
pub fn sin_pi_reflected(a: f64, u: f64) -> f64 {
    if u < 0.5 {
        sin_pi(a) * cos_pi(a * u) - cos_pi(a) * sin_pi(a * u)
    } else {
        sin_pi(a * (1.0 - u))
    }
}

/// `1 - cos(pi a (1 - u))`, computed as `2 sin^2(pi a (1 - u) / 2)`.
pub fn versine_pi_reflected(a: f64, u: f64) -> f64 {
    let s = sin_pi_reflected(0.5 * a, u);
    2.0 * s * s
}

/// `tan(pi u / 2)`; uses `cot(pi (1 - u) / 2)` on the upper half so the pole
/// at `u = 1` is resolved from the exact `1 - u`.
pub fn tan_half_pi(u: f64) -> f64 {
    if u <= 0.5 {
        (FRAC_PI_2 * u).tan()
    } else {
        1.0 / (FRAC_PI_2 * (1.0 - u)).tan()
    }
}

/// `cot(pi t)`, reflected through `t -> 1 - t` above one half.
pub fn cot_pi(t: f64) -> f64 {
    let r = t - t.floor();
    if r <= 0.5 {
        1.0 / (PI * r).tan()
    } else {
        -1.0 / (PI * (1.0 - r)).tan()
    }
}

/// `x cot(x)`, with the Laurent expansion near zero.
pub fn xcot(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 3.0 - x2 * x2 / 45.0
    } else {
        x / x.tan()
    }
}

/// `pi t cot(pi t)` for `t` in `[0, 1)`, finite at `t = 0`.
pub fn pi_t_cot_pi_t(t: f64) -> f64 {
    if t <= 0.5 {
        xcot(PI * t)
    } else {
        PI * t * cot_pi(t)
    }
}

/// `(1 - u) tan(pi u / 2)`, finite at `u = 1` where it equals `2 / pi`.
pub fn one_minus_u_tan_half_pi(u: f64) -> f64 {
    let v = 1.0 - u;
    if v >= 0.5 {
        v * (FRAC_PI_2 * u).tan()
    } else {
        xcot(FRAC_PI_2 * v) / FRAC_PI_2
    }
}

/// `u (1 - u) cot(pi u)`, finite at both ends (`1/pi` at 0, `-1/pi` at 1).
pub fn u_one_minus_u_cot_pi(u: f64) -> f64 {
    let v = 1.0 - u;
    if u <= 0.5 {
        v * xcot(PI * u) / PI
    } else {
        -u * xcot(PI * v) / PI
    }
}
