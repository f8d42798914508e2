//! Odd zeta values, the two zeta generating functions and Euler sums.

use std::f64::consts::PI;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactq::{
    bernoulli_polynomial, halved_bernoulli_difference, inv_factorial, kernel_poly, pow2,
    zeta_even_exact, KernelFamily, Parity, PolyQ, Rational, Variant,
};
use crate::quad::{integrate, QuadSpec};
use crate::trig::{
    cos_pi, one_minus_u_tan_half_pi, pi_t_cot_pi_t, sin_pi, tan_half_pi, u_one_minus_u_cot_pi,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZetaRepresentation {
    /// `(pi^{2k+1} / 2) int p_{2k+1}(u) tan(pi u / 2) du`
    Tan,
    /// `-((2 pi)^{2k+1} / 2) int p_{2k+1}(u) cot(pi u) du`
    Cot,
    /// `-((-1)^k (2 pi)^{2k+1} / (2 (2k+1)!)) int B_{2k+1}(u) cot(pi u) du`
    BernoulliCot,
}

impl ZetaRepresentation {
    pub const ALL: [ZetaRepresentation; 3] = [
        ZetaRepresentation::Tan,
        ZetaRepresentation::Cot,
        ZetaRepresentation::BernoulliCot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ZetaRepresentation::Tan => "tan",
            ZetaRepresentation::Cot => "cot",
            ZetaRepresentation::BernoulliCot => "bernoulli-cot",
        }
    }
}

impl std::str::FromStr for ZetaRepresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "tan" => Ok(ZetaRepresentation::Tan),
            "cot" => Ok(ZetaRepresentation::Cot),
            "bernoulli-cot" | "bernoulli" | "bcot" => Ok(ZetaRepresentation::BernoulliCot),
            other => Err(Error::Domain(format!("unknown zeta representation {other:?}"))),
        }
    }
}


fn rsign(e: u32) -> Rational {
    if e % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `c * int_0^1 p(u) cot(pi u) du` for `p` vanishing at both ends.
fn cot_integral(p: &PolyQ, c: f64, spec: &QuadSpec) -> Result<f64> {
    // p = u (u - 1) r, so p cot(pi u) = -r u (1 - u) cot(pi u)
    let r = p
        .deflate(&Rational::zero())?
        .deflate(&Rational::one())?
        .to_f64();
    integrate(|u| -c * r.eval(u) * u_one_minus_u_cot_pi(u), spec)?.into_value()
}

/// `c * int_0^1 p(u) tan(pi u / 2) du` for `p` vanishing at `u = 1`.
fn tan_integral(p: &PolyQ, c: f64, spec: &QuadSpec) -> Result<f64> {
    let r = p.deflate(&Rational::one())?.to_f64();
    integrate(|u| -c * r.eval(u) * one_minus_u_tan_half_pi(u), spec)?.into_value()
}

/// `zeta(2k + 1)` for `k >= 1`.
pub fn zeta_odd(k: u32, rep: ZetaRepresentation, spec: &QuadSpec) -> Result<f64> {
    if k == 0 {
        return Err(Error::DivergentSum("zeta(1) is the harmonic series".into()));
    }
    let order = 2 * k + 1;
    let p = kernel_poly(KernelFamily::new(Parity::Odd, Variant::SinPiK), k);
    match rep {
        ZetaRepresentation::Tan => tan_integral(&p, PI.powi(order as i32) / 2.0, spec),
        ZetaRepresentation::Cot => cot_integral(&p, -(2.0 * PI).powi(order as i32) / 2.0, spec),
        ZetaRepresentation::BernoulliCot => {
            let b = bernoulli_polynomial(order).scale(&(rsign(k + 1) * inv_factorial(order)));
            cot_integral(&b, (2.0 * PI).powi(order as i32) / 2.0, spec)
        }
    }
}

/// `zeta(2k)` as a float, with `zeta(0) = -1/2`.
pub fn zeta_even(k: u32) -> f64 {
    if k == 0 {
        return -0.5;
    }
    crate::exactq::rational_to_f64(&zeta_even_exact(k)) * PI.powi(2 * k as i32)
}

fn check_unit_interval(x: f64) -> Result<()> {
    if x.abs() < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("generating function needs |x| < 1, got {x}")))
    }
}

/// `sum_{k>=1} zeta(2k) x^{2k} = 1/2 - (pi x / 2) cot(pi x)`.
pub fn zeta_genfun_even(x: f64) -> Result<f64> {
    check_unit_interval(x)?;
    Ok(0.5 - 0.5 * pi_t_cot_pi_t(x.abs()))
}

/// `sum_{k>=1} zeta(2k+1) x^{2k+1}
///  = (pi x / 2) int_0^1 (sin(pi x u) / sin(pi x) - u) tan(pi u / 2) du`.
pub fn zeta_genfun_odd(x: f64, spec: &QuadSpec) -> Result<f64> {
    check_unit_interval(x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let (s, c) = (sin_pi(x), cos_pi(x));
    let scale = PI * x / (2.0 * s);
    let f = |u: f64| {
        let v = 1.0 - u;
        if v < 0.5 {
            // sin(pi x u) - u sin(pi x), expanded around u = 1 and divided by 1 - u
            let half = sin_pi(0.5 * x * v);
            let q = s * (1.0 - 2.0 * half * half / v) - c * sin_pi(x * v) / v;
            scale * q * one_minus_u_tan_half_pi(u)
        } else {
            scale * (sin_pi(x * u) - u * s) * tan_half_pi(u)
        }
    };
    integrate(f, spec)?.into_value()
}

fn check_r(r: u32) -> Result<()> {
    if r == 0 {
        Err(Error::DivergentSum("Euler sums need r >= 1".into()))
    } else {
        Ok(())
    }
}

/// `sum_{n>=1} H_{2k}(n) / n^{2r+1}`.
pub fn euler_sum_even_orders(k: u32, r: u32, spec: &QuadSpec) -> Result<f64> {
    check_r(r)?;
    let total = 2 * k + 2 * r + 1;
    let z = zeta_odd(k + r, ZetaRepresentation::Tan, spec)?;
    let p = &halved_bernoulli_difference(2 * k) * &bernoulli_polynomial(2 * r + 1);
    let p = p.scale(&(rsign(k + r) * inv_factorial(2 * k) * inv_factorial(2 * r + 1)));
    let integral = cot_integral(&p, (2.0 * PI).powi(total as i32) / 2.0, spec)?;
    Ok(0.5 * z + integral)
}

/// Which closed form [`euler_sum_odd_orders_with`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OddEulerForm {
    /// Kernel times `zeta(2r) + (-1)^r (2 pi)^{2r} B_{2r}(u) / (2 (2r)!)`; valid for all `k`.
    General,
    /// `zeta(2k+1) zeta(2r)` split off; needs `k >= 1`.
    Split,
}

/// `sum_{n>=1} H_{2k+1}(n) / n^{2r}`, using the general form at `k = 0` and
/// the split form otherwise.
pub fn euler_sum_odd_orders(k: u32, r: u32, spec: &QuadSpec) -> Result<f64> {
    let form = if k == 0 {
        OddEulerForm::General
    } else {
        OddEulerForm::Split
    };
    euler_sum_odd_orders_with(k, r, form, spec)
}

pub fn euler_sum_odd_orders_with(
    k: u32,
    r: u32,
    form: OddEulerForm,
    spec: &QuadSpec,
) -> Result<f64> {
    check_r(r)?;
    let order = 2 * k + 1;
    let total = order + 2 * r;
    let z = zeta_odd(k + r, ZetaRepresentation::Tan, spec)?;
    let d = halved_bernoulli_difference(order);
    match form {
        OddEulerForm::General => {
            // (2 pi)^{2k+1} (zeta(2r) + ...) = 2^{2k+1} pi^{2k+1+2r} Q(u)
            let q = PolyQ::constant(zeta_even_exact(r))
                + bernoulli_polynomial(2 * r).scale(
                    &(rsign(r) * pow2(2 * r as i32 - 1) * inv_factorial(2 * r)),
                );
            let p = (&d * &q).scale(&(rsign(k) * pow2(order as i32) * inv_factorial(order)));
            let integral = cot_integral(&p, PI.powi(total as i32), spec)?;
            Ok(0.5 * z - integral)
        }
        OddEulerForm::Split => {
            if k == 0 {
                return Err(Error::Domain(
                    "the split Euler-sum form needs k >= 1 (zeta(1) appears)".into(),
                ));
            }
            let zk = zeta_odd(k, ZetaRepresentation::Tan, spec)?;
            let p = (&d * &bernoulli_polynomial(2 * r))
                .scale(&(rsign(k + r) * inv_factorial(order) * inv_factorial(2 * r)));
            let integral = cot_integral(&p, (2.0 * PI).powi(total as i32) / 2.0, spec)?;
            Ok(0.5 * z + zk * zeta_even(r) - integral)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::zeta_series;

    fn spec() -> QuadSpec {
        QuadSpec::default()
    }

    #[test]
    fn odd_zeta_representations() {
        for k in 1..=3 {
            let want = zeta_series(f64::from(2 * k + 1)).unwrap().value;
            for rep in ZetaRepresentation::ALL {
                let got = zeta_odd(k, rep, &spec()).unwrap();
                assert!((got - want).abs() < 1e-9, "k={k} {rep:?}: {got} vs {want}");
            }
        }
        assert!(zeta_odd(0, ZetaRepresentation::Tan, &spec()).is_err());
    }

    #[test]
    fn representation_names_round_trip() {
        for rep in ZetaRepresentation::ALL {
            assert_eq!(rep.name().parse::<ZetaRepresentation>(), Ok(rep));
        }
    }

    #[test]
    fn even_genfun_values() {
        assert!((zeta_genfun_even(0.5).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(zeta_genfun_even(0.0).unwrap(), 0.0);
        assert!(zeta_genfun_even(1.0).is_err());
        assert_eq!(zeta_genfun_even(0.3).unwrap(), zeta_genfun_even(-0.3).unwrap());
    }

    #[test]
    fn odd_genfun_small_x() {
        // leading term zeta(3) x^3
        let x = 1e-2;
        let got = zeta_genfun_odd(x, &spec()).unwrap();
        let z3 = 1.202_056_903_159_594_3;
        let z5 = 1.036_927_755_143_37;
        assert!((got - z3 * x.powi(3) - z5 * x.powi(5)).abs() < 1e-12, "{got}");
        assert_eq!(zeta_genfun_odd(0.0, &spec()).unwrap(), 0.0);
    }

    #[test]
    fn headline_euler_sums() {
        let z3 = 1.202_056_903_159_594_3;
        let s = euler_sum_odd_orders(0, 1, &spec()).unwrap();
        assert!((s - 2.0 * z3).abs() < 1e-9, "{s}");
        for r in 1..=3 {
            assert!(euler_sum_even_orders(0, r, &spec()).unwrap().abs() < 1e-9);
        }
        // Euler: sum H(n)/n^4 = 3 zeta(5) - zeta(2) zeta(3)
        let z5 = 1.036_927_755_143_369_9;
        let s = euler_sum_odd_orders(0, 2, &spec()).unwrap();
        assert!((s - (3.0 * z5 - PI * PI / 6.0 * z3)).abs() < 1e-9, "{s}");
    }

    #[test]
    fn odd_order_forms_agree() {
        for k in 1..=2 {
            for r in 1..=2 {
                let a = euler_sum_odd_orders_with(k, r, OddEulerForm::General, &spec()).unwrap();
                let b = euler_sum_odd_orders_with(k, r, OddEulerForm::Split, &spec()).unwrap();
                assert!((a - b).abs() < 1e-9, "k={k} r={r}: {a} vs {b}");
            }
        }
        assert!(euler_sum_odd_orders_with(0, 1, OddEulerForm::Split, &spec()).is_err());
    }
}
