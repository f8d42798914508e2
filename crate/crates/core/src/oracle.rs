//! Reference values from literal summation and classical series.
//!
//! Nothing here uses the integral formulas; these are the anchors the rest
//! of the crate is tested against.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::compensated::CompensatedSum;
use crate::error::{Error, Result};
use crate::exactq::{inv_factorial, PolyQ, Rational};
use crate::trig::{cos_pi, sin_pi};

/// Euler's constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Catalan's constant, for display; [`catalan`] recomputes it.
pub const CATALAN: f64 = 0.915_965_594_177_219;

/// Number of explicit terms used before the Euler-Maclaurin tail.
pub const DEFAULT_TERMS: u64 = 100_000;

pub fn euler_gamma() -> f64 {
    EULER_GAMMA
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: u64,
    pub tail_bound: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Trig {
    Cos,
    Sin,
}

impl Trig {
    pub fn name(self) -> &'static str {
        match self {
            Trig::Cos => "cos",
            Trig::Sin => "sin",
        }
    }
}

impl std::str::FromStr for Trig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cos" | "c" => Ok(Trig::Cos),
            "sin" | "s" => Ok(Trig::Sin),
            other => Err(Error::Domain(format!("unknown trig kind {other:?}"))),
        }
    }
}

/// `sum_{j=1}^{n} j^{-k}` exactly. For `k = 0` this counts the terms.
pub fn direct_harmonic(k: u32, n: u64) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, j| {
        acc + Rational::new(BigInt::one(), Pow::pow(BigInt::from(j), k))
    })
}

/// `sum_{j=1}^{n} j^{-k}` in floating point with compensated summation.
pub fn direct_harmonic_f64(k: u32, n: u64) -> f64 {
    (1..=n)
        .map(|j| (j as f64).powi(-(k as i32)))
        .collect::<CompensatedSum>()
        .value()
}

/// `C^m_k(n)` or `S^m_k(n)` by literal summation.
pub fn direct_trig_sum(m: f64, k: u32, n: u64, trig: Trig) -> f64 {
    (1..=n)
        .map(|j| {
            let jf = j as f64;
            let t = 2.0 * jf / m;
            let c = match trig {
                Trig::Cos => cos_pi(t),
                Trig::Sin => sin_pi(t),
            };
            c / jf.powi(k as i32)
        })
        .collect::<CompensatedSum>()
        .value()
}

/// `(x)_j = x (x+1) ... (x+j-1)`
fn rising(x: f64, j: u32) -> f64 {
    (0..j).map(|i| x + f64::from(i)).product()
}

/// `B_{2i} / (2i)!` for `i = 1..=4`.
const EM_COEFFS: [f64; 4] = [1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1_209_600.0];

/// `sum_{j >= N} j^{-s}` by Euler-Maclaurin, with a bound on the remainder.
fn zeta_tail(s: f64, big_n: f64) -> (f64, f64) {
    let mut tail = big_n.powf(1.0 - s) / (s - 1.0) + 0.5 * big_n.powf(-s);
    // -B_{2i}/(2i)! f^{(2i-1)}(N) with f^{(2i-1)}(x) = -(s)_{2i-1} x^{-s-2i+1}
    for (i, c) in EM_COEFFS[..3].iter().enumerate() {
        let order = 2 * i as u32 + 1;
        tail += c * rising(s, order) * big_n.powf(-s - f64::from(order));
    }
    let next = (EM_COEFFS[3] * rising(s, 7) * big_n.powf(-s - 7.0)).abs();
    (tail, 2.0 * next)
}

/// `zeta(s)` for real `s > 1`.
pub fn zeta_series(s: f64) -> Result<SeriesResult> {
    zeta_series_with(s, DEFAULT_TERMS)
}

pub fn zeta_series_with(s: f64, terms: u64) -> Result<SeriesResult> {
    if !(s > 1.0 && s.is_finite()) {
        return Err(Error::Domain(format!("zeta series needs s > 1, got {s}")));
    }
    let terms = terms.max(10);
    let mut acc: CompensatedSum = (1..terms).map(|j| (j as f64).powf(-s)).rev().collect();
    let (tail, bound) = zeta_tail(s, terms as f64);
    acc.add(tail);
    Ok(SeriesResult {
        value: acc.value(),
        terms_used: terms - 1,
        tail_bound: bound + 4.0 * f64::EPSILON * acc.value().abs(),
    })
}

/// `sum_{j >= 1} (1/j - 1/(j+n))`, which is `H(n)` at integers and
/// `gamma + psi(n + 1)` in general. Accepts `n > -1`.
pub fn harmonic_real(n: f64) -> Result<SeriesResult> {
    harmonic_real_with(n, DEFAULT_TERMS)
}

pub fn harmonic_real_with(n: f64, terms: u64) -> Result<SeriesResult> {
    if !(n > -1.0 && n.is_finite()) {
        return Err(Error::Domain(format!("harmonic series needs n > -1, got {n}")));
    }
    let terms = terms.max(10);
    let mut acc: CompensatedSum = (1..terms)
        .map(|j| {
            let jf = j as f64;
            n / (jf * (jf + n))
        })
        .rev()
        .collect();
    let big_n = terms as f64;
    let x = big_n + n;
    // f(t) = 1/t - 1/(t+n); f^{(2i-1)}(t) = -(2i-1)! (t^{-2i} - (t+n)^{-2i})
    let mut tail = (n / big_n).ln_1p() + 0.5 * n / (big_n * x);
    let mut fact = 1.0;
    for (i, c) in EM_COEFFS[..3].iter().enumerate() {
        let p = 2 * i as i32 + 2;
        if i > 0 {
            fact *= f64::from(p - 2) * f64::from(p - 1);
        }
        tail += c * fact * (big_n.powi(-p) - x.powi(-p));
    }
    let bound = 2.0 * (EM_COEFFS[3] * 5040.0 * (big_n.powi(-8) - x.powi(-8))).abs();
    acc.add(tail);
    Ok(SeriesResult {
        value: acc.value(),
        terms_used: terms - 1,
        tail_bound: bound + 4.0 * f64::EPSILON * acc.value().abs(),
    })
}

/// `psi(x)` for `x > 0`.
pub fn digamma(x: f64) -> Result<SeriesResult> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("digamma oracle needs x > 0, got {x}")));
    }
    let h = harmonic_real(x - 1.0)?;
    Ok(SeriesResult {
        value: h.value - EULER_GAMMA,
        ..h
    })
}

/// `G = sum_{i>=0} (-1)^i / (2i+1)^2`, with the tail replaced by half the
/// first omitted term (the error of that average is third order).
pub fn catalan_with(terms: u64) -> SeriesResult {
    let term = |i: u64| {
        let d = 2.0 * i as f64 + 1.0;
        let t = 1.0 / (d * d);
        if i % 2 == 0 {
            t
        } else {
            -t
        }
    };
    let mut acc: CompensatedSum = (0..terms).rev().map(term).collect();
    acc.add(0.5 * term(terms));
    let d = 2.0 * terms as f64 + 1.0;
    SeriesResult {
        value: acc.value(),
        terms_used: terms,
        tail_bound: 2.0 / (d * d * d),
    }
}

pub fn catalan() -> SeriesResult {
    catalan_with(1_000_000)
}

/// `sum_{n>=1} H_k(n) / n^s` for `k >= 1`, summed to `terms` with a
/// continuous tail correction.
pub fn euler_sum_direct(k: u32, s: u32, terms: u64) -> Result<SeriesResult> {
    if k == 0 {
        return Err(Error::Domain("euler_sum_direct needs k >= 1".into()));
    }
    if s < 2 {
        return Err(Error::Domain(format!("euler sum with s={s} diverges")));
    }
    let mut h = CompensatedSum::new();
    let mut acc = CompensatedSum::new();
    for j in 1..=terms {
        let jf = j as f64;
        h.add(jf.powi(-(k as i32)));
        acc.add(h.value() * jf.powi(-(s as i32)));
    }
    let big_n = terms as f64;
    let (zt, _) = zeta_tail(f64::from(s), big_n + 1.0);
    // sum_{n>N} n^{-s} (H_k(n) - H_k(N)) ~ int_N^inf x^{-s} int_N^x t^{-k} dt dx
    let (sf, kf) = (f64::from(s), f64::from(k));
    let inner = if k == 1 {
        big_n.powf(1.0 - sf) / ((sf - 1.0) * (sf - 1.0))
    } else {
        big_n.powf(2.0 - kf - sf) / ((sf - 1.0) * (sf + kf - 2.0))
    };
    let tail = h.value() * zt + inner;
    acc.add(tail);
    Ok(SeriesResult {
        value: acc.value(),
        terms_used: terms,
        tail_bound: 4.0 * tail.abs() / big_n + 1e-13,
    })
}

/// The `x^{2k}` coefficients of `-x cos(x u) / sin(x)` for `k = 0..=kmax`,
/// by long division of power series in `x` with polynomial coefficients.
pub fn even_kernel_series_division(kmax: u32) -> Vec<PolyQ> {
    let sign = |i: u32| if i % 2 == 0 { Rational::one() } else { -Rational::one() };
    // sin(x) / x = sum_i (-1)^i x^{2i} / (2i+1)!
    let den: Vec<Rational> = (0..=kmax).map(|i| sign(i) * inv_factorial(2 * i + 1)).collect();
    // -cos(x u) = sum_i -(-1)^i u^{2i} x^{2i} / (2i)!
    let num: Vec<PolyQ> = (0..=kmax)
        .map(|i| PolyQ::monomial(-sign(i) * inv_factorial(2 * i), 2 * i as usize))
        .collect();
    let mut out: Vec<PolyQ> = Vec::with_capacity(kmax as usize + 1);
    for k in 0..=kmax as usize {
        let mut g = num[k].clone();
        for j in 1..=k {
            g = &g - &out[k - j].scale(&den[j]);
        }
        out.push(g);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn literal_harmonic_values() {
        assert_eq!(direct_harmonic(1, 3), q(11, 6));
        assert_eq!(direct_harmonic(2, 2), q(5, 4));
        assert_eq!(direct_harmonic(0, 7), q(7, 1));
    }

    #[test]
    fn literal_trig_sums() {
        assert!((direct_trig_sum(2.0, 1, 2, Trig::Cos) + 0.5).abs() < 1e-15);
        assert!((direct_trig_sum(4.0, 1, 3, Trig::Sin) - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(direct_trig_sum(1.0, 2, 5, Trig::Sin), 0.0);
    }

    #[test]
    fn zeta_two_and_three() {
        let z2 = zeta_series(2.0).unwrap();
        assert!((z2.value - PI * PI / 6.0).abs() < 1e-12);
        assert!(z2.tail_bound < 1e-12);
        let z3 = zeta_series(3.0).unwrap();
        assert!((z3.value - 1.202_056_903_159_594_3).abs() < 1e-14);
        assert!(zeta_series(1.0).is_err());
    }

    #[test]
    fn harmonic_real_values() {
        let h1 = harmonic_real(1.0).unwrap();
        assert!((h1.value - 1.0).abs() < 1e-12);
        let h10 = harmonic_real(10.0).unwrap();
        assert!((h10.value - 7381.0 / 2520.0).abs() < 1e-12);
        let half = harmonic_real(0.5).unwrap();
        assert!((half.value - (2.0 - 2.0 * 2f64.ln())).abs() < 1e-12);
        assert!(harmonic_real(-1.0).is_err());
    }

    #[test]
    fn digamma_values() {
        assert!((digamma(1.0).unwrap().value + EULER_GAMMA).abs() < 1e-13);
        let psi_half = -EULER_GAMMA - 2.0 * 2f64.ln();
        assert!((digamma(0.5).unwrap().value - psi_half).abs() < 1e-12);
        assert!(digamma(0.0).is_err());
    }

    #[test]
    fn catalan_constant() {
        let g = catalan();
        assert!((g.value - CATALAN).abs() < 1e-15);
        assert!(g.tail_bound < 1e-17);
    }

    #[test]
    fn classical_euler_sums() {
        // sum H(n)/n^2 = 2 zeta(3), sum H(n)/n^3 = pi^4/72
        let z3 = 1.202_056_903_159_594_3;
        let s12 = euler_sum_direct(1, 2, 100_000).unwrap();
        assert!((s12.value - 2.0 * z3).abs() < s12.tail_bound.max(1e-9), "{:?}", s12);
        let s13 = euler_sum_direct(1, 3, 100_000).unwrap();
        assert!((s13.value - PI.powi(4) / 72.0).abs() < 1e-10);
    }
}
