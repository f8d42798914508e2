use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use super::bernoulli::{bernoulli_number, inv_factorial};
use super::poly::rational_to_f64;
use super::Rational;
use crate::error::{Error, Result};
use crate::trig::{cos_pi, sin_pi};

/// `1` if `k | n`, else `0`, evaluated as `(1/k) sum_{j=1}^{k} cos(2 pi n j / k)`.
pub fn indicator_divides(k: u32, n: i64) -> Result<Rational> {
    if k == 0 {
        return Err(Error::Domain("indicator needs k >= 1".into()));
    }
    let kf = f64::from(k);
    let residue = n.rem_euclid(i64::from(k)) as f64;
    // reduce n mod k first so the cosine arguments stay small
    let sum: f64 = (1..=k).map(|j| cos_pi(2.0 * residue * f64::from(j) / kf)).sum();
    let mean = sum / kf;
    let rounded = mean.round();
    debug_assert!((mean - rounded).abs() < 1e-9, "cosine sum {mean} is not an integer");
    Ok(Rational::from_integer(BigInt::from(rounded as i64)))
}

/// Which of the two Lagrange-identity series is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndicatorSeries {
    /// `sum_i (-1)^i (pi n)^{2i} sum_j B_{2j} k^{-2j} / ((2i+1-2j)! (2j)!)`
    /// against `cot(pi n / 2k) sin(pi n) / (2k)`.
    Cosine,
    /// `sum_i (-1)^i (pi n)^{2i+1} sum_j B_{2j} k^{-2j} / ((2i+2-2j)! (2j)!)`
    /// against `cot(pi n / 2k) sin^2(pi n / 2) / k`.
    Sine,
}

/// Exact inner coefficient `sum_{j<=i} B_{2j} k^{-2j} / ((2i+offset-2j)! (2j)!)`.
fn inner_coefficient(i: u32, k: u32, offset: u32) -> Rational {
    let k2 = Rational::from_integer(BigInt::from(k) * BigInt::from(k));
    (0..=i).fold(Rational::zero(), |acc, j| {
        acc + bernoulli_number(2 * j) / Pow::pow(k2.clone(), j)
            * inv_factorial(2 * i + offset - 2 * j)
            * inv_factorial(2 * j)
    })
}

/// Truncated series side of the indicator identities at real `n`.
pub fn indicator_series(which: IndicatorSeries, k: u32, n: f64, terms: u32) -> f64 {
    let x = std::f64::consts::PI * n;
    let (offset, lead) = match which {
        IndicatorSeries::Cosine => (1, 1.0),
        IndicatorSeries::Sine => (2, x),
    };
    let x2 = x * x;
    let mut power = lead;
    let mut sum = 0.0;
    for i in 0..terms {
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * power * rational_to_f64(&inner_coefficient(i, k, offset));
        power *= x2;
    }
    sum
}

/// Closed (Lagrange) side of the indicator identities.
pub fn indicator_closed_form(which: IndicatorSeries, k: u32, n: f64) -> Result<f64> {
    let t = n / (2.0 * f64::from(k));
    let s = sin_pi(t);
    if s == 0.0 || (t - t.round()).abs() < 1e-14 {
        return Err(Error::RemovableSingularity { n, k });
    }
    let cot = cos_pi(t) / s;
    let kf = f64::from(k);
    Ok(match which {
        IndicatorSeries::Cosine => cot * sin_pi(n) / (2.0 * kf),
        IndicatorSeries::Sine => {
            let h = sin_pi(n / 2.0);
            cot * h * h / kf
        }
    })
}

/// `|truncated series - closed form|` for one of the indicator identities.
pub fn indicator_series_check(which: IndicatorSeries, k: u32, n: f64, terms: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("indicator needs k >= 1".into()));
    }
    let closed = indicator_closed_form(which, k, n)?;
    Ok((indicator_series(which, k, n, terms) - closed).abs())
}
