//! Adaptive Gauss-Kronrod integration on `[0, 1]`.
//!
//! The panel rule is the open 10-point Gauss / 21-point Kronrod pair, so the
//! endpoints are never sampled and a removable cot/tan singularity at `u = 0`
//! or `u = 1` needs no special casing as long as the integrand itself is
//! written in a fused form. For oscillatory integrands the initial panels
//! are the half-periods of `sin(pi * nu * u)`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::compensated::CompensatedSum;
use crate::error::{Error, Result};

/// Closest any abscissa is allowed to get to 0 or 1.
const ENDPOINT_GUARD: f64 = 1e-13;

/// Panels narrower than this are not bisected further.
const MIN_WIDTH: f64 = 1e-15;

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_041_574_565,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Gauss weights for the odd-indexed Kronrod nodes `XGK[1], XGK[3], ..., XGK[9]`.
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Regular,
    RemovableSingularity,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_panels: usize,
    /// `nu` such that the integrand oscillates like `sin(pi * nu * u)`.
    pub osc_frequency: Option<f64>,
    pub endpoints: (Endpoint, Endpoint),
}

impl Default for QuadSpec {
    fn default() -> Self {
        QuadSpec {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_panels: 4096,
            osc_frequency: None,
            endpoints: (Endpoint::Regular, Endpoint::Regular),
        }
    }
}

impl QuadSpec {
    pub fn with_oscillation(mut self, nu: f64) -> Self {
        self.osc_frequency = Some(nu);
        self
    }

    pub fn with_tolerances(mut self, rel_tol: f64, abs_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_max_panels(mut self, max_panels: usize) -> Self {
        self.max_panels = max_panels;
        self
    }

    pub fn with_endpoints(mut self, lower: Endpoint, upper: Endpoint) -> Self {
        self.endpoints = (lower, upper);
        self
    }

    /// Multiply both tolerances by `factor`.
    pub fn scaled(mut self, factor: f64) -> Self {
        self.rel_tol *= factor;
        self.abs_tol *= factor;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(Error::Domain(format!(
                "tolerances must be positive (rel {}, abs {})",
                self.rel_tol, self.abs_tol
            )));
        }
        if self.max_panels == 0 {
            return Err(Error::Domain("max_panels must be at least 1".into()));
        }
        if let Some(nu) = self.osc_frequency {
            if !(nu >= 0.0 && nu.is_finite()) {
                return Err(Error::Domain(format!("bad oscillation frequency {nu}")));
            }
        }
        Ok(())
    }

    fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub err_estimate: f64,
    pub evals: usize,
    pub converged: bool,
}

impl QuadResult {
    /// The value, or [`Error::NotConverged`] with the best estimate.
    pub fn into_value(self) -> Result<f64> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(Error::NotConverged {
                value: self.value,
                err_estimate: self.err_estimate,
            })
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn clamp_abscissa(u: f64) -> f64 {
    u.clamp(ENDPOINT_GUARD, 1.0 - ENDPOINT_GUARD)
}

fn eval_at<F: Fn(f64) -> f64>(f: &F, u: f64) -> Result<f64> {
    let u = clamp_abscissa(u);
    let v = f(u);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite {
            abscissa: u,
            value: v,
        })
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Panel> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = eval_at(f, center)?;
    let mut kronrod = WGK[10] * fc;
    let mut gauss = 0.0;
    for (i, (&x, &w)) in XGK[..10].iter().zip(&WGK[..10]).enumerate() {
        let dx = half * x;
        let pair = eval_at(f, center - dx)? + eval_at(f, center + dx)?;
        kronrod += w * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    let value = kronrod * half;
    let err = ((kronrod - gauss) * half).abs();
    Ok(Panel { a, b, value, err })
}

const EVALS_PER_PANEL: usize = 21;

fn initial_breaks(spec: &QuadSpec) -> Vec<f64> {
    let count = match spec.osc_frequency {
        Some(nu) if nu > 1.0 => nu.ceil() as usize,
        _ => 1,
    };
    if count > spec.max_panels {
        let m = spec.max_panels;
        return (0..=m).map(|j| j as f64 / m as f64).collect();
    }
    let mut breaks = vec![0.0];
    if let Some(nu) = spec.osc_frequency.filter(|&nu| nu > 1.0) {
        // zeros of sin(pi nu u); a sliver shorter than 1e-9 is merged into its neighbour
        let mut j = 1.0;
        while j / nu < 1.0 - 1e-9 {
            breaks.push(j / nu);
            j += 1.0;
        }
    }
    breaks.push(1.0);
    breaks
}

/// Integrate `f` over `(0, 1)`.
///
/// Non-convergence within `max_panels` is reported through
/// `QuadResult::converged`; a non-finite sample is a hard error.
pub fn integrate<F: Fn(f64) -> f64>(f: F, spec: &QuadSpec) -> Result<QuadResult> {
    spec.validate()?;
    let breaks = initial_breaks(spec);
    let mut heap = BinaryHeap::with_capacity(spec.max_panels.max(breaks.len()));
    let mut evals = 0;
    for w in breaks.windows(2) {
        heap.push(gauss_kronrod(&f, w[0], w[1])?);
        evals += EVALS_PER_PANEL;
    }

    let totals = |heap: &BinaryHeap<Panel>| {
        let mut panels: Vec<&Panel> = heap.iter().collect();
        panels.sort_by(|p, q| p.a.total_cmp(&q.a));
        let value = panels.iter().map(|p| p.value).collect::<CompensatedSum>().value();
        let err = panels.iter().map(|p| p.err).collect::<CompensatedSum>().value();
        (value, err)
    };

    let (mut value, mut err) = totals(&heap);
    let mut converged = err <= spec.target(value);
    while !converged && heap.len() < spec.max_panels {
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if worst.b - worst.a < MIN_WIDTH || mid <= worst.a || mid >= worst.b {
            heap.push(worst);
            break;
        }
        let left = gauss_kronrod(&f, worst.a, mid)?;
        let right = gauss_kronrod(&f, mid, worst.b)?;
        evals += 2 * EVALS_PER_PANEL;
        value += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        if err <= spec.target(value) {
            // confirm against a fresh sum to shed accumulated drift
            (value, err) = totals(&heap);
            converged = err <= spec.target(value);
        }
    }
    let (value, err_estimate) = totals(&heap);
    Ok(QuadResult {
        value,
        err_estimate,
        evals,
        converged: converged && err_estimate <= spec.target(value),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trig::{sin_pi, tan_half_pi};
    use std::f64::consts::PI;

    #[test]
    fn weights_are_normalised() {
        let k: f64 = WGK[10] + 2.0 * WGK[..10].iter().sum::<f64>();
        let g: f64 = 2.0 * WG.iter().sum::<f64>();
        assert!((k - 2.0).abs() < 1e-15);
        assert!((g - 2.0).abs() < 1e-15);
    }

    #[test]
    fn gauss_nodes_are_legendre_roots() {
        // P_10 vanishes at the Gauss nodes; evaluate via the three-term recurrence
        for i in (1..10).step_by(2) {
            let x = XGK[i];
            let (mut p0, mut p1) = (1.0, x);
            for n in 1..10 {
                let nf = n as f64;
                let p2 = ((2.0 * nf + 1.0) * x * p1 - nf * p0) / (nf + 1.0);
                p0 = p1;
                p1 = p2;
            }
            assert!(p1.abs() < 1e-14, "P10({x}) = {p1}");
        }
    }

    #[test]
    fn single_panel_polynomial_exactness() {
        // Kronrod is exact to degree 31 and Gauss to degree 19
        for d in 0..=31 {
            let p = gauss_kronrod(&|u: f64| u.powi(d), 0.0, 1.0).unwrap();
            let exact = 1.0 / (d as f64 + 1.0);
            assert!((p.value - exact).abs() < 1e-15, "degree {d}: {}", p.value);
            if d <= 19 {
                assert!(p.err < 1e-15, "degree {d}: gauss error {}", p.err);
            }
        }
    }

    #[test]
    fn linear_integrand() {
        let r = integrate(|u| u, &QuadSpec::default()).unwrap();
        assert!(r.converged);
        assert!((r.value - 0.5).abs() < 1e-12);
        assert_eq!(r.evals, 21);
    }

    #[test]
    fn half_period_panels_for_oscillation() {
        let spec = QuadSpec::default().with_oscillation(3.0);
        let r = integrate(|u| sin_pi(3.0 * (1.0 - u)) * tan_half_pi(u), &spec).unwrap();
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-9, "{}", r.value);
    }

    #[test]
    fn zeta_three_weight() {
        // (pi^3 / 12) int (u - u^3) tan(pi u / 2) du = zeta(3)
        let zeta3 = 1.202_056_903_159_594_3;
        let r = integrate(|u| (u - u * u * u) * tan_half_pi(u), &QuadSpec::default()).unwrap();
        assert!(r.converged);
        assert!((r.value - 12.0 * zeta3 / PI.powi(3)).abs() < 1e-9, "{}", r.value);
    }

    #[test]
    fn integer_frequency_sines_vanish() {
        for n in [1, 7, 50, 123, 500] {
            let nu = 2.0 * n as f64;
            let spec = QuadSpec::default().with_oscillation(nu);
            let r = integrate(|u| sin_pi(nu * u), &spec).unwrap();
            assert!(r.converged);
            assert!(r.value.abs() < 1e-10, "n={n}: {}", r.value);
        }
    }

    #[test]
    fn non_finite_samples_are_errors() {
        let err = integrate(|u| if u > 0.5 { f64::NAN } else { 1.0 }, &QuadSpec::default())
            .unwrap_err();
        match err {
            Error::NonFinite { abscissa, .. } => assert!(abscissa > 0.5),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let spec = QuadSpec::default().with_max_panels(4);
        // log singularity needs far more than four panels
        let r = integrate(|u| u.ln() * 1e3, &spec).unwrap();
        assert!(!r.converged);
        assert!(r.into_value().is_err());
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(integrate(|u| u, &QuadSpec::default().with_tolerances(0.0, 1e-12)).is_err());
        assert!(integrate(|u| u, &QuadSpec::default().with_max_panels(0)).is_err());
        assert!(integrate(|u| u, &QuadSpec::default().with_oscillation(f64::NAN)).is_err());
    }

    #[test]
    fn converged_results_meet_their_target() {
        let spec = QuadSpec::default().with_oscillation(40.0);
        let r = integrate(|u| (20.0 * PI * u).cos() / (1.0 + u * u), &spec).unwrap();
        assert!(r.converged);
        assert!(r.err_estimate <= spec.abs_tol.max(spec.rel_tol * r.value.abs()));
    }
}
