//! Exact rational layer: Bernoulli numbers and polynomials, Faulhaber sums,
//! the kernel polynomial families and even zeta values.
//!
//! Nothing in here touches floating point except the final conversion of
//! kernel coefficients ([`PolyQ::to_f64`]) and the indicator-series checks.

mod bernoulli;
mod identity;
mod kernel;
mod poly;

/// Exact fraction with unbounded numerator and denominator, always reduced.
pub type Rational = num_rational::BigRational;

pub use bernoulli::{
    bernoulli_number, bernoulli_polynomial, binomial, factorial, faulhaber_sum, inv_factorial,
    zeta_even_exact,
};
pub use identity::{
    indicator_closed_form, indicator_divides, indicator_series, indicator_series_check,
    IndicatorSeries,
};
pub use kernel::{
    halved_bernoulli_difference, kernel_from_bernoulli, kernel_poly, kernel_vanishing_check,
    KernelFamily, Parity, Variant,
};
pub use poly::{PolyF64, PolyQ};

pub(crate) use bernoulli::pow2;
pub use poly::rational_to_f64;

/// `n / d` as a [`Rational`].
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
