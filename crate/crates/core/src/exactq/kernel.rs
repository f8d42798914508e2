use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bernoulli::{bernoulli_number, bernoulli_polynomial, inv_factorial, pow2};
use super::{PolyQ, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(order: u32) -> Self {
        if order % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Trigonometric identity that seeds a family of harmonic-number formulas:
/// `sin(pi k) = 0`, `sin(2 pi k) = 0` or `cos(2 pi k) = 1` for integer `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    SinPiK,
    Sin2PiK,
    Cos2PiK,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::SinPiK, Variant::Sin2PiK, Variant::Cos2PiK];

    pub fn name(self) -> &'static str {
        match self {
            Variant::SinPiK => "sin-pi-k",
            Variant::Sin2PiK => "sin-2pi-k",
            Variant::Cos2PiK => "cos-2pi-k",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "sin-pi-k" | "sinpik" | "sin" => Ok(Variant::SinPiK),
            "sin-2pi-k" | "sin2pik" | "sin2" => Ok(Variant::Sin2PiK),
            "cos-2pi-k" | "cos2pik" | "cos" => Ok(Variant::Cos2PiK),
            other => Err(Error::Domain(format!("unknown variant {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KernelFamily {
    pub parity: Parity,
    pub variant: Variant,
}

impl KernelFamily {
    pub fn new(parity: Parity, variant: Variant) -> Self {
        KernelFamily { parity, variant }
    }
}

fn signed(positive: bool) -> Rational {
    if positive {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn minus_one_pow(e: u32) -> Rational {
    signed(e % 2 == 0)
}

/// `B_{2j} (2 - 2^{2j}) / (2j)!`; `x / sin(x) = sum_j (-1)^j c_j x^{2j}`.
pub(crate) fn csc_coefficient(j: u32) -> Rational {
    bernoulli_number(2 * j) * (Rational::from_integer(BigInt::from(2)) - pow2(2 * j as i32))
        * inv_factorial(2 * j)
}

/// `sum_{j<=i} c_j c_{i-j}`; `(x / sin(x))^2 = sum_i (-1)^i d_i x^{2i}`.
pub(crate) fn csc_squared_coefficient(i: u32) -> Rational {
    (0..=i).fold(Rational::zero(), |acc, j| {
        acc + csc_coefficient(j) * csc_coefficient(i - j)
    })
}

/// Kernel polynomial multiplying the trigonometric weight inside the
/// integral formula of `H_order(n)`.
///
/// * `(Even, SinPiK | Sin2PiK)`: `p_{2k}`, the `x^{2k}` coefficient of `-x cos(xu) / sin(x)`.
/// * `(Odd, SinPiK | Sin2PiK)`: `p_{2k+1}`, the `x^{2k+1}` coefficient of `x sin(xu) / sin(x)`.
/// * `(Odd, Cos2PiK)`: the `x^{2k+1}` coefficient of `(x / sin x)^2 (cos(2ux) - 1) / (2x)`.
/// * `(Even, Cos2PiK)`: the `x^{2k}` coefficient of `(x / sin x)^2 sin(2ux) / (2x)`.
///
/// `k` is the half-order: the polynomial for `H_{2k}` or `H_{2k+1}`.
pub fn kernel_poly(family: KernelFamily, k: u32) -> PolyQ {
    match (family.parity, family.variant) {
        (Parity::Even, Variant::SinPiK | Variant::Sin2PiK) => {
            let mut coeffs = vec![Rational::zero(); 2 * k as usize + 1];
            for j in 0..=k {
                let power = 2 * (k - j);
                coeffs[power as usize] = minus_one_pow(j)
                    * csc_coefficient(j)
                    * minus_one_pow(k - j + 1)
                    * inv_factorial(power);
            }
            PolyQ::new(coeffs)
        }
        (Parity::Odd, Variant::SinPiK | Variant::Sin2PiK) => {
            let mut coeffs = vec![Rational::zero(); 2 * k as usize + 2];
            for j in 0..=k {
                let power = 2 * (k - j) + 1;
                coeffs[power as usize] =
                    minus_one_pow(k) * csc_coefficient(j) * inv_factorial(power);
            }
            PolyQ::new(coeffs)
        }
        (Parity::Odd, Variant::Cos2PiK) => {
            let half = Rational::new(BigInt::one(), BigInt::from(2));
            let mut coeffs = vec![Rational::zero(); 2 * k as usize + 3];
            for i in 0..=k {
                let power = 2 * (k - i) + 2;
                coeffs[power as usize] = &half
                    * minus_one_pow(k + 1)
                    * csc_squared_coefficient(i)
                    * pow2(power as i32)
                    * inv_factorial(power);
            }
            PolyQ::new(coeffs)
        }
        (Parity::Even, Variant::Cos2PiK) => {
            let half = Rational::new(BigInt::one(), BigInt::from(2));
            let mut coeffs = vec![Rational::zero(); 2 * k as usize + 2];
            for i in 0..=k {
                let power = 2 * (k - i) + 1;
                coeffs[power as usize] = &half
                    * minus_one_pow(k)
                    * csc_squared_coefficient(i)
                    * pow2(power as i32)
                    * inv_factorial(power);
            }
            PolyQ::new(coeffs)
        }
    }
}

/// `B_j(u) - 2^{j-1} B_j(u/2)`, the Bernoulli-polynomial form of the
/// `sin(pi k)` kernels.
pub fn halved_bernoulli_difference(order: u32) -> PolyQ {
    let b = bernoulli_polynomial(order);
    let half = b.compose_scale(&Rational::new(BigInt::one(), BigInt::from(2)));
    &b - &half.scale(&pow2(order as i32 - 1))
}

/// The `sin(pi k)` kernel rebuilt from Bernoulli polynomials:
/// `p_j(u) = ∓ 2 (-1)^{floor(j/2)} / j! * (B_j(u) - 2^{j-1} B_j(u/2))`.
pub fn kernel_from_bernoulli(order: u32) -> PolyQ {
    let half = order / 2;
    let base = halved_bernoulli_difference(order).scale(
        &(Rational::from_integer(BigInt::from(2)) * inv_factorial(order) * minus_one_pow(half)),
    );
    match Parity::of(order) {
        Parity::Even => -&base,
        Parity::Odd => base,
    }
}

/// Exact check of the vanishing identities for `1 <= k <= kmax`:
/// `p_{2k+1}(1) = 0` for the `sin(pi k)` family, and the double-convolution
/// sum `sum_i sum_j c_j c_{i-j} 2^{2k+2-2i} / (2k+2-2i)! = 0`.
pub fn kernel_vanishing_check(kmax: u32) -> bool {
    let one = Rational::one();
    let odd = KernelFamily::new(Parity::Odd, Variant::SinPiK);
    (1..=kmax).all(|k| {
        let single = kernel_poly(odd, k).eval(&one).is_zero();
        let double = (0..=k)
            .fold(Rational::zero(), |acc, i| {
                let power = 2 * (k - i) + 2;
                acc + csc_squared_coefficient(i) * pow2(power as i32) * inv_factorial(power)
            })
            .is_zero();
        single && double
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn even(v: Variant) -> KernelFamily {
        KernelFamily::new(Parity::Even, v)
    }

    fn odd(v: Variant) -> KernelFamily {
        KernelFamily::new(Parity::Odd, v)
    }

    #[test]
    fn low_order_kernels() {
        assert_eq!(
            kernel_poly(even(Variant::SinPiK), 0),
            PolyQ::from_ratios(&[(-1, 1)])
        );
        assert_eq!(
            kernel_poly(even(Variant::SinPiK), 1),
            PolyQ::from_ratios(&[(-1, 6), (0, 1), (1, 2)])
        );
        assert_eq!(
            kernel_poly(even(Variant::SinPiK), 2),
            PolyQ::from_ratios(&[(-7, 360), (0, 1), (1, 12), (0, 1), (-1, 24)])
        );
        assert_eq!(
            kernel_poly(odd(Variant::SinPiK), 0),
            PolyQ::from_ratios(&[(0, 1), (1, 1)])
        );
        assert_eq!(
            kernel_poly(odd(Variant::SinPiK), 1),
            PolyQ::from_ratios(&[(0, 1), (1, 6), (0, 1), (-1, 6)])
        );
        assert_eq!(
            kernel_poly(odd(Variant::SinPiK), 3),
            PolyQ::from_ratios(&[
                (0, 1),
                (31, 15120),
                (0, 1),
                (-7, 2160),
                (0, 1),
                (1, 720),
                (0, 1),
                (-1, 5040)
            ])
        );
    }

    #[test]
    fn cosine_family_kernels() {
        assert_eq!(
            kernel_poly(odd(Variant::Cos2PiK), 0),
            PolyQ::from_ratios(&[(0, 1), (0, 1), (-1, 1)])
        );
        assert_eq!(
            kernel_poly(odd(Variant::Cos2PiK), 1),
            PolyQ::from_ratios(&[(0, 1), (0, 1), (-1, 3), (0, 1), (1, 3)])
        );
        assert_eq!(
            kernel_poly(odd(Variant::Cos2PiK), 2),
            PolyQ::from_ratios(&[(0, 1), (0, 1), (-1, 15), (0, 1), (1, 9), (0, 1), (-2, 45)])
        );
        // H_2 = 1/(2n^2) - pi^2/6 - (2 pi^2 / 3) int u^3 ..., with the constant
        // folded in through int u sin(2 pi n (1-u)) cot(pi u) du = -1/2
        assert_eq!(
            kernel_poly(even(Variant::Cos2PiK), 1),
            PolyQ::from_ratios(&[(0, 1), (1, 3), (0, 1), (-2, 3)])
        );
    }

    #[test]
    fn sin_two_pi_shares_polynomials() {
        for k in 0..6 {
            assert_eq!(
                kernel_poly(even(Variant::SinPiK), k),
                kernel_poly(even(Variant::Sin2PiK), k)
            );
            assert_eq!(
                kernel_poly(odd(Variant::SinPiK), k),
                kernel_poly(odd(Variant::Sin2PiK), k)
            );
        }
    }

    #[test]
    fn explicit_sums_equal_bernoulli_forms() {
        for k in 0..=6 {
            assert_eq!(
                kernel_poly(even(Variant::SinPiK), k),
                kernel_from_bernoulli(2 * k),
                "even k={k}"
            );
            assert_eq!(
                kernel_poly(odd(Variant::SinPiK), k),
                kernel_from_bernoulli(2 * k + 1),
                "odd k={k}"
            );
        }
    }

    #[test]
    fn vanishing_identities() {
        assert!(kernel_vanishing_check(1));
        assert!(kernel_vanishing_check(6));
        assert!(kernel_vanishing_check(8));
        // k = 0 is outside the identity: p_1(u) = u
        let p1 = kernel_poly(odd(Variant::SinPiK), 0);
        assert_eq!(p1.eval(&Rational::one()), Rational::one());
    }

    #[test]
    fn variant_names_round_trip() {
        for v in Variant::ALL {
            assert_eq!(v.name().parse::<Variant>(), Ok(v));
        }
        assert!("tan".parse::<Variant>().is_err());
    }
}
