use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::{PolyQ, Rational};

fn bernoulli_cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

fn factorial_cache() -> &'static Mutex<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![BigInt::one()]))
}

pub fn factorial(n: u32) -> BigInt {
    let mut table = factorial_cache().lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= n as usize {
        let next = table.last().unwrap() * BigInt::from(table.len());
        table.push(next);
    }
    table[n as usize].clone()
}

/// `1 / n!` as an exact rational.
pub fn inv_factorial(n: u32) -> Rational {
    Rational::new(BigInt::one(), factorial(n))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub(crate) fn pow2(e: i32) -> Rational {
    let two = Rational::from_integer(BigInt::from(2));
    if e >= 0 {
        Pow::pow(two, e as u32)
    } else {
        Pow::pow(two, (-e) as u32).recip()
    }
}

/// Bernoulli number `B_j` with `B_1 = -1/2`.
///
/// Built from `sum_{i=0}^{j} C(j+1, i) B_i = 0` and memoized.
pub fn bernoulli_number(j: u32) -> Rational {
    if j > 1 && j % 2 == 1 {
        return Rational::zero();
    }
    let mut table = bernoulli_cache().lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= j as usize {
        let m = table.len() as u32;
        let value = if m > 1 && m % 2 == 1 {
            Rational::zero()
        } else {
            let acc = table
                .iter()
                .enumerate()
                .fold(Rational::zero(), |acc, (i, b)| {
                    acc + b * Rational::from_integer(binomial(m + 1, i as u32))
                });
            -acc / Rational::from_integer(BigInt::from(m + 1))
        };
        table.push(value);
    }
    table[j as usize].clone()
}

/// `B_k(u) = sum_j C(k, j) B_{k-j} u^j`
pub fn bernoulli_polynomial(k: u32) -> PolyQ {
    PolyQ::new(
        (0..=k)
            .map(|j| bernoulli_number(k - j) * Rational::from_integer(binomial(k, j)))
            .collect(),
    )
}

/// `sum_{j=1}^{n} j^i` through the even/odd split of Faulhaber's formula.
///
/// The even-power form overcounts by 1/2 at `i = 0`, which is special-cased.
pub fn faulhaber_sum(i: u32, n: u64) -> Rational {
    assert!(n >= 1, "faulhaber_sum needs n >= 1");
    let nq = Rational::from_integer(BigInt::from(n));
    if i == 0 {
        return nq;
    }
    let half = i / 2;
    // even i: (2a+1-2j)! below, odd i: (2a+2-2j)!
    let top = i + 1;
    let mut total = Pow::pow(nq.clone(), i) / Rational::from_integer(BigInt::from(2));
    let fi = Rational::from_integer(factorial(i));
    for j in 0..=half {
        let b = bernoulli_number(2 * j);
        if b.is_zero() {
            continue;
        }
        let term = &fi * b * inv_factorial(2 * j) * inv_factorial(top - 2 * j)
            * Pow::pow(nq.clone(), top - 2 * j);
        total += term;
    }
    total
}

/// Rational `r` with `zeta(2k) = r * pi^(2k)`.
pub fn zeta_even_exact(k: u32) -> Rational {
    assert!(k >= 1, "zeta_even_exact needs k >= 1");
    let sign = if k % 2 == 0 { -1 } else { 1 };
    // -(-1)^k (2 pi)^{2k} B_{2k} / (2 (2k)!)
    Rational::from_integer(BigInt::from(sign))
        * pow2(2 * k as i32 - 1)
        * bernoulli_number(2 * k)
        * inv_factorial(2 * k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn first_bernoulli_numbers() {
        assert_eq!(bernoulli_number(0), q(1, 1));
        assert_eq!(bernoulli_number(1), q(-1, 2));
        assert_eq!(bernoulli_number(2), q(1, 6));
        assert_eq!(bernoulli_number(3), q(0, 1));
        assert_eq!(bernoulli_number(4), q(-1, 30));
        assert_eq!(bernoulli_number(12), q(-691, 2730));
        assert_eq!(bernoulli_number(21), q(0, 1));
    }

    #[test]
    fn bernoulli_polynomials_low_order() {
        assert_eq!(bernoulli_polynomial(0), PolyQ::from_ratios(&[(1, 1)]));
        assert_eq!(bernoulli_polynomial(1), PolyQ::from_ratios(&[(-1, 2), (1, 1)]));
        assert_eq!(
            bernoulli_polynomial(2),
            PolyQ::from_ratios(&[(1, 6), (-1, 1), (1, 1)])
        );
    }

    #[test]
    fn bernoulli_polynomial_at_zero_is_the_number() {
        for k in 0..=20 {
            assert_eq!(bernoulli_polynomial(k).eval(&q(0, 1)), bernoulli_number(k));
        }
    }

    #[test]
    fn faulhaber_small_cases() {
        assert_eq!(faulhaber_sum(2, 3), q(14, 1));
        assert_eq!(faulhaber_sum(3, 4), q(100, 1));
        assert_eq!(faulhaber_sum(0, 5), q(5, 1));
    }

    #[test]
    fn faulhaber_matches_literal_sum() {
        for i in 0..=12u32 {
            for n in 1..=50u64 {
                let literal: BigInt = (1..=n).map(|j| BigInt::from(j).pow(i)).sum();
                assert_eq!(faulhaber_sum(i, n), Rational::from_integer(literal), "i={i} n={n}");
            }
        }
    }

    #[test]
    fn even_zeta_rationals() {
        assert_eq!(zeta_even_exact(1), q(1, 6));
        assert_eq!(zeta_even_exact(2), q(1, 90));
        assert_eq!(zeta_even_exact(3), q(1, 945));
        assert_eq!(zeta_even_exact(4), q(1, 9450));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }
}
