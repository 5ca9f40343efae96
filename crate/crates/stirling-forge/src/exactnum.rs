//! Exact integer and rational arithmetic. `Integer` is arbitrary precision,
//! `Rational` is always in lowest terms with a positive denominator (the
//! backing type canonicalizes on construction).

use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

/// Shorthand for small integer constants.
pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

/// Exact rational p/q, reduced. Panics if q = 0.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(int(p), int(q))
}

/// n!
pub fn factorial(n: usize) -> Integer {
    let mut acc = Integer::one();
    for i in 2..=n {
        acc *= Integer::from(i);
    }
    acc
}

/// C(n, k) by the multiplicative formula; every intermediate division is
/// exact. Out-of-range k (negative or above n) gives 0.
pub fn binomial(n: usize, k: i64) -> Integer {
    if k < 0 || k as u128 > n as u128 {
        return Integer::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = exact_div(acc * Integer::from(n - i), &Integer::from(i + 1));
    }
    acc
}

/// Quotient of an exact division; panics if the division leaves a remainder.
pub(crate) fn exact_div(num: Integer, den: &Integer) -> Integer {
    use num_integer::Integer as _;
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "inexact division: {} by {}", q, den);
    q
}

/// Σ_{p=k}^{n} C(p, k), summed term by term. Equals C(n+1, k+1).
pub fn hockey_stick(n: usize, k: usize) -> Result<Integer> {
    if k > n {
        return Err(Error::HockeyStick { n, k });
    }
    let mut acc = Integer::zero();
    for p in k..=n {
        acc += binomial(p, k as i64);
    }
    Ok(acc)
}

/// Binomial transform b_n = Σ_k C(n, k) a_k, same length as the input.
pub fn binomial_transform(a: &[Rational]) -> Result<Vec<Rational>> {
    if a.is_empty() {
        return Err(Error::EmptySequence("binomial_transform"));
    }
    Ok((0..a.len())
        .map(|n| {
            let mut acc = Rational::zero();
            for (k, term) in a.iter().enumerate().take(n + 1) {
                acc += Rational::from(binomial(n, k as i64)) * term;
            }
            acc
        })
        .collect())
}

/// Inverse transform a_n = Σ_k C(n, k) (−1)^{n−k} b_k; undoes
/// [`binomial_transform`].
pub fn inverse_binomial_transform(b: &[Rational]) -> Result<Vec<Rational>> {
    if b.is_empty() {
        return Err(Error::EmptySequence("inverse_binomial_transform"));
    }
    Ok((0..b.len())
        .map(|n| {
            let mut acc = Rational::zero();
            for (k, term) in b.iter().enumerate().take(n + 1) {
                let signed = Rational::from(binomial(n, k as i64)) * term;
                if (n - k) % 2 == 0 {
                    acc += signed;
                } else {
                    acc -= signed;
                }
            }
            acc
        })
        .collect())
}
