//! The named polynomial families that the second-kind triangle generates:
//! exponential polynomials φ_n, geometric polynomials ω_m, Eulerian
//! polynomials A_m, Euler polynomials E_m, and Bernoulli numbers, plus power
//! sums and the alternating binomial sums. Everything here is built from the
//! triangle itself; the generating-series routes in `series` are the
//! independent oracles.

use num_traits::{One, Zero};

use crate::exactnum::{binomial, exact_div, factorial, int, rat, Integer, Rational};
use crate::polybasis::Polynomial;
use crate::stirling::second_kind_rows;

/// φ_n(x) = Σ_k S(n, k) x^k. φ_n(1) is the n-th Bell number.
pub fn exponential_poly(n: usize) -> Polynomial {
    let rows = second_kind_rows(n);
    Polynomial::from_coeffs(rows[n].iter().map(|v| Rational::from(v.clone())).collect())
}

/// ω_m(z) = Σ_n S(m, n) n! z^n.
pub fn geometric_poly(m: usize) -> Polynomial {
    let rows = second_kind_rows(m);
    Polynomial::from_coeffs(
        rows[m]
            .iter()
            .enumerate()
            .map(|(n, v)| Rational::from(v * factorial(n)))
            .collect(),
    )
}

/// E_m(x) = Σ_k C(m, k) ω_k(−1/2) x^{m−k}. The constant term is ω_m(−1/2).
pub fn euler_poly(m: usize) -> Polynomial {
    let half_neg = rat(-1, 2);
    let mut coeffs = vec![Rational::zero(); m + 1];
    for k in 0..=m {
        let w = geometric_poly(k).eval(&half_neg);
        coeffs[m - k] = Rational::from(binomial(m, k as i64)) * w;
    }
    Polynomial::from_coeffs(coeffs)
}

/// A_m(x) = Σ_n S(m, n) n! x^n (1−x)^{m−n}; degree at most m, and
/// A_m(1) = m!.
pub fn eulerian_poly(m: usize) -> Polynomial {
    let rows = second_kind_rows(m);
    let one_minus_x = Polynomial::from_integers(&[1, -1]);
    let mut acc = Polynomial::zero();
    for (n, v) in rows[m].iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let c = Rational::from(v * factorial(n));
        acc = acc.add(&Polynomial::monomial(c, n).mul(&one_minus_x.pow(m - n)));
    }
    acc
}

/// B_0 … B_m, each as Σ_n (−1)^n n!/(n+1) S(m, n). This is the convention
/// with B_1 = −1/2.
pub fn bernoulli_numbers_upto(m: usize) -> Vec<Rational> {
    let rows = second_kind_rows(m);
    rows.iter()
        .map(|row| {
            let mut acc = Rational::zero();
            for (n, v) in row.iter().enumerate() {
                let term = Rational::new(factorial(n) * v, int(n as i64 + 1));
                if n % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect()
}

/// B_m, exact.
pub fn bernoulli_number(m: usize) -> Rational {
    bernoulli_numbers_upto(m).pop().unwrap()
}

/// 1^m + 2^m + … + n^m by the naive loop; the oracle the formula routes are
/// judged against.
pub fn power_sum_naive(m: usize, n: usize) -> Integer {
    assert!(n >= 1, "power sums need n >= 1");
    let mut acc = Integer::zero();
    for j in 1..=n {
        acc += num_traits::pow(Integer::from(j), m);
    }
    acc
}

/// 1^m + 2^m + … + (n−1)^m via the Bernoulli closed form
/// (1/(m+1)) Σ_k C(m+1, k) B_k n^{m+1−k}. The closed form itself sums from
/// j = 0 with 0^0 = 1, so the spurious j = 0 term is dropped when m = 0.
/// Integer-valued, returned as an exact Rational.
pub fn power_sum_bernoulli(m: usize, n: usize) -> Rational {
    assert!(n >= 1, "power sums need n >= 1");
    let bernoulli = bernoulli_numbers_upto(m);
    let n_rat = Rational::from(int(n as i64));
    let mut acc = Rational::zero();
    for (k, b) in bernoulli.iter().enumerate() {
        acc += Rational::from(binomial(m + 1, k as i64)) * b * num_traits::pow(n_rat.clone(), m + 1 - k);
    }
    let total = acc / Rational::from(int(m as i64 + 1));
    if m == 0 {
        total - Rational::one()
    } else {
        total
    }
}

/// 1^m + 2^m + … + n^m via Σ_k C(n+1, k+1) S(m, k) k!. Like the Bernoulli
/// route, the closed form counts j = 0 as 0^0 = 1, dropped when m = 0.
pub fn power_sum_stirling(m: usize, n: usize) -> Integer {
    assert!(n >= 1, "power sums need n >= 1");
    let rows = second_kind_rows(m);
    let mut acc = Integer::zero();
    for k in 0..=m.min(n) {
        acc += binomial(n + 1, k as i64 + 1) * &rows[m][k] * factorial(k);
    }
    if m == 0 {
        acc - Integer::one()
    } else {
        acc
    }
}

/// n^m recovered as Σ_k C(n, k) S(m, k) k!. Terms with k > min(n, m) vanish,
/// so the sum stops there.
pub fn power_via_stirling(n: usize, m: usize) -> Integer {
    let rows = second_kind_rows(m);
    let mut acc = Integer::zero();
    for k in 0..=n.min(m) {
        acc += binomial(n, k as i64) * &rows[m][k] * factorial(k);
    }
    acc
}

/// Σ_k C(n, k) (−1)^k k^m, with 0^0 = 1. Equals (−1)^n n! S(m, n): zero for
/// m < n, (−1)^n n! at m = n.
pub fn alternating_power_sum(n: usize, m: usize) -> Integer {
    let mut acc = Integer::zero();
    for k in 0..=n {
        let term = binomial(n, k as i64) * num_traits::pow(Integer::from(k), m);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Σ_k C(n, k) (−1)^k (xk + y)^m, with 0^0 = 1 when a base vanishes.
/// Equals (−1)^n n! Σ_{j=n}^{m} C(m, j) x^j y^{m−j} S(j, n).
pub fn alternating_affine_power_sum(n: usize, m: usize, x: &Rational, y: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for k in 0..=n {
        let base = x * Rational::from(int(k as i64)) + y;
        let term = Rational::from(binomial(n, k as i64)) * num_traits::pow(base, m);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Σ_k C(n, k) (−1)^k f(k) for a polynomial f. Equals
/// (−1)^n n! Σ_m c_m S(m, n) over f's coefficients: zero when deg f < n,
/// (−1)^n n! c_n when deg f = n.
pub fn alternating_poly_sum(n: usize, f: &Polynomial) -> Rational {
    let mut acc = Rational::zero();
    for k in 0..=n {
        let term = Rational::from(binomial(n, k as i64)) * f.eval(&Rational::from(int(k as i64)));
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// The m = n+1 superdiagonal case of the alternating power sum:
/// Σ_k C(n, k) (−1)^k k^{n+1}. Asserts the closed form
/// (−1)^n (n/2) (n+1)! before returning.
pub fn superdiagonal_alternating_sum(n: usize) -> Integer {
    let sum = alternating_power_sum(n, n + 1);
    let magnitude = exact_div(int(n as i64) * factorial(n + 1), &int(2));
    let expected = if n % 2 == 1 { -magnitude } else { magnitude };
    assert_eq!(sum, expected, "superdiagonal closed form failed at n={n}");
    sum
}
