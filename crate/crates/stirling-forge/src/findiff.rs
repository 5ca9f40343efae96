//! Forward differences of polynomials. Δ acts like a derivative on the
//! falling factorial basis (ΔP_k = k P_{k−1}), which is what makes Newton's
//! forward-difference expansion work.

use num_traits::Zero;

use crate::exactnum::{binomial, factorial, Rational};
use crate::polybasis::{FallingFactorialExpansion, Polynomial};

/// Δf(z) = f(z+1) − f(z).
pub fn delta(f: &Polynomial) -> Polynomial {
    let shift = Polynomial::from_integers(&[1, 1]);
    f.compose(&shift).sub(f)
}

/// Δ^n f(0) as the closed binomial sum Σ_k C(n, k) (−1)^{n−k} f(k).
/// Applying [`delta`] n times and evaluating at 0 must give the same value.
pub fn iterated_delta_at_zero(f: &Polynomial, n: usize) -> Rational {
    let mut acc = Rational::zero();
    for k in 0..=n {
        let term = Rational::from(binomial(n, k as i64)) * f.eval(&Rational::from(crate::exactnum::int(k as i64)));
        if (n - k) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Newton forward-difference coefficients a_k = Δ^k f(0) / k!, computed by
/// actually differencing f repeatedly. `polybasis::expand_in_falling_basis`
/// reaches the same numbers through the second-kind triangle.
pub fn newton_coefficients(f: &Polynomial) -> FallingFactorialExpansion {
    let Some(d) = f.degree() else {
        return FallingFactorialExpansion::from_coeffs(Vec::new());
    };
    let mut coeffs = Vec::with_capacity(d + 1);
    let mut g = f.clone();
    for k in 0..=d {
        coeffs.push(g.coeff(0) / Rational::from(factorial(k)));
        g = delta(&g);
    }
    FallingFactorialExpansion::from_coeffs(coeffs)
}

/// Rebuilds Σ a_k P_k(z) in the power basis.
pub fn newton_reconstruct(a: &FallingFactorialExpansion) -> Polynomial {
    a.to_polynomial()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::polybasis::{expand_in_falling_basis, falling_factorial_poly};

    #[test]
    fn delta_of_square() {
        let p = Polynomial::from_integers(&[0, 0, 1]);
        assert_eq!(delta(&p), Polynomial::from_integers(&[1, 2]));
    }

    #[test]
    fn delta_acts_as_derivative_on_falling_factorials() {
        for k in 1..=12usize {
            let expected = falling_factorial_poly(k - 1).scale(&rat(k as i64, 1));
            assert_eq!(delta(&falling_factorial_poly(k)), expected, "k={k}");
        }
    }

    #[test]
    fn delta_drops_degree_by_exactly_one() {
        let p = Polynomial::from_integers(&[9, -4, 0, 0, 3, 5]);
        assert_eq!(delta(&p).degree(), Some(4));
        assert_eq!(delta(&Polynomial::from_integers(&[7])), Polynomial::zero());
    }

    #[test]
    fn delta_is_linear() {
        let p = Polynomial::from_integers(&[1, 2, 3]);
        let q = Polynomial::from_integers(&[0, -5, 0, 2]);
        let combined = delta(&p.add(&q.scale(&rat(3, 2))));
        assert_eq!(combined, delta(&p).add(&delta(&q).scale(&rat(3, 2))));
    }

    #[test]
    fn iterated_delta_examples() {
        let cube = Polynomial::from_integers(&[0, 0, 0, 1]);
        assert_eq!(iterated_delta_at_zero(&cube, 2), rat(6, 1));
        assert_eq!(iterated_delta_at_zero(&cube, 0), rat(0, 1));
        assert_eq!(iterated_delta_at_zero(&Polynomial::one(), 1), rat(0, 1));
    }

    #[test]
    fn nth_delta_of_nth_power_is_factorial() {
        for m in 0..=15usize {
            let p = Polynomial::monomial(rat(1, 1), m);
            assert_eq!(
                iterated_delta_at_zero(&p, m),
                Rational::from(factorial(m)),
                "m={m}"
            );
        }
    }

    // The binomial sum and literal repeated differencing must agree.
    #[test]
    fn binomial_sum_matches_repeated_differencing() {
        let samples = vec![
            Polynomial::from_integers(&[2, -1, 4]),
            Polynomial::from_coeffs(vec![rat(1, 2), rat(-3, 5), rat(0, 1), rat(7, 3)]),
            Polynomial::from_integers(&[0, 0, 0, 0, 0, 1]),
        ];
        for f in samples {
            for n in 0..=8usize {
                let mut g = f.clone();
                for _ in 0..n {
                    g = delta(&g);
                }
                assert_eq!(
                    iterated_delta_at_zero(&f, n),
                    g.eval(&rat(0, 1)),
                    "n={n} f={f}"
                );
            }
        }
    }

    #[test]
    fn newton_coefficients_of_fourth_power() {
        let p = Polynomial::monomial(rat(1, 1), 4);
        assert_eq!(
            newton_coefficients(&p).coeffs(),
            &[rat(0, 1), rat(1, 1), rat(7, 1), rat(6, 1), rat(1, 1)]
        );
    }

    // Repeated differencing and the triangle expansion are independent
    // routes to the same coefficients.
    #[test]
    fn newton_coefficients_match_triangle_expansion() {
        let samples = vec![
            Polynomial::zero(),
            Polynomial::from_integers(&[5]),
            Polynomial::from_integers(&[3, 1, -2, 0, 1]),
            Polynomial::from_coeffs(vec![rat(-1, 7), rat(2, 3), rat(9, 4), rat(1, 2)]),
        ];
        for f in &samples {
            assert_eq!(newton_coefficients(f), expand_in_falling_basis(f), "{f}");
        }
        for m in 0..=12usize {
            let p = Polynomial::monomial(rat(1, 1), m);
            assert_eq!(newton_coefficients(&p), expand_in_falling_basis(&p));
        }
    }

    #[test]
    fn newton_round_trips() {
        let f = Polynomial::from_coeffs(vec![rat(4, 3), rat(0, 1), rat(-5, 2), rat(1, 1)]);
        assert_eq!(newton_reconstruct(&newton_coefficients(&f)), f);
    }
}
