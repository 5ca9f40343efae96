//! Dense polynomials over the rationals, plus the falling factorial basis
//! P_k(z) = z(z−1)…(z−k+1). Basis changes go through the Stirling triangles:
//! the second kind expands powers in falling factorials, the signed first
//! kind goes back. The direct product route is kept alongside as an
//! independent witness.

use std::fmt;

use num_traits::{One, Zero};

use crate::exactnum::Rational;
use crate::stirling::{first_kind_rows, second_kind_rows};

/// Polynomial with exact rational coefficients, ascending order. Trailing
/// zeros are always trimmed; the zero polynomial stores no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

fn trim(mut coeffs: Vec<Rational>) -> Vec<Rational> {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// c · z^k
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial::from_coeffs(coeffs)
    }

    /// The polynomial z.
    pub fn variable() -> Self {
        Polynomial::monomial(Rational::one(), 1)
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Polynomial {
            coeffs: trim(coeffs),
        }
    }

    /// Convenience for integer coefficient lists, ascending.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| crate::exactnum::rat(c, 1)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of z^k; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn pow(&self, exp: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| Rational::from(crate::exactnum::int(k as i64)) * c)
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    /// Substitution self(inner), by Horner's rule over polynomial arithmetic.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner);
            acc = acc.add(&Polynomial::constant(c.clone()));
        }
        acc
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rational::zero();
            let magnitude = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = magnitude.is_one();
            match k {
                0 => write!(f, "{}", magnitude)?,
                _ => {
                    if !coeff_is_one {
                        write!(f, "{}", magnitude)?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Coefficients of a polynomial in the falling factorial basis: entry k
/// multiplies P_k(z). Same trimming rule as `Polynomial`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FallingFactorialExpansion {
    coeffs: Vec<Rational>,
}

impl FallingFactorialExpansion {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        FallingFactorialExpansion {
            coeffs: trim(coeffs),
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Collapse Σ a_k P_k(z) back to the power basis by building the P_k as
    /// actual products. Deliberately avoids the first-kind triangle so the
    /// round trip against `expand_in_falling_basis` exercises both triangles.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut acc = Polynomial::zero();
        let mut basis = Polynomial::one();
        for (k, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                acc = acc.add(&basis.scale(a));
            }
            let shift = Polynomial::from_integers(&[-(k as i64), 1]);
            basis = basis.mul(&shift);
        }
        acc
    }
}

/// P_k(z) = z(z−1)…(z−k+1) as an explicit product; P_0 = 1.
pub fn falling_factorial_poly(k: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for j in 0..k {
        acc = acc.mul(&Polynomial::from_integers(&[-(j as i64), 1]));
    }
    acc
}

/// z^m = Σ_n S(m, n) P_n(z): the expansion coefficients are a second-kind
/// triangle row.
pub fn power_to_falling(m: usize) -> FallingFactorialExpansion {
    let rows = second_kind_rows(m);
    FallingFactorialExpansion::from_coeffs(rows[m].iter().map(|v| Rational::from(v.clone())).collect())
}

/// P_m(z) = Σ_k s(m, k) z^k: the power-basis coefficients are a signed
/// first-kind triangle row.
pub fn falling_to_power(m: usize) -> Polynomial {
    let rows = first_kind_rows(m);
    let coeffs = rows[m]
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let signed = if (m - k) % 2 == 1 { -v } else { v.clone() };
            Rational::from(signed)
        })
        .collect();
    Polynomial::from_coeffs(coeffs)
}

/// Expands a polynomial in the falling factorial basis by multiplying its
/// coefficient vector through the second-kind triangle.
pub fn expand_in_falling_basis(p: &Polynomial) -> FallingFactorialExpansion {
    let Some(d) = p.degree() else {
        return FallingFactorialExpansion::from_coeffs(Vec::new());
    };
    let rows = second_kind_rows(d);
    let coeffs = (0..=d)
        .map(|n| {
            let mut acc = Rational::zero();
            for m in n..=d {
                acc += p.coeff(m) * Rational::from(rows[m][n].clone());
            }
            acc
        })
        .collect();
    FallingFactorialExpansion::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn representation_trims_trailing_zeros() {
        let p = Polynomial::from_coeffs(vec![rat(1, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert!(Polynomial::from_coeffs(vec![rat(0, 1)]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn ring_operations() {
        let p = Polynomial::from_integers(&[1, 2]); // 1 + 2x
        let q = Polynomial::from_integers(&[-1, 1]); // -1 + x
        assert_eq!(p.add(&q), Polynomial::from_integers(&[0, 3]));
        assert_eq!(p.mul(&q), Polynomial::from_integers(&[-1, -1, 2]));
        assert_eq!(p.sub(&p), Polynomial::zero());
        assert_eq!(q.pow(2), Polynomial::from_integers(&[1, -2, 1]));
        assert_eq!(
            p.scale(&rat(1, 2)),
            Polynomial::from_coeffs(vec![rat(1, 2), rat(1, 1)])
        );
    }

    #[test]
    fn cancellation_drops_degree() {
        let p = Polynomial::from_integers(&[0, 1, 3]);
        let q = Polynomial::from_integers(&[5, 0, -3]);
        assert_eq!(p.add(&q).degree(), Some(1));
    }

    #[test]
    fn derivative_and_eval() {
        let p = Polynomial::from_integers(&[7, -3, 0, 2]); // 7 - 3x + 2x^3
        assert_eq!(p.derivative(), Polynomial::from_integers(&[-3, 0, 6]));
        assert_eq!(p.eval(&rat(2, 1)), rat(17, 1));
        assert_eq!(p.eval(&rat(-1, 2)), rat(33, 4));
        assert_eq!(Polynomial::zero().eval(&rat(9, 1)), rat(0, 1));
    }

    #[test]
    fn composition_examples() {
        let p = Polynomial::from_integers(&[0, 0, 1]); // x^2
        let q = Polynomial::from_integers(&[1, 1]); // x + 1
        assert_eq!(p.compose(&q), Polynomial::from_integers(&[1, 2, 1]));
        // degree multiplies
        let r = Polynomial::from_integers(&[0, 0, 0, 2]);
        assert_eq!(r.compose(&p).degree(), Some(6));
        // evaluation commutes with composition
        let x = rat(3, 7);
        assert_eq!(p.compose(&q).eval(&x), p.eval(&q.eval(&x)));
    }

    #[test]
    fn display_format() {
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::one().to_string(), "1");
        assert_eq!(
            Polynomial::from_integers(&[0, 1, 14, 36, 24]).to_string(),
            "x + 14x^2 + 36x^3 + 24x^4"
        );
        assert_eq!(
            Polynomial::from_coeffs(vec![rat(-1, 2), rat(1, 1)]).to_string(),
            "-1/2 + x"
        );
        assert_eq!(
            Polynomial::from_integers(&[0, -6, 11, -6, 1]).to_string(),
            "-6x + 11x^2 - 6x^3 + x^4"
        );
        assert_eq!(Polynomial::from_integers(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn falling_factorial_products() {
        assert_eq!(falling_factorial_poly(0), Polynomial::one());
        assert_eq!(falling_factorial_poly(1), Polynomial::variable());
        assert_eq!(
            falling_factorial_poly(4),
            Polynomial::from_integers(&[0, -6, 11, -6, 1])
        );
    }

    #[test]
    fn power_to_falling_rows() {
        assert_eq!(power_to_falling(0).coeffs(), &[rat(1, 1)]);
        assert_eq!(power_to_falling(2).coeffs(), &[rat(0, 1), rat(1, 1), rat(1, 1)]);
        assert_eq!(
            power_to_falling(3).coeffs(),
            &[rat(0, 1), rat(1, 1), rat(3, 1), rat(1, 1)]
        );
    }

    // The triangle route and the product route must build the same P_m.
    #[test]
    fn falling_to_power_agrees_with_product_route() {
        for m in 0..=20usize {
            assert_eq!(falling_to_power(m), falling_factorial_poly(m), "m={m}");
        }
    }

    #[test]
    fn expand_example() {
        let p = Polynomial::from_integers(&[0, 1, 2]); // 2z^2 + z
        assert_eq!(
            expand_in_falling_basis(&p).coeffs(),
            &[rat(0, 1), rat(3, 1), rat(2, 1)]
        );
    }

    #[test]
    fn expansion_round_trips() {
        let samples = vec![
            Polynomial::zero(),
            Polynomial::one(),
            Polynomial::from_integers(&[4, -2, 0, 9, 1]),
            Polynomial::from_coeffs(vec![rat(1, 3), rat(-7, 2), rat(5, 6)]),
        ];
        for p in samples {
            let expanded = expand_in_falling_basis(&p);
            assert_eq!(expanded.to_polynomial(), p);
        }
        for m in 0..=12usize {
            let p = Polynomial::monomial(rat(1, 1), m);
            assert_eq!(expand_in_falling_basis(&p).to_polynomial(), p, "z^{m}");
        }
    }

    #[test]
    fn expansion_preserves_degree() {
        let p = Polynomial::from_integers(&[3, 0, 0, 0, 0, 0, 2]);
        assert_eq!(expand_in_falling_basis(&p).degree(), p.degree());
    }

    #[test]
    fn powers_evaluate_equally_in_both_bases() {
        // z^m and Σ S(m,n) P_n agree pointwise.
        for m in 0..=8usize {
            let expansion = power_to_falling(m);
            for x in [rat(0, 1), rat(1, 1), rat(5, 1), rat(-3, 2), rat(7, 4)] {
                let direct = num_traits::pow(x.clone(), m);
                assert_eq!(expansion.to_polynomial().eval(&x), direct, "m={m}");
            }
        }
    }
}
