//! Truncated formal power series over the rationals. Everything is exact to
//! the retained order, and the named constructors here are the independent
//! generating-series routes that the triangle-built families in `families`
//! are checked against.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, int, Rational};
use crate::families::{eulerian_poly, geometric_poly};
use crate::polybasis::Polynomial;
use crate::report::VerificationReport;
use crate::stirling::stirling1_unsigned;

/// Formal series Σ c_i t^i retained through t^order. The coefficient vector
/// always has length order + 1; binary operations truncate to the smaller
/// order of the operands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::constant(Rational::one(), order)
    }

    /// The series t (truncated to [0] when order = 0).
    pub fn variable(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Coefficient i comes from f(i).
    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> Rational) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(|i| f(i)).collect(),
        }
    }

    /// A polynomial read as a series; coefficients past the order are cut.
    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        TruncatedSeries::from_fn(order, |i| p.coeff(i))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of t^i; indices past the truncation order are rejected
    /// rather than defaulted, since the series carries no information there.
    pub fn coefficient(&self, i: usize) -> Result<Rational> {
        self.coeffs.get(i).cloned().ok_or(Error::CoefficientIndex {
            index: i,
            order: self.order(),
        })
    }

    /// m! · c_m: the value an exponential generating function stores at m.
    pub fn egf_coefficient(&self, m: usize) -> Result<Rational> {
        Ok(self.coefficient(m)? * Rational::from(factorial(m)))
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        TruncatedSeries::from_fn(order, |i| &self.coeffs[i] + &other.coeffs[i])
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        TruncatedSeries::from_fn(order, |i| &self.coeffs[i] - &other.coeffs[i])
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn pow(&self, exp: usize) -> TruncatedSeries {
        let mut acc = TruncatedSeries::one(self.order());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by t^p at fixed order; the top p coefficients fall off.
    pub fn shift_up(&self, p: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(self.order(), |i| {
            if i >= p {
                self.coeffs[i - p].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// exp(self), for series with zero constant term. Uses the derivative
    /// recurrence e_n = (1/n) Σ_{k=1}^{n} k f_k e_{n−k}.
    pub fn exp(&self) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTermNotZero { op: "exp" });
        }
        let mut e = vec![Rational::one()];
        for n in 1..=self.order() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += Rational::from(int(k as i64)) * &self.coeffs[k] * &e[n - k];
            }
            e.push(acc / Rational::from(int(n as i64)));
        }
        Ok(TruncatedSeries { coeffs: e })
    }

    /// log(1 + self), for series with zero constant term. Uses the recurrence
    /// g_n = f_n − (1/n) Σ_{k=1}^{n−1} (n−k) f_k g_{n−k}, from
    /// (1 + f) g′ = f′.
    pub fn log1p(&self) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTermNotZero { op: "log1p" });
        }
        let mut g = vec![Rational::zero()];
        for n in 1..=self.order() {
            let mut acc = Rational::zero();
            for k in 1..n {
                acc += &self.coeffs[k] * Rational::from(int((n - k) as i64)) * &g[n - k];
            }
            g.push(&self.coeffs[n] - acc / Rational::from(int(n as i64)));
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// 1/self, for series with nonzero constant term:
    /// r_n = −(1/f_0) Σ_{k=1}^{n} f_k r_{n−k}.
    pub fn reciprocal(&self) -> Result<TruncatedSeries> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ConstantTermZero { op: "reciprocal" });
        }
        let lead = self.coeffs[0].recip();
        let mut r = vec![lead.clone()];
        for n in 1..=self.order() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &r[n - k];
            }
            r.push(-acc * &lead);
        }
        Ok(TruncatedSeries { coeffs: r })
    }

    /// self(inner), by Horner's rule in the truncated ring; inner must have a
    /// zero constant term so the substitution is well defined order by order.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<TruncatedSeries> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::ConstantTermNotZero { op: "compose" });
        }
        let order = self.order().min(inner.order());
        let mut acc = TruncatedSeries::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Applies the operator t·d/dt m times: c_k ↦ k^m c_k.
    pub fn theta(&self, m: usize) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * Rational::from(num_traits::pow(int(k as i64), m)))
                .collect(),
        }
    }
}

/// outer(inner) for a polynomial outer; same zero-constant-term requirement
/// as series composition. The result carries inner's order.
pub fn compose_polynomial(outer: &Polynomial, inner: &TruncatedSeries) -> Result<TruncatedSeries> {
    if !inner.coefficients()[0].is_zero() {
        return Err(Error::ConstantTermNotZero { op: "compose" });
    }
    let order = inner.order();
    let mut acc = TruncatedSeries::zero(order);
    for c in outer.coeffs().iter().rev() {
        acc = acc.mul(inner);
        acc.coeffs[0] += c;
    }
    Ok(acc)
}

/// e^{at}: coefficient k is a^k/k!.
pub fn exp_series(a: &Rational, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Rational::one();
    coeffs.push(term.clone());
    for k in 1..=order {
        term = term * a / Rational::from(int(k as i64));
        coeffs.push(term.clone());
    }
    TruncatedSeries { coeffs }
}

fn exp_minus_one(order: usize) -> TruncatedSeries {
    exp_series(&Rational::one(), order).sub(&TruncatedSeries::one(order))
}

/// (e^t − 1)^n / n!: the column generating function whose coefficients store
/// S(m, n)/m! at index m.
pub fn egf_stirling2_column(n: usize, order: usize) -> TruncatedSeries {
    exp_minus_one(order)
        .pow(n)
        .scale(&Rational::from(factorial(n)).recip())
}

/// e^{x(e^t − 1)}: n!·coefficient(n) is the exponential polynomial φ_n(x).
pub fn bell_egf(x: &Rational, order: usize) -> TruncatedSeries {
    exp_minus_one(order)
        .scale(x)
        .exp()
        .expect("e^t - 1 has zero constant term")
}

/// t/(e^t − 1), computed as the reciprocal of (e^t − 1)/t. Stores B_m/m!.
pub fn bernoulli_egf(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |k| Rational::from(factorial(k + 1)).recip())
        .reciprocal()
        .expect("(e^t - 1)/t has constant term 1")
}

/// Σ_{n=0}^{N} (−1)^n/(n+1) · (e^t − 1)^n: the logarithm route to the same
/// Bernoulli series, computed without any series division.
pub fn bernoulli_log_trick(order: usize) -> TruncatedSeries {
    let base = exp_minus_one(order);
    let mut power = TruncatedSeries::one(order);
    let mut acc = TruncatedSeries::zero(order);
    for n in 0..=order {
        let mut weight = Rational::from(int(n as i64 + 1)).recip();
        if n % 2 == 1 {
            weight = -weight;
        }
        acc = acc.add(&power.scale(&weight));
        if n < order {
            power = power.mul(&base);
        }
    }
    acc
}

/// 2e^{xt}/(e^t + 1): m!·coefficient(m) is the Euler polynomial E_m(x).
pub fn euler_poly_egf(x: &Rational, order: usize) -> TruncatedSeries {
    let denom = exp_series(&Rational::one(), order).add(&TruncatedSeries::one(order));
    exp_series(x, order)
        .scale(&Rational::from(int(2)))
        .mul(&denom.reciprocal().expect("e^t + 1 has constant term 2"))
}

/// 1/(μe^{λt} + 1). Every retained coefficient is checked on the spot
/// against the closed form m!·c_m = λ^m/(μ+1)·ω_m(−μ/(μ+1)).
pub fn fermi_expansion(lambda: &Rational, mu: &Rational, order: usize) -> Result<TruncatedSeries> {
    if (mu + Rational::one()).is_zero() {
        return Err(Error::ConstantTermZero { op: "fermi_expansion" });
    }
    let series = exp_series(lambda, order)
        .scale(mu)
        .add(&TruncatedSeries::one(order))
        .reciprocal()?;
    let mu_plus_one = mu + Rational::one();
    let ratio = -mu / &mu_plus_one;
    let mut lambda_power = Rational::one();
    for m in 0..=order {
        let closed = &lambda_power / &mu_plus_one * geometric_poly(m).eval(&ratio);
        assert_eq!(
            series.egf_coefficient(m).expect("m <= order"),
            closed,
            "fermi expansion disagrees with the geometric polynomial at m={m}"
        );
        lambda_power *= lambda;
    }
    Ok(series)
}

/// Checks Σ n^m t^n = ω_m(t/(1−t)) · 1/(1−t) coefficientwise to the given
/// order: the direct power series against the geometric-polynomial route.
pub fn ogf_power_check(m: usize, order: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        "ogf-power",
        format!("m={m}, coefficients 0..={order}"),
    );
    let lhs = TruncatedSeries::from_fn(order, |n| {
        Rational::from(num_traits::pow(int(n as i64), m))
    });
    let geometric = TruncatedSeries::from_polynomial(&Polynomial::from_integers(&[1, -1]), order)
        .reciprocal()
        .expect("1 - t has constant term 1");
    let ratio = TruncatedSeries::variable(order).mul(&geometric);
    let rhs = compose_polynomial(&geometric_poly(m), &ratio)
        .expect("t/(1-t) has zero constant term")
        .mul(&geometric);
    for k in 0..=order {
        report.case(
            &format!("m={m} coefficient {k}"),
            &lhs.coeffs[k],
            &rhs.coeffs[k],
        );
    }
    report
}

/// Checks Σ n^m t^n = A_m(t)/(1−t)^{m+1} coefficientwise to the given order,
/// with the Eulerian polynomial built from the triangle.
pub fn eulerian_ogf_check(m: usize, order: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        "eulerian-ogf",
        format!("m={m}, coefficients 0..={order}"),
    );
    let lhs = TruncatedSeries::from_fn(order, |n| {
        Rational::from(num_traits::pow(int(n as i64), m))
    });
    let geometric = TruncatedSeries::from_polynomial(&Polynomial::from_integers(&[1, -1]), order)
        .reciprocal()
        .expect("1 - t has constant term 1");
    let rhs = TruncatedSeries::from_polynomial(&eulerian_poly(m), order).mul(&geometric.pow(m + 1));
    for k in 0..=order {
        report.case(
            &format!("m={m} coefficient {k}"),
            &lhs.coeffs[k],
            &rhs.coeffs[k],
        );
    }
    report
}

/// Checks the inverse factorial expansion of 1/z^{m+1} in the variable
/// u = 1/z: the partial sum Σ_{k=0}^{K} σ(m+k, m) u^{m+k+1} Π_{j=1}^{m+k}
/// 1/(1+ju) must equal u^{m+1} through order m+K+1. Each added term extends
/// the match by exactly one order.
pub fn inverse_factorial_expansion_check(m: usize, terms_beyond_first: usize) -> VerificationReport {
    assert!(m >= 1, "the expansion needs m >= 1");
    let capital_k = terms_beyond_first;
    let order = m + capital_k + 1;
    let mut report = VerificationReport::new(
        "inverse-factorial",
        format!("m={m}, K={capital_k}, coefficients 0..={order}"),
    );
    let recip_linear = |j: usize| {
        TruncatedSeries::from_polynomial(&Polynomial::from_integers(&[1, j as i64]), order)
            .reciprocal()
            .expect("1 + ju has constant term 1")
    };
    let mut product = TruncatedSeries::one(order);
    for j in 1..=m {
        product = product.mul(&recip_linear(j));
    }
    let mut sum = TruncatedSeries::zero(order);
    for k in 0..=capital_k {
        let weight = Rational::from(stirling1_unsigned(m + k, m));
        sum = sum.add(&product.scale(&weight).shift_up(m + k + 1));
        product = product.mul(&recip_linear(m + k + 1));
    }
    let expected =
        TruncatedSeries::from_polynomial(&Polynomial::monomial(Rational::one(), m + 1), order);
    for i in 0..=order {
        report.case(
            &format!("m={m} K={capital_k} coefficient {i}"),
            &expected.coeffs[i],
            &sum.coeffs[i],
        );
    }
    report
}
