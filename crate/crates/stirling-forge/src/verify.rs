//! The identity-verification registry. Every entry sweeps one identity over
//! a caller-chosen range, pitting at least two independent computation routes
//! against each other, and returns a [`VerificationReport`]. Registry ids are
//! the stable `eqN.M` names the CLI accepts; the description strings say what
//! each one checks.
//!
//! Randomized cases are drawn from a seeded generator, so a given
//! (id, max, order, seed) triple always checks the same cases in the same
//! order, and the reports are byte-identical run to run.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactnum::{
    binomial, factorial, hockey_stick, int, inverse_binomial_transform, rat, Integer, Rational,
};
use crate::exec::map_cases;
use crate::families::{
    alternating_affine_power_sum, alternating_poly_sum, alternating_power_sum, bernoulli_numbers_upto,
    euler_poly, exponential_poly, geometric_poly, power_sum_bernoulli, power_sum_naive,
    power_sum_stirling, power_via_stirling,
};
use crate::findiff::{delta, iterated_delta_at_zero};
use crate::polybasis::Polynomial;
use crate::report::VerificationReport;
use crate::series::{
    bell_egf, bernoulli_egf, bernoulli_log_trick, egf_stirling2_column, euler_poly_egf, exp_series,
    eulerian_ogf_check, fermi_expansion, inverse_factorial_expansion_check, ogf_power_check,
    TruncatedSeries,
};
use crate::stirling::{orthogonality_sum, second_kind_rows, stirling2};

/// Sweep ranges for a verification run. `max` bounds the discrete indices
/// (m, n), `order` bounds series truncation, `seed` fixes the randomized
/// rational inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max: usize,
    pub order: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max: 12,
            order: 16,
            seed: 0,
        }
    }
}

type Runner = fn(&VerifyOptions) -> VerificationReport;

/// (id, what it checks, runner), in the order `all` reports them.
const REGISTRY: &[(&str, &str, Runner)] = &[
    (
        "eq1.1",
        "alternating binomial sum of k^m: 0 for m < n, (-1)^n n! at m = n",
        run_alternating_diagonal,
    ),
    (
        "eq1.2",
        "alternating binomial sum of (xk+y)^m: 0 for m < n, (-1)^n x^n n! at m = n",
        run_affine_diagonal,
    ),
    (
        "eq1.9",
        "superdiagonal alternating sum equals (-1)^n (n/2) (n+1)!",
        run_superdiagonal,
    ),
    (
        "eq1.10",
        "alternating binomial sum of (xk+y)^m equals the S(j,n)-weighted binomial expansion",
        run_affine_general,
    ),
    (
        "eq1.11",
        "alternating binomial sum of f(k) equals (-1)^n n! times the S(m,n)-weighted coefficient sum",
        run_polynomial_alternating,
    ),
    (
        "eq3.5",
        "iterated difference at zero equals the signed binomial sum of samples",
        run_iterated_difference,
    ),
    (
        "eq3.10",
        "the m-th difference of z^m at zero is exactly m!",
        run_top_difference,
    ),
    (
        "eq5.3",
        "e^{-x} (x d/dx)^m e^x collapses to the exponential polynomial",
        run_theta_exponential,
    ),
    (
        "eq5.4",
        "e^{x(e^t-1)} stores the exponential polynomials as EGF coefficients",
        run_bell_generating_function,
    ),
    (
        "eq5.6",
        "(x d/dx)^m e^{ax} equals the exponential polynomial at ax times e^{ax}",
        run_theta_scaling,
    ),
    (
        "eq6.3",
        "(e^t-1)^n/n! stores S(m,n) as EGF coefficient m",
        run_column_generating_function,
    ),
    (
        "eq7.6",
        "sum of n^m t^n equals the geometric polynomial at t/(1-t), over 1-t",
        run_power_ogf,
    ),
    (
        "eq7.13",
        "1/(mu e^{lambda t}+1) expands through geometric polynomial values",
        run_fermi,
    ),
    (
        "eq7.14",
        "2/(e^t+1) stores the geometric polynomials evaluated at -1/2",
        run_fermi_symmetric,
    ),
    (
        "eq7.15",
        "sum of n^m t^n equals the Eulerian polynomial over (1-t)^{m+1}",
        run_eulerian_ogf,
    ),
    (
        "eq7.18",
        "Euler polynomials as binomial sums of geometric polynomial values at -1/2",
        run_euler_binomial_form,
    ),
    (
        "eq7.19",
        "the Euler polynomial constant term is the geometric polynomial at -1/2",
        run_euler_constant_term,
    ),
    (
        "eq8.3",
        "the log route and the reciprocal route to the Bernoulli series agree",
        run_bernoulli_log_route,
    ),
    (
        "eq8.4",
        "Bernoulli numbers as signed n!/(n+1)-weighted second-kind row sums",
        run_bernoulli_row_formula,
    ),
    (
        "eq9.1",
        "power sums through the Bernoulli closed form",
        run_power_sum_bernoulli_route,
    ),
    (
        "eq9.2",
        "n^m recovered as a binomial sum of S(m,k) k!",
        run_power_from_triangle,
    ),
    (
        "eq9.6",
        "binomial column sums telescope to C(n+1, k+1)",
        run_hockey_stick,
    ),
    (
        "eq9.7",
        "power sums through the second-kind closed form",
        run_power_sum_stirling_route,
    ),
    (
        "eq10.2",
        "the second-kind and signed first-kind triangles are mutually inverse",
        run_orthogonality,
    ),
    (
        "eq10.3",
        "inverse factorial series of 1/z^{m+1} weighted by first-kind numbers",
        run_inverse_factorial,
    ),
];

/// Registry ids in report order.
pub fn identity_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|(id, _, _)| *id).collect()
}

/// One-line statement of what an id checks.
pub fn identity_description(id: &str) -> Option<&'static str> {
    REGISTRY
        .iter()
        .find(|(name, _, _)| *name == id)
        .map(|(_, description, _)| *description)
}

/// Runs a single identity sweep; unknown ids are rejected.
pub fn run_identity(id: &str, options: &VerifyOptions) -> Result<VerificationReport> {
    let (_, _, runner) = REGISTRY
        .iter()
        .find(|(name, _, _)| *name == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    Ok(runner(options))
}

/// Runs every identity in registry order. Independent sweeps execute in
/// parallel under the `parallel` feature; output order never changes.
pub fn run_all(options: &VerifyOptions) -> Vec<VerificationReport> {
    map_cases(REGISTRY.to_vec(), |(_, _, runner)| runner(options))
}

fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-12..=12), rng.gen_range(1..=9))
}

fn random_rational_pairs(rng: &mut ChaCha8Rng, count: usize) -> Vec<(Rational, Rational)> {
    (0..count)
        .map(|_| (random_rational(rng), random_rational(rng)))
        .collect()
}

fn random_polynomial(rng: &mut ChaCha8Rng, max_degree: usize) -> Polynomial {
    let degree = rng.gen_range(0..=max_degree);
    Polynomial::from_coeffs((0..=degree).map(|_| random_rational(rng)).collect())
}

fn signed_factorial(n: usize) -> Rational {
    let magnitude = Rational::from(factorial(n));
    if n % 2 == 1 {
        -magnitude
    } else {
        magnitude
    }
}

/// Σ_n S(m,n) n! (-1)^n / 2^n, straight off a fresh triangle row.
fn geometric_value_at_minus_half(m: usize) -> Rational {
    let rows = second_kind_rows(m);
    let mut acc = Rational::zero();
    for (n, v) in rows[m].iter().enumerate() {
        let term = Rational::new(v * factorial(n), num_traits::pow(int(2), n));
        if n % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn run_alternating_diagonal(options: &VerifyOptions) -> VerificationReport {
    let max = options.max;
    let mut report = VerificationReport::new("eq1.1", format!("n 0..={max}, m 0..=n"));
    for n in 0..=max {
        for m in 0..=n {
            let expected = if m < n {
                Integer::zero()
            } else if n % 2 == 1 {
                -factorial(n)
            } else {
                factorial(n)
            };
            report.case(
                &format!("n={n} m={m}"),
                &expected,
                &alternating_power_sum(n, m),
            );
        }
    }
    report
}

fn run_affine_diagonal(options: &VerifyOptions) -> VerificationReport {
    let max = options.max;
    let mut rng = seeded_rng(options.seed);
    let pairs = random_rational_pairs(&mut rng, 20);
    let mut report = VerificationReport::new(
        "eq1.2",
        format!("20 seeded (x, y) pairs, n 0..={max}, m 0..=n"),
    );
    let subs = map_cases(pairs, |(x, y)| {
        let mut sub = VerificationReport::new("", "");
        for n in 0..=max {
            for m in 0..=n {
                let expected = if m < n {
                    Rational::zero()
                } else {
                    num_traits::pow(x.clone(), n) * signed_factorial(n)
                };
                sub.case(
                    &format!("x={x} y={y} n={n} m={m}"),
                    &expected,
                    &alternating_affine_power_sum(n, m, &x, &y),
                );
            }
        }
        sub
    });
    for sub in subs {
        report.absorb(sub);
    }
    report
}

fn run_superdiagonal(options: &VerifyOptions) -> VerificationReport {
    let max = options.max;
    let mut report = VerificationReport::new("eq1.9", format!("n 0..={max}"));
    for n in 0..=max {
        let magnitude = int(n as i64) * factorial(n + 1);
        let expected = Rational::new(if n % 2 == 1 { -magnitude } else { magnitude }, int(2));
        report.case(
            &format!("n={n}"),
            &expected,
            &Rational::from(alternating_power_sum(n, n + 1)),
        );
    }
    report
}

fn run_affine_general(options: &VerifyOptions) -> VerificationReport {
    let max = options.max;
    let mut rng = seeded_rng(options.seed);
    let pairs = random_rational_pairs(&mut rng, 20);
    let mut report = VerificationReport::new(
        "eq1.10",
        format!("20 seeded (x, y) pairs, n 0..={max}, m 0..={max}"),
    );
    let rows = second_kind_rows(max);
    let subs = map_cases(pairs, |(x, y)| {
        let mut sub = VerificationReport::new("", "");
        for n in 0..=max {
            for m in 0..=max {
                let mut rhs = Rational::zero();
                for j in n..=m {
                    rhs += Rational::from(binomial(m, j as i64))
                        * num_traits::pow(x.clone(), j)
                        * num_traits::pow(y.clone(), m - j)
                        * Rational::from(rows[j][n].clone());
                }
                rhs *= signed_factorial(n);
                sub.case(
                    &format!("x={x} y={y} n={n} m={m}"),
                    &rhs,
                    &alternating_affine_power_sum(n, m, &x, &y),
                );
            }
        }
        sub
    });
    for sub in subs {
        report.absorb(sub);
    }
    report
}

fn run_polynomial_alternating(options: &VerifyOptions) -> VerificationReport {
    let max = options.max;
    let mut rng = seeded_rng(options.seed);
    let polys: Vec<Polynomial> = (0..8).map(|_| random_polynomial(&mut rng, 10)).collect();
    let mut report = VerificationReport::new(
        "eq1.11",
        format!("8 seeded polynomials of degree <= 10, n 0..={max}"),
    );
    for (i, f) in polys.iter().enumerate() {
        let degree = f.degree().unwrap_or(0);
        let rows = second_kind_rows(degree);
        for n in 0..=max {
            let mut rhs = Rational::zero();
            for (m, c) in f.coeffs().iter().enumerate() {
                if m >= n {
                    rhs += c * Rational::from(rows[m][n].clone());
                }
            }
            rhs *= signed_factorial(n);
            report.case(
                &format!("poly {i} n={n}"),
                &rhs,
                &alternating_poly_sum(n, f),
            );
        }
    }
    report
}

fn run_iterated_difference(options: &VerifyOptions) -> VerificationReport {
    let max = options.max.min(12);
    let mut rng = seeded_rng(options.seed);
    let polys: Vec<Polynomial> = (0..8).map(|_| random_polynomial(&mut rng, 10)).collect();
    let mut report = VerificationReport::new(
        "eq3.5",
        format!("8 seeded polynomials of degree <= 10, n 0..={max}"),
    );
    for (i, f) in polys.iter().enumerate() {
        let mut repeated = f.clone();
        for n in 0..=max {
            report.case(
                &format!("poly {i} n={n}"),
                &repeated.eval(&Rational::zero()),
                &iterated_delta_at_zero(f, n),
            );
            repeated = delta(&repeated);
        }
    }
    report
}

fn run_top_difference(options: &VerifyOptions) -> VerificationReport {
    let max = options.max;
    let mut report = VerificationReport::new("eq3.10", format!("m 0..={max}"));
    for m in 0..=max {
        let monomial = Polynomial::monomial(Rational::one(), m);
        let normalized = iterated_delta_at_zero(&monomial, m) / Rational::from(factorial(m));
        report.case(&format!("m={m}"), &Rational::one(), &normalized);
    }
    report
}

fn run_theta_exponential(options: &VerifyOptions) -> VerificationReport {
    let (max, order) = (options.max, options.order);
    let mut report = VerificationReport::new(
        "eq5.3",
        format!("m 0..={max}, coefficients 0..={order}"),
    );
    let subs = map_cases((0..=max).collect::<Vec<_>>(), |m| {
        let mut sub = VerificationReport::new("", "");
        let actual = exp_series(&Rational::one(), order)
            .theta(m)
            .mul(&exp_series(&-Rational::one(), order));
        let expected = TruncatedSeries::from_polynomial(&exponential_poly(m), order);
        for k in 0..=order {
            sub.case(
                &format!("m={m} coefficient {k}"),
                &expected.coefficient(k).expect("k <= order"),
                &actual.coefficient(k).expect("k <= order"),
            );
        }
        sub
    });
    for sub in subs {
        report.absorb(sub);
    }
    report
}

fn run_bell_generating_function(options: &VerifyOptions) -> VerificationReport {
    let order = options.order;
    let mut rng = seeded_rng(options.seed);
    let points: Vec<Rational> = (0..5).map(|_| random_rational(&mut rng)).collect();
    let mut report = VerificationReport::new(
        "eq5.4",
        format!("5 seeded x values, n 0..={order}"),
    );
    for x in &points {
        let egf = bell_egf(x, order);
        for n in 0..=order {
            report.case(
                &format!("x={x} n={n}"),
                &exponential_poly(n).eval(x),
                &egf.egf_coefficient(n).expect("n <= order"),
            );
        }
    }
    report
}

fn run_theta_scaling(options: &VerifyOptions) -> VerificationReport {
    let (max, order) = (options.max, options.order);
    let scales = [rat(1, 1), rat(2, 1), rat(-1, 1), rat(1, 2)];
    let mut report = VerificationReport::new(
        "eq5.6",
        format!("a in {{1, 2, -1, 1/2}}, m 0..={max}, coefficients 0..={order}"),
    );
    for a in &scales {
        let exponential = exp_series(a, order);
        let ax = Polynomial::monomial(a.clone(), 1);
        for m in 0..=max {
            let lhs = exponential.theta(m);
            let rhs = TruncatedSeries::from_polynomial(&exponential_poly(m).compose(&ax), order)
                .mul(&exponential);
            for k in 0..=order {
                report.case(
                    &format!("a={a} m={m} coefficient {k}"),
                    &rhs.coefficient(k).expect("k <= order"),
                    &lhs.coefficient(k).expect("k <= order"),
                );
            }
        }
    }
    report
}

fn run_column_generating_function(options: &VerifyOptions) -> VerificationReport {
    let (max, order) = (options.max, options.order);
    let mut report = VerificationReport::new(
        "eq6.3",
        format!("n 0..={max}, m 0..={order}"),
    );
    let subs = map_cases((0..=max).collect::<Vec<_>>(), |n| {
        let mut sub = VerificationReport::new("", "");
        let column = egf_stirling2_column(n, order);
        for m in 0..=order {
            sub.case(
                &format!("n={n} m={m}"),
                &Rational::from(stirling2(m, n)),
                &column.egf_coefficient(m).expect("m <= order"),
            );
        }
        sub
    });
    for sub in subs {
        report.absorb(sub);
    }
    report
}

fn run_power_ogf(options: &VerifyOptions) -> VerificationReport {
    let (max, order) = (options.max, options.order);
    let mut report = VerificationReport::new(
        "eq7.6",
        format!("m 0..={max}, coefficients 0..={order}"),
    );
    let subs = map_cases((0..=max).collect::<Vec<_>>(), |m| ogf_power_check(m, order));
    for sub in subs {
        report.absorb(sub);
    }
    report
}

fn run_fermi(options: &VerifyOptions) -> VerificationReport {
    let order = options.order;
    let mut rng = seeded_rng(options.seed);
    let mut pairs = vec![(rat(1, 1), rat(1, 1)), (rat(2, 1), rat(1, 1)), (rat(1, 2), rat(3, 1))];
    while pairs.len() < 9 {
        let lambda = random_rational(&mut rng);
        let mu = random_rational(&mut rng);
        if mu != rat(-1, 1) {
            pairs.push((lambda, mu));
        }
    }
    let mut report = VerificationReport::new(
        "eq7.13",
        format!("9 (lambda, mu) pairs, m 0..={order}"),
    );
    for (lambda, mu) in &pairs {
        let series = fermi_expansion(lambda, mu, order).expect("mu != -1");
        let mu_plus_one = mu + Rational::one();
        let ratio = -mu / &mu_plus_one;
        let mut lambda_power = Rational::one();
        for m in 0..=order {
            let closed = &lambda_power / &mu_plus_one * geometric_poly(m).eval(&ratio);
            report.case(
                &format!("lambda={lambda} mu={mu} m={m}"),
                &closed,
                &series.egf_coefficient(m).expect("m <= order"),
            );
            lambda_power *= lambda;
        }
    }
    report
}

fn run_fermi_symmetric(options: &VerifyOptions) -> VerificationReport {
    let order = options.order;
    let mut report = VerificationReport::new("eq7.14", format!("m 0..={order}"));
    let doubled = fermi_expansion(&rat(1, 1), &rat(1, 1), order)
        .expect("mu = 1")
        .scale(&rat(2, 1));
    for m in 0..=order {
        report.case(
            &format!("m={m}"),
            &geometric_value_at_minus_half(m),
            &doubled.egf_coefficient(m).expect("m <= order"),
        );
    }
    report
}

fn run_eulerian_ogf(options: &VerifyOptions) -> VerificationReport {
    let (max, order) = (options.max, options.order);
    let mut report = VerificationReport::new(
        "eq7.15",
        format!("m 0..={max}, coefficients 0..={order}"),
    );
    let subs = map_cases((0..=max).collect::<Vec<_>>(), |m| eulerian_ogf_check(m, order));
    for sub in subs {
        report.absorb(sub);
    }
    report
}

fn run_euler_binomial_form(options: &VerifyOptions) -> VerificationReport {
    let order = options.order;
    let mut rng = seeded_rng(options.seed);
    let points: Vec<Rational> = (0..5).map(|_| random_rational(&mut rng)).collect();
    let mut report = VerificationReport::new(
        "eq7.18",
        format!("5 seeded x values, m 0..={order}"),
    );
    for x in &points {
        let egf = euler_poly_egf(x, order);
        for m in 0..=order {
            report.case(
                &format!("x={x} m={m}"),
                &euler_poly(m).eval(x),
                &egf.egf_coefficient(m).expect("m <= order"),
            );
        }
    }
    report
}

fn run_euler_constant_term(options: &VerifyOptions) -> VerificationReport {
    let max = options.max;
    let mut report = VerificationReport::new("eq7.19", format!("m 0..={max}"));
    for m in 0..=max {
        let direct = geometric_value_at_minus_half(m);
        report.case(
            &format!("constant term, m={m}"),
            &direct,
            &euler_poly(m).coeff(0),
        );
        report.case(
            &format!("polynomial value, m={m}"),
            &direct,
            &geometric_poly(m).eval(&rat(-1, 2)),
        );
    }
    report
}

fn run_bernoulli_log_route(options: &VerifyOptions) -> VerificationReport {
    let order = options.order;
    let mut report = VerificationReport::new("eq8.3", format!("coefficients 0..={order}"));
    let via_log = bernoulli_log_trick(order);
    let via_reciprocal = bernoulli_egf(order);
    for m in 0..=order {
        report.case(
            &format!("coefficient {m}"),
            &via_reciprocal.coefficient(m).expect("m <= order"),
            &via_log.coefficient(m).expect("m <= order"),
        );
    }
    report
}

fn run_bernoulli_row_formula(options: &VerifyOptions) -> VerificationReport {
    let max = options.max;
    let mut report = VerificationReport::new("eq8.4", format!("m 0..={max}"));
    let egf = bernoulli_egf(max);
    let triangle_route = bernoulli_numbers_upto(max);
    for (m, value) in triangle_route.iter().enumerate() {
        report.case(
            &format!("m={m}"),
            &egf.egf_coefficient(m).expect("m <= max"),
            value,
        );
    }
    report
}

fn run_power_sum_bernoulli_route(options: &VerifyOptions) -> VerificationReport {
    let max = options.max;
    let mut report = VerificationReport::new(
        "eq9.1",
        format!("m 0..={max}, n 1..=100"),
    );
    let subs = map_cases((0..=max).collect::<Vec<_>>(), |m| {
        let mut sub = VerificationReport::new("", "");
        let mut running = Rational::zero();
        for n in 1..=100usize {
            // running holds 1^m + ... + (n-1)^m.
            sub.case(
                &format!("m={m} n={n}"),
                &running,
                &power_sum_bernoulli(m, n),
            );
            running += Rational::from(num_traits::pow(int(n as i64), m));
        }
        sub
    });
    for sub in subs {
        report.absorb(sub);
    }
    report
}

fn run_power_from_triangle(options: &VerifyOptions) -> VerificationReport {
    let max = options.max;
    let mut report = VerificationReport::new(
        "eq9.2",
        format!("n 0..={max}, m 0..={max}, plus the inverse-transform route per m"),
    );
    for n in 0..=max {
        for m in 0..=max {
            report.case(
                &format!("n={n} m={m}"),
                &num_traits::pow(int(n as i64), m),
                &power_via_stirling(n, m),
            );
        }
    }
    // The same identity read as a binomial transform: the inverse transform
    // of n^m recovers S(m,k) k!.
    let rows = second_kind_rows(max);
    for m in 0..=max {
        let powers: Vec<Rational> = (0..=max)
            .map(|k| Rational::from(num_traits::pow(int(k as i64), m)))
            .collect();
        let recovered = inverse_binomial_transform(&powers).expect("nonempty");
        for (k, value) in recovered.iter().enumerate() {
            let expected = if k <= m {
                Rational::from(&rows[m][k] * factorial(k))
            } else {
                Rational::zero()
            };
            report.case(&format!("transform m={m} k={k}"), &expected, value);
        }
    }
    report
}

fn run_hockey_stick(options: &VerifyOptions) -> VerificationReport {
    let max = options.max;
    let mut report = VerificationReport::new("eq9.6", format!("n 0..={max}, k 0..=n"));
    for n in 0..=max {
        for k in 0..=n {
            report.case(
                &format!("n={n} k={k}"),
                &binomial(n + 1, k as i64 + 1),
                &hockey_stick(n, k).expect("k <= n"),
            );
        }
    }
    report
}

fn run_power_sum_stirling_route(options: &VerifyOptions) -> VerificationReport {
    let max = options.max;
    let mut report = VerificationReport::new(
        "eq9.7",
        format!("m 0..={max}, n 1..=100"),
    );
    let subs = map_cases((0..=max).collect::<Vec<_>>(), |m| {
        let mut sub = VerificationReport::new("", "");
        for n in 1..=100usize {
            sub.case(
                &format!("m={m} n={n}"),
                &power_sum_naive(m, n),
                &power_sum_stirling(m, n),
            );
        }
        sub
    });
    for sub in subs {
        report.absorb(sub);
    }
    report
}

fn run_orthogonality(options: &VerifyOptions) -> VerificationReport {
    let max = options.max;
    let mut report = VerificationReport::new("eq10.2", format!("m 0..={max}, n 0..={max}"));
    let subs = map_cases((0..=max).collect::<Vec<_>>(), |m| {
        let mut sub = VerificationReport::new("", "");
        for n in 0..=max {
            let expected = if m == n { Integer::one() } else { Integer::zero() };
            sub.case(&format!("m={m} n={n}"), &expected, &orthogonality_sum(m, n));
        }
        sub
    });
    for sub in subs {
        report.absorb(sub);
    }
    report
}

fn run_inverse_factorial(options: &VerifyOptions) -> VerificationReport {
    let max = options.max;
    let mut report = VerificationReport::new(
        "eq10.3",
        format!("m 1..={max}, K 0..=6"),
    );
    let subs = map_cases((1..=max).collect::<Vec<_>>(), |m| {
        let mut sub = VerificationReport::new("", "");
        for k in 0..=6usize {
            sub.absorb(inverse_factorial_expansion_check(m, k));
        }
        sub
    });
    for sub in subs {
        report.absorb(sub);
    }
    report
}
