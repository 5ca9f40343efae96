//! Command-line surface: triangle tables, polynomial families, power sums,
//! the identity-verification harness, and raw series expansions.
//!
//! Exit codes: 0 success or pass, 1 verification failure or method
//! disagreement, 2 usage error. Output is deterministic for a given flag set
//! and seed; JSON documents are single-line, key-sorted, newline-terminated.

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::exactnum::{factorial, int, Integer, Rational};
use crate::families::{
    euler_poly, eulerian_poly, exponential_poly, geometric_poly, power_sum_bernoulli,
    power_sum_naive, power_sum_stirling,
};
use crate::polybasis::Polynomial;
use crate::report::VerificationReport;
use crate::series::{
    bell_egf, bernoulli_egf, bernoulli_log_trick, egf_stirling2_column, euler_poly_egf,
    fermi_expansion, inverse_factorial_expansion_check, TruncatedSeries,
};
use crate::stirling::{
    first_kind_table, first_kind_table_signed, second_kind_table, stirling1_unsigned, Triangle,
};
use crate::verify::{identity_ids, run_all, run_identity, VerifyOptions};

pub const POLY_LIMIT: usize = 100;
pub const POWERSUM_M_LIMIT: usize = 1000;
pub const NAIVE_N_LIMIT: usize = 1_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "stirling-forge",
    version,
    about = "Exact Stirling-number toolkit: triangles, polynomial families, power sums, and identity verification"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Seed for the randomized verification cases.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[value(name = "plain")]
    Plain,
    #[value(name = "json")]
    Json,
    #[value(name = "csv")]
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// Second kind S(m, n).
    #[value(name = "s2")]
    S2,
    /// Signed first kind s(m, k).
    #[value(name = "s1")]
    S1,
    /// Unsigned first kind σ(m, k).
    #[value(name = "s1u")]
    S1u,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Layout {
    /// Row m lists columns n = 0..=m.
    #[value(name = "modern")]
    Modern,
    /// The 1730 arrangement: row n lists m = n..=max_m left to right.
    #[value(name = "stirling")]
    Stirling,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Exponential polynomials φ_n.
    #[value(name = "phi")]
    Phi,
    /// Geometric polynomials ω_m.
    #[value(name = "omega")]
    Omega,
    /// Euler polynomials E_m.
    #[value(name = "euler")]
    Euler,
    /// Eulerian polynomials A_m.
    #[value(name = "eulerian")]
    Eulerian,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    #[value(name = "naive")]
    Naive,
    #[value(name = "bernoulli")]
    Bernoulli,
    #[value(name = "stirling")]
    Stirling,
    #[value(name = "all")]
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    /// e^{x(e^t-1)}: EGF of the exponential polynomials.
    #[value(name = "bell-egf")]
    BellEgf,
    /// t/(e^t-1) by series reciprocal: EGF of the Bernoulli numbers.
    #[value(name = "bernoulli-egf")]
    BernoulliEgf,
    /// The log route to the same Bernoulli series.
    #[value(name = "bernoulli-log")]
    BernoulliLog,
    /// 2e^{xt}/(e^t+1): EGF of the Euler polynomials.
    #[value(name = "euler-egf")]
    EulerEgf,
    /// 1/(mu e^{lambda t}+1).
    #[value(name = "fermi")]
    Fermi,
    /// (e^t-1)^n/n!: column EGF of the second-kind triangle.
    #[value(name = "stirling2-egf")]
    Stirling2Egf,
    /// Inverse factorial series of 1/z^{m+1} in u = 1/z, plus a numeric
    /// partial-sum demonstration at z = 10.
    #[value(name = "inverse-factorial")]
    InverseFactorial,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a Stirling triangle.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        /// Largest row index m (0..=200).
        #[arg(long, default_value_t = 9)]
        max_m: usize,
        #[arg(long, value_enum, default_value_t = Layout::Modern)]
        layout: Layout,
    },
    /// Print one polynomial from a family, coefficients ascending.
    Poly {
        #[arg(value_enum)]
        family: Family,
        /// Index within the family (0..=100).
        n: usize,
    },
    /// Compute 1^m + 2^m + ... + n^m.
    Powersum {
        m: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Sweep one identity from the registry (or `all`) and report mismatches.
    Verify {
        /// Registry id (eq1.1 ... eq10.3) or `all`.
        identity: String,
        /// Bound for the discrete index sweeps.
        #[arg(long, default_value_t = 12)]
        max: usize,
        /// Series truncation order.
        #[arg(long, default_value_t = 16)]
        order: usize,
    },
    /// Print a generating-series expansion coefficient by coefficient.
    Expand {
        #[arg(value_enum)]
        oracle: Oracle,
        /// Truncation order.
        #[arg(long, default_value_t = 12)]
        order: usize,
        /// Evaluation point for bell-egf and euler-egf (rational, e.g. -1/2).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        x: String,
        /// Column index for stirling2-egf.
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Scale parameter for fermi (rational).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
        /// Weight parameter for fermi (rational, not -1).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        mu: String,
        /// Power index for inverse-factorial (>= 1).
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Correction terms K beyond the first for inverse-factorial.
        #[arg(long, default_value_t = 4)]
        terms: usize,
    },
}

/// What a command run produced; `main` prints the streams and exits with the
/// code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn failed(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 1,
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", message.into()),
            code: 2,
        }
    }
}

pub fn execute(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Table { kind, max_m, layout } => cmd_table(kind, max_m, layout, format),
        Command::Poly { family, n } => cmd_poly(family, n, format),
        Command::Powersum { m, n, method } => cmd_powersum(m, n, method, format),
        Command::Verify { identity, max, order } => {
            let options = VerifyOptions {
                max,
                order,
                seed: cli.seed,
            };
            cmd_verify(&identity, &options, format)
        }
        Command::Expand {
            oracle,
            order,
            x,
            n,
            lambda,
            mu,
            m,
            terms,
        } => cmd_expand(oracle, order, &x, n, &lambda, &mu, m, terms, format),
    }
}

/// "p/q" or "p", arbitrary precision, reduced; None on malformed input or a
/// zero denominator.
fn parse_rational(text: &str) -> Option<Rational> {
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let n: Integer = numer.parse().ok()?;
    let d: Integer = denom.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

fn render_json(command: &str, params: Value, result: Value, notes: &[String]) -> String {
    let doc = json!({
        "command": command,
        "params": params,
        "result": result,
        "notes": notes,
    });
    let mut line = serde_json::to_string(&doc).expect("plain data serializes");
    line.push('\n');
    line
}

// ---------------------------------------------------------------- table ----

fn table_kind_name(kind: TableKind) -> &'static str {
    match kind {
        TableKind::S2 => "s2",
        TableKind::S1 => "s1",
        TableKind::S1u => "s1u",
    }
}

fn layout_name(layout: Layout) -> &'static str {
    match layout {
        Layout::Modern => "modern",
        Layout::Stirling => "stirling",
    }
}

/// The two entries where the 1730 printed tables differ from the values the
/// recurrences (and every independent route here) produce.
fn errata_notes(kind: TableKind, max_m: usize) -> Vec<String> {
    if max_m < 9 {
        return Vec::new();
    }
    match kind {
        TableKind::S2 => vec![
            "entry m=9, n=7 is 462; the 1730 printing of this table shows 461".to_string(),
        ],
        TableKind::S1 | TableKind::S1u => vec![
            "entry m=9, k=3 has magnitude 118124; the 1730 printing of this table shows 105056"
                .to_string(),
        ],
    }
}

fn cmd_table(kind: TableKind, max_m: usize, layout: Layout, format: Format) -> Outcome {
    let triangle: Triangle = match match kind {
        TableKind::S2 => second_kind_table(max_m),
        TableKind::S1 => first_kind_table_signed(max_m),
        TableKind::S1u => first_kind_table(max_m),
    } {
        Ok(t) => t,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let rows: Vec<Vec<Integer>> = match layout {
        Layout::Modern => triangle.rows().to_vec(),
        Layout::Stirling => triangle.transposed_rows(),
    };
    let notes = errata_notes(kind, max_m);
    let stdout = match format {
        Format::Plain => {
            let mut out = String::new();
            for row in &rows {
                let cells: Vec<String> = row.iter().map(Integer::to_string).collect();
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
            for note in &notes {
                out.push_str(&format!("# note: {note}\n"));
            }
            out
        }
        Format::Csv => {
            let header: Vec<String> = (0..=max_m).map(|c| format!("c{c}")).collect();
            let mut out = header.join(",");
            out.push('\n');
            for row in &rows {
                let cells: Vec<String> = row.iter().map(Integer::to_string).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            for note in &notes {
                out.push_str(&format!("# note: {note}\n"));
            }
            out
        }
        Format::Json => {
            let json_rows: Vec<Vec<String>> = rows
                .iter()
                .map(|row| row.iter().map(Integer::to_string).collect())
                .collect();
            render_json(
                "table",
                json!({
                    "kind": table_kind_name(kind),
                    "max_m": max_m as u64,
                    "layout": layout_name(layout),
                }),
                json!({ "rows": json_rows }),
                &notes,
            )
        }
    };
    Outcome::ok(stdout)
}

// ----------------------------------------------------------------- poly ----

fn family_name(family: Family) -> &'static str {
    match family {
        Family::Phi => "phi",
        Family::Omega => "omega",
        Family::Euler => "euler",
        Family::Eulerian => "eulerian",
    }
}

fn cmd_poly(family: Family, n: usize, format: Format) -> Outcome {
    if n > POLY_LIMIT {
        return Outcome::usage(format!(
            "polynomial index is capped at {POLY_LIMIT}, got {n}"
        ));
    }
    let poly: Polynomial = match family {
        Family::Phi => exponential_poly(n),
        Family::Omega => geometric_poly(n),
        Family::Euler => euler_poly(n),
        Family::Eulerian => eulerian_poly(n),
    };
    let coefficients: Vec<String> = if poly.is_zero() {
        vec!["0".to_string()]
    } else {
        poly.coeffs().iter().map(Rational::to_string).collect()
    };
    let stdout = match format {
        Format::Plain => format!("{poly}\n"),
        Format::Csv => {
            let mut out = String::from("k,coefficient\n");
            for (k, c) in coefficients.iter().enumerate() {
                out.push_str(&format!("{k},{c}\n"));
            }
            out
        }
        Format::Json => render_json(
            "poly",
            json!({ "family": family_name(family), "n": n as u64 }),
            json!({ "coefficients": coefficients, "rendered": poly.to_string() }),
            &[],
        ),
    };
    Outcome::ok(stdout)
}

// ------------------------------------------------------------- powersum ----

fn cmd_powersum(m: usize, n: usize, method: Method, format: Format) -> Outcome {
    if n == 0 {
        return Outcome::usage("power sums need n >= 1");
    }
    if m > POWERSUM_M_LIMIT {
        return Outcome::usage(format!(
            "power-sum exponent is capped at {POWERSUM_M_LIMIT}, got {m}"
        ));
    }
    let needs_naive = matches!(method, Method::Naive | Method::All);
    if needs_naive && n > NAIVE_N_LIMIT {
        return Outcome::usage(format!(
            "the naive method is capped at n <= {NAIVE_N_LIMIT}, got {n}"
        ));
    }
    // Every method reports the same quantity: 1^m + 2^m + ... + n^m. The
    // Bernoulli closed form natively sums to n-1, so it is called at n+1.
    let compute = |method: Method| -> (&'static str, String) {
        match method {
            Method::Naive => ("naive", power_sum_naive(m, n).to_string()),
            Method::Bernoulli => ("bernoulli", power_sum_bernoulli(m, n + 1).to_string()),
            Method::Stirling => ("stirling", power_sum_stirling(m, n).to_string()),
            Method::All => unreachable!("expanded below"),
        }
    };
    let values: Vec<(&'static str, String)> = match method {
        Method::All => vec![
            compute(Method::Naive),
            compute(Method::Bernoulli),
            compute(Method::Stirling),
        ],
        single => vec![compute(single)],
    };
    let agreement = values.windows(2).all(|pair| pair[0].1 == pair[1].1);
    let stdout = match format {
        Format::Plain => {
            let mut out = String::new();
            if values.len() == 1 {
                out.push_str(&format!("{}\n", values[0].1));
            } else {
                for (name, value) in &values {
                    out.push_str(&format!("{name}: {value}\n"));
                }
                if !agreement {
                    out.push_str("method disagreement detected\n");
                }
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("method,value\n");
            for (name, value) in &values {
                out.push_str(&format!("{name},{value}\n"));
            }
            out
        }
        Format::Json => {
            let mut map = serde_json::Map::new();
            for (name, value) in &values {
                map.insert((*name).to_string(), Value::String(value.clone()));
            }
            render_json(
                "powersum",
                json!({
                    "m": m as u64,
                    "n": n as u64,
                    "method": match method {
                        Method::Naive => "naive",
                        Method::Bernoulli => "bernoulli",
                        Method::Stirling => "stirling",
                        Method::All => "all",
                    },
                }),
                json!({ "values": Value::Object(map), "agreement": agreement }),
                &[],
            )
        }
    };
    if agreement {
        Outcome::ok(stdout)
    } else {
        Outcome::failed(stdout)
    }
}

// --------------------------------------------------------------- verify ----

const FAILURES_SHOWN_PLAIN: usize = 10;
const FAILURES_SHOWN_JSON: usize = 25;

fn report_line(report: &VerificationReport) -> String {
    format!(
        "{}: {} (checked {}, failures {}) [{}]\n",
        report.identity_id,
        if report.passed() { "pass" } else { "FAIL" },
        report.checked,
        report.failures.len(),
        report.range_description
    )
}

fn cmd_verify(identity: &str, options: &VerifyOptions, format: Format) -> Outcome {
    let reports: Vec<VerificationReport> = if identity == "all" {
        run_all(options)
    } else {
        match run_identity(identity, options) {
            Ok(report) => vec![report],
            Err(e) => {
                let known: Vec<&str> = identity_ids();
                return Outcome::usage(format!(
                    "{e}; use `all` or one of: {}",
                    known.join(", ")
                ));
            }
        }
    };
    let total_checked: usize = reports.iter().map(|r| r.checked).sum();
    let total_failures: usize = reports.iter().map(|r| r.failures.len()).sum();
    let all_passed = total_failures == 0;
    let stdout = match format {
        Format::Plain => {
            let mut out = String::new();
            for report in &reports {
                out.push_str(&report_line(report));
                for failure in report.failures.iter().take(FAILURES_SHOWN_PLAIN) {
                    out.push_str(&format!(
                        "  case {}: expected {}, got {}\n",
                        failure.inputs, failure.expected, failure.actual
                    ));
                }
                if report.failures.len() > FAILURES_SHOWN_PLAIN {
                    out.push_str(&format!(
                        "  ... and {} more failures\n",
                        report.failures.len() - FAILURES_SHOWN_PLAIN
                    ));
                }
            }
            if identity == "all" {
                out.push_str(&format!(
                    "all: {} ({} identities, {} checks, {} failures)\n",
                    if all_passed { "pass" } else { "FAIL" },
                    reports.len(),
                    total_checked,
                    total_failures
                ));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("id,checked,failures,passed\n");
            for report in &reports {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    report.identity_id,
                    report.checked,
                    report.failures.len(),
                    report.passed()
                ));
            }
            out
        }
        Format::Json => {
            let json_reports: Vec<Value> = reports
                .iter()
                .map(|report| {
                    let failures: Vec<Value> = report
                        .failures
                        .iter()
                        .take(FAILURES_SHOWN_JSON)
                        .map(|f| {
                            json!({
                                "inputs": f.inputs,
                                "expected": f.expected,
                                "actual": f.actual,
                            })
                        })
                        .collect();
                    json!({
                        "id": report.identity_id,
                        "range": report.range_description,
                        "checked": report.checked as u64,
                        "passed": report.passed(),
                        "failures_total": report.failures.len() as u64,
                        "failures": failures,
                    })
                })
                .collect();
            render_json(
                "verify",
                json!({
                    "identity": identity,
                    "max": options.max as u64,
                    "order": options.order as u64,
                    "seed": options.seed,
                }),
                json!({ "passed": all_passed, "reports": json_reports }),
                &[],
            )
        }
    };
    if all_passed {
        Outcome::ok(stdout)
    } else {
        Outcome::failed(stdout)
    }
}

// --------------------------------------------------------------- expand ----

fn oracle_name(oracle: Oracle) -> &'static str {
    match oracle {
        Oracle::BellEgf => "bell-egf",
        Oracle::BernoulliEgf => "bernoulli-egf",
        Oracle::BernoulliLog => "bernoulli-log",
        Oracle::EulerEgf => "euler-egf",
        Oracle::Fermi => "fermi",
        Oracle::Stirling2Egf => "stirling2-egf",
        Oracle::InverseFactorial => "inverse-factorial",
    }
}

fn render_series(
    oracle: Oracle,
    series: &TruncatedSeries,
    params: Value,
    format: Format,
) -> Outcome {
    let order = series.order();
    let coefficients: Vec<String> = series
        .coefficients()
        .iter()
        .map(Rational::to_string)
        .collect();
    let egf_values: Vec<String> = series
        .coefficients()
        .iter()
        .enumerate()
        .map(|(k, c)| (c * Rational::from(factorial(k))).to_string())
        .collect();
    let stdout = match format {
        Format::Plain => {
            let mut out = String::new();
            for k in 0..=order {
                out.push_str(&format!(
                    "{k}: {} (egf {})\n",
                    coefficients[k], egf_values[k]
                ));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("k,coefficient,egf_value\n");
            for k in 0..=order {
                out.push_str(&format!("{k},{},{}\n", coefficients[k], egf_values[k]));
            }
            out
        }
        Format::Json => render_json(
            "expand",
            params,
            json!({
                "oracle": oracle_name(oracle),
                "coefficients": coefficients,
                "egf_values": egf_values,
            }),
            &[],
        ),
    };
    Outcome::ok(stdout)
}

#[allow(clippy::too_many_arguments)]
fn cmd_expand(
    oracle: Oracle,
    order: usize,
    x: &str,
    n: usize,
    lambda: &str,
    mu: &str,
    m: usize,
    terms: usize,
    format: Format,
) -> Outcome {
    let parse = |label: &str, text: &str| -> std::result::Result<Rational, Outcome> {
        parse_rational(text).ok_or_else(|| {
            Outcome::usage(format!(
                "{label} must be a rational like 3, -2, or -1/2; got `{text}`"
            ))
        })
    };
    match oracle {
        Oracle::BellEgf => {
            let x = match parse("x", x) {
                Ok(v) => v,
                Err(out) => return out,
            };
            let series = bell_egf(&x, order);
            let params = json!({ "oracle": "bell-egf", "order": order as u64, "x": x.to_string() });
            render_series(oracle, &series, params, format)
        }
        Oracle::EulerEgf => {
            let x = match parse("x", x) {
                Ok(v) => v,
                Err(out) => return out,
            };
            let series = euler_poly_egf(&x, order);
            let params = json!({ "oracle": "euler-egf", "order": order as u64, "x": x.to_string() });
            render_series(oracle, &series, params, format)
        }
        Oracle::BernoulliEgf => {
            let series = bernoulli_egf(order);
            let params = json!({ "oracle": "bernoulli-egf", "order": order as u64 });
            render_series(oracle, &series, params, format)
        }
        Oracle::BernoulliLog => {
            let series = bernoulli_log_trick(order);
            let params = json!({ "oracle": "bernoulli-log", "order": order as u64 });
            render_series(oracle, &series, params, format)
        }
        Oracle::Stirling2Egf => {
            let series = egf_stirling2_column(n, order);
            let params = json!({ "oracle": "stirling2-egf", "order": order as u64, "n": n as u64 });
            render_series(oracle, &series, params, format)
        }
        Oracle::Fermi => {
            let lambda = match parse("lambda", lambda) {
                Ok(v) => v,
                Err(out) => return out,
            };
            let mu = match parse("mu", mu) {
                Ok(v) => v,
                Err(out) => return out,
            };
            let series = match fermi_expansion(&lambda, &mu, order) {
                Ok(s) => s,
                Err(e) => return Outcome::usage(e.to_string()),
            };
            let params = json!({
                "oracle": "fermi",
                "order": order as u64,
                "lambda": lambda.to_string(),
                "mu": mu.to_string(),
            });
            render_series(oracle, &series, params, format)
        }
        Oracle::InverseFactorial => cmd_expand_inverse_factorial(m, terms, format),
    }
}

/// Formal check of the inverse factorial series, then a numeric partial-sum
/// demonstration at z = 10. The residual is reported exactly, never asserted.
fn cmd_expand_inverse_factorial(m: usize, terms: usize, format: Format) -> Outcome {
    if m == 0 {
        return Outcome::usage("inverse-factorial needs m >= 1");
    }
    let report = inverse_factorial_expansion_check(m, terms);
    let z = Rational::from(int(10));
    let mut partial = Rational::zero();
    for k in 0..=terms {
        let mut denominator = Rational::from(Integer::from(1));
        for j in 0..=(m + k) {
            denominator *= &z + Rational::from(int(j as i64));
        }
        partial += Rational::from(stirling1_unsigned(m + k, m)) / denominator;
    }
    let target = num_traits::pow(z, m + 1).recip();
    let residual = (&target - &partial).abs();
    let stdout = match format {
        Format::Plain => {
            let mut out = report_line(&report).replace(&report.identity_id, "formal check");
            for failure in report.failures.iter().take(FAILURES_SHOWN_PLAIN) {
                out.push_str(&format!(
                    "  case {}: expected {}, got {}\n",
                    failure.inputs, failure.expected, failure.actual
                ));
            }
            out.push_str(&format!("partial sum at z=10: {partial}\n"));
            out.push_str(&format!("target 1/z^{}: {target}\n", m + 1));
            out.push_str(&format!("absolute residual: {residual}\n"));
            out
        }
        Format::Csv => {
            let mut out = String::from("quantity,value\n");
            out.push_str(&format!("formal_checked,{}\n", report.checked));
            out.push_str(&format!("formal_failures,{}\n", report.failures.len()));
            out.push_str(&format!("partial_sum,{partial}\n"));
            out.push_str(&format!("target,{target}\n"));
            out.push_str(&format!("residual,{residual}\n"));
            out
        }
        Format::Json => render_json(
            "expand",
            json!({
                "oracle": "inverse-factorial",
                "m": m as u64,
                "terms": terms as u64,
            }),
            json!({
                "oracle": "inverse-factorial",
                "formal": {
                    "range": report.range_description,
                    "checked": report.checked as u64,
                    "failures_total": report.failures.len() as u64,
                    "passed": report.passed(),
                },
                "partial_sum_at_z_10": partial.to_string(),
                "target": target.to_string(),
                "residual": residual.to_string(),
            }),
            &[],
        ),
    };
    if report.passed() {
        Outcome::ok(stdout)
    } else {
        Outcome::failed(stdout)
    }
}
