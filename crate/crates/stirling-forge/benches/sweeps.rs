//! Parallel vs sequential sweeps over the heavy kernels. Built with
//! `--no-default-features` the parallel route collapses to the sequential
//! one, so the comparison doubles as a feature-flag sanity check.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use stirling_forge::exactnum::Integer;
use stirling_forge::exec::{map_cases, map_cases_seq};
use stirling_forge::families::power_sum_stirling;
use stirling_forge::stirling::{orthogonality_sum, stirling2_explicit};

fn explicit_sum_triangle(c: &mut Criterion) {
    let mut group = c.benchmark_group("explicit-sum-triangle");
    let max_m = 40usize;
    let row = |m: usize| -> Vec<Integer> { (0..=m).map(|n| stirling2_explicit(m, n)).collect() };
    group.bench_with_input(BenchmarkId::new("parallel", max_m), &max_m, |b, &max_m| {
        b.iter(|| map_cases((0..=max_m).collect(), row))
    });
    group.bench_with_input(BenchmarkId::new("sequential", max_m), &max_m, |b, &max_m| {
        b.iter(|| map_cases_seq((0..=max_m).collect(), row))
    });
    group.finish();
}

fn orthogonality_grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("orthogonality-grid");
    let max = 24usize;
    let row = move |m: usize| -> Vec<Integer> {
        (0..=max).map(|n| orthogonality_sum(m, n)).collect()
    };
    group.bench_with_input(BenchmarkId::new("parallel", max), &max, |b, &max| {
        b.iter(|| map_cases((0..=max).collect(), row))
    });
    group.bench_with_input(BenchmarkId::new("sequential", max), &max, |b, &max| {
        b.iter(|| map_cases_seq((0..=max).collect(), row))
    });
    group.finish();
}

fn power_sum_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("power-sum-sweep");
    let max_m = 12usize;
    let sweep = |m: usize| -> Integer {
        (1..=100usize).map(|n| power_sum_stirling(m, n)).sum()
    };
    group.bench_with_input(BenchmarkId::new("parallel", max_m), &max_m, |b, &max_m| {
        b.iter(|| map_cases((0..=max_m).collect(), sweep))
    });
    group.bench_with_input(BenchmarkId::new("sequential", max_m), &max_m, |b, &max_m| {
        b.iter(|| map_cases_seq((0..=max_m).collect(), sweep))
    });
    group.finish();
}

criterion_group!(
    sweeps,
    explicit_sum_triangle,
    orthogonality_grid,
    power_sum_sweep
);
criterion_main!(sweeps);
