use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use qsix_core::chebyshev::{cheb_t, group_law_check, t_alpha};
use qsix_core::exactalg::gauss_binomial;
use qsix_core::pentagonal::{pentagonal_product, q_sum_s, series_s, AMode};
use qsix_core::series::pochhammer_x;

fn gauss_binomials(c: &mut Criterion) {
    let mut g = c.benchmark_group("gauss_binomial");
    for n in [20u32, 40, 60] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| gauss_binomial(n, n / 2)));
    }
    g.finish();
}

fn series_kernels(c: &mut Criterion) {
    let p = pochhammer_x(12, 30);
    c.bench_function("series_mul q-laurent order 30", |b| b.iter(|| black_box(&p * &p)));
    c.bench_function("series_reciprocal q-laurent order 30", |b| b.iter(|| p.reciprocal().unwrap()));
    c.bench_function("series_s order 30", |b| b.iter(|| series_s(0, 30)));
    c.bench_function("q_sum_s n 40", |b| b.iter(|| q_sum_s(40, AMode::Q)));
}

fn pentagonal(c: &mut Criterion) {
    let mut g = c.benchmark_group("pentagonal_product");
    for n in [100usize, 400] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| pentagonal_product(n)));
    }
    g.finish();
}

fn chebyshev(c: &mut Criterion) {
    c.bench_function("cheb_t 200", |b| b.iter(|| cheb_t(200)));
    c.bench_function("t_alpha order 12", |b| b.iter(|| t_alpha(12)));
    let mut g = c.benchmark_group("group_law");
    g.sample_size(10);
    g.bench_function("order 6", |b| b.iter(|| group_law_check(6)));
    g.finish();
}

criterion_group!(benches, gauss_binomials, series_kernels, pentagonal, chebyshev);
criterion_main!(benches);
