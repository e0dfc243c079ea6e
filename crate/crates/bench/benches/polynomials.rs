use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use weaving_bench::ROW_SIZES;
use weaving_core::combinat::{lucas_rank_poly, whitney_c_explicit_row, whitney_c_recurrence_rows};
use weaving_core::LaurentPoly;

fn mul_and_divide(c: &mut Criterion) {
    let mut group = c.benchmark_group("laurent");
    for n in ROW_SIZES {
        let p = lucas_rank_poly(n);
        let d = LaurentPoly::from_i64s(0, &[1, -1, 1]);
        let prod = &p * &d;
        group.bench_with_input(BenchmarkId::new("mul", n), &n, |b, _| b.iter(|| black_box(&p) * black_box(&d)));
        group.bench_with_input(BenchmarkId::new("exact_div", n), &n, |b, _| {
            b.iter(|| black_box(&prod).exact_div(black_box(&d)).unwrap())
        });
    }
    group.finish();
}

fn whitney_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("whitney");
    for n in ROW_SIZES {
        group.bench_with_input(BenchmarkId::new("chebyshev", n), &n, |b, &n| b.iter(|| lucas_rank_poly(black_box(n))));
        group.bench_with_input(BenchmarkId::new("explicit", n), &n, |b, &n| {
            b.iter(|| whitney_c_explicit_row(black_box(n)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("recurrence", n), &n, |b, &n| {
            b.iter(|| whitney_c_recurrence_rows(black_box(n)))
        });
    }
    group.finish();
}

criterion_group!(benches, mul_and_divide, whitney_routes);
criterion_main!(benches);
