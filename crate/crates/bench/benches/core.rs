use cfgsg_core::{
    affine_restriction, d_closure, glue, shortest_ruler, ConfigurationParams, NumericalSemigroup,
};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn bench_semigroup(c: &mut Criterion) {
    c.bench_function("semigroup <3,7>", |b| {
        b.iter(|| NumericalSemigroup::from_generators(black_box(&[3, 7])).unwrap())
    });
    let primes: Vec<u64> = (20..2000)
        .filter(|&q| cfgsg_core::arith::is_prime_power(q))
        .collect();
    c.bench_function("semigroup prime powers >= 20", |b| {
        b.iter(|| NumericalSemigroup::from_generators(black_box(&primes)).unwrap())
    });
}

fn bench_validate(c: &mut Criterion) {
    let s = affine_restriction(7, 7, 13).unwrap();
    c.bench_function("validate (7,7) restriction of AG(2,13)", |b| {
        b.iter(|| black_box(&s).validate(7, 7))
    });
}

fn bench_constructions(c: &mut Criterion) {
    let a = affine_restriction(3, 5, 5).unwrap();
    c.bench_function("glue (3,5) n=1", |b| {
        b.iter(|| glue(black_box(&a), black_box(&a), 3, 5, 1).unwrap())
    });
    c.bench_function("closure (5,5) up to 200", |b| {
        b.iter(|| d_closure(5, 5, black_box(200)).unwrap())
    });
    c.bench_function("params_from_d", |b| {
        b.iter(|| ConfigurationParams::from_d(black_box(45), 3, 5).unwrap())
    });
}

fn bench_golomb(c: &mut Criterion) {
    let mut group = c.benchmark_group("golomb");
    group.sample_size(10);
    for order in [6, 7] {
        group.bench_function(format!("shortest ruler order {order}"), |b| {
            b.iter(|| shortest_ruler(black_box(order), 60).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_semigroup,
    bench_validate,
    bench_constructions,
    bench_golomb
);
criterion_main!(benches);
