use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use s6inv_bench::general_sextic;
use s6inv_core::galois::{distinct_degree_pattern, sample_census, UniPoly};

fn frobenius_benchmark(c: &mut Criterion) {
    let f = UniPoly::new(10007, &[3, 1, 4, 1, 5, 9, 1]).unwrap();
    c.bench_function("ddf sextic mod 10007", |b| b.iter(|| distinct_degree_pattern(black_box(&f))));
    let s = general_sextic();
    c.bench_function("census primes 5..10000", |b| b.iter(|| sample_census(black_box(&s), 5, 10000)));
}

criterion_group!(benches, frobenius_benchmark);
criterion_main!(benches);
